#pragma once

#include <vector>

namespace ratknot {

// An increasing sequence u_1 < u_2 < ... < u_k from {1,...,n} whose j-th
// term has the parity of j (odd positions odd, even positions even).
// The empty sequence is a member for every n.
using IeoSequence = std::vector<int>;

// True iff `terms` is a valid sequence over {1,...,n}.
bool is_ieo(const std::vector<int>& terms, int n);

// Every sequence over {1,...,n} exactly once, ordered by length and then
// lexicographically.  n == 0 yields just the empty sequence.
std::vector<IeoSequence> enumerate_ieo(int n);

}  // namespace ratknot
