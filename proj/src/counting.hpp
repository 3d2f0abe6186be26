#pragma once

#include "intmatrix.hpp"
#include "plat.hpp"
#include "poly.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>

namespace ratknot {

// Raised when an exhaustive search would exceed its work bound; callers
// should fall back to the closed-form or normal-form route.
class WorkBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteCap = 10'000'000;

// Spanning trees of the checkerboard graph by the two-term recursion
// T(N+1) = n_{N+1}*T(N) + T(N-1), T(0) = 1, T(1) = n_1.  Entries must be
// positive; the empty list gives T(0).
Integer tree_count_recursion(std::span<const std::int64_t> entries);

// Spanning trees by the matrix-tree theorem: determinant of the Laplacian
// with the hub row and column removed.  The graph must be connected.
Integer tree_count_matrix(const CheckerboardGraph& g);

// r * gcd(|det|, r); a zero determinant gives r^2 (gcd(0, r) = r).
Integer count_colorings_formula(const TwistVector& tw, std::int64_t r);

// Product of gcd(d_i, r) over the invariant factors of the coloring matrix,
// zeros contributing r.
Integer count_colorings_snf(const IntMatrix& cm, std::int64_t r);

// Exhaustive count of arc colorings mod r satisfying every crossing
// relation.  Throws WorkBoundExceeded when r^arcs > cap.
Integer count_colorings_bruteforce(const PlatDiagram& d, std::int64_t r,
                                   std::uint64_t cap = kDefaultBruteCap);

}  // namespace ratknot
