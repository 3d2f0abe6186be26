#include "ieo.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratknot {

bool is_ieo(const std::vector<int>& terms, int n)
{
    int prev = 0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const int u = terms[j];
        if (u <= prev || u > n) return false;
        // position j+1 and term u must share parity
        if ((u & 1) != (static_cast<int>(j + 1) & 1)) return false;
        prev = u;
    }
    return true;
}

namespace {

void extend(std::vector<int>& prefix, int n, std::vector<IeoSequence>& out)
{
    out.push_back(prefix);
    const int pos = static_cast<int>(prefix.size()) + 1;
    const int low = prefix.empty() ? 1 : prefix.back() + 1;
    for (int u = low; u <= n; ++u) {
        if ((u & 1) != (pos & 1)) continue;
        prefix.push_back(u);
        extend(prefix, n, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<IeoSequence> enumerate_ieo(int n)
{
    if (n < 0) throw std::invalid_argument("enumerate_ieo: n must be non-negative");
    std::vector<IeoSequence> out;
    std::vector<int> prefix;
    extend(prefix, n, out);
    std::sort(out.begin(), out.end(), [](const IeoSequence& a, const IeoSequence& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace ratknot
