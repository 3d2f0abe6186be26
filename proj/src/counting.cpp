#include "counting.hpp"

#include <numeric>
#include <vector>

namespace ratknot {

Integer tree_count_recursion(std::span<const std::int64_t> entries)
{
    for (auto n : entries) {
        if (n <= 0) throw std::invalid_argument("tree count requires positive twist entries");
    }
    Integer prev = 1;  // T(0)
    Integer cur = 1;
    bool have_cur = false;
    for (auto n : entries) {
        if (!have_cur) {
            cur = n;  // T(1)
            have_cur = true;
            continue;
        }
        Integer next = n * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return have_cur ? cur : prev;
}

Integer tree_count_matrix(const CheckerboardGraph& g)
{
    if (g.vertex_count <= 0) throw std::invalid_argument("graph must have at least one vertex");

    // connectivity check
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& e : g.edges) parent[static_cast<std::size_t>(find(e.first))] = find(e.second);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (find(v) != find(0)) throw std::invalid_argument("graph is disconnected");
    }

    // reduced Laplacian: hub row/column dropped, vertex v -> index v-1
    const std::size_t n = static_cast<std::size_t>(g.vertex_count) - 1;
    IntMatrix lap(n, n);
    for (const auto& [u, v] : g.edges) {
        if (u != CheckerboardGraph::hub) lap.at(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(u - 1)) += 1;
        if (v != CheckerboardGraph::hub) lap.at(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1)) += 1;
        if (u != CheckerboardGraph::hub && v != CheckerboardGraph::hub) {
            lap.at(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) -= 1;
            lap.at(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) -= 1;
        }
    }
    return det_exact(lap);
}

Integer count_colorings_formula(const TwistVector& tw, std::int64_t r)
{
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    const Integer d = determinant(tw).absolute;
    return r * gcd_int(d, Integer(r));
}

Integer count_colorings_snf(const IntMatrix& cm, std::int64_t r)
{
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    if (cm.rows() != cm.cols()) throw std::invalid_argument("coloring matrix must be square");
    const SnfResult snf = smith_normal_form(cm);
    Integer count = 1;
    for (const auto& d : snf.diagonal) count *= gcd_int(d, Integer(r));
    return count;
}

Integer count_colorings_bruteforce(const PlatDiagram& d, std::int64_t r, std::uint64_t cap)
{
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    const int arcs = d.arc_count();
    Integer space = 1;
    for (int i = 0; i < arcs; ++i) space *= r;
    if (space > cap)
        throw WorkBoundExceeded("coloring search space " + to_string(space) +
                                " exceeds work bound " + std::to_string(cap));

    // flat crossing table for the hot loop
    struct Triple {
        int over, u1, u2;
    };
    std::vector<Triple> rel;
    rel.reserve(d.crossings().size());
    for (const auto& c : d.crossings()) rel.push_back({c.over, c.under_in, c.under_out});

    std::vector<std::int64_t> color(static_cast<std::size_t>(arcs), 0);
    const std::int64_t two_r = 2 * r;
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& t : rel) {
            const std::int64_t lhs = 2 * color[static_cast<std::size_t>(t.over)] + two_r -
                                     color[static_cast<std::size_t>(t.u1)] -
                                     color[static_cast<std::size_t>(t.u2)];
            if (lhs % r != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;

        int pos = 0;
        while (pos < arcs && ++color[static_cast<std::size_t>(pos)] == r) {
            color[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == arcs) break;
    }
    return Integer(count);
}

}  // namespace ratknot
