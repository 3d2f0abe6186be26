#include "plat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ratknot {

PlatDiagram::PlatDiagram(int arc_count, std::vector<Crossing> crossings, Closure closure)
    : arc_count_(arc_count), crossings_(std::move(crossings)), closure_(closure)
{
    for (const auto& c : crossings_) {
        if (c.over < 0 || c.over >= arc_count_ || c.under_in < 0 || c.under_in >= arc_count_ ||
            c.under_out < 0 || c.under_out >= arc_count_)
            throw std::invalid_argument("crossing references an arc outside the diagram");
    }
}

std::string PlatDiagram::to_text() const
{
    std::ostringstream os;
    for (const auto& c : crossings_)
        os << "X " << c.over << ' ' << c.under_in << ' ' << c.under_out << " twist=" << c.twist_index
           << '\n';
    os << "closure=" << (closure_ == Closure::numerator ? "numerator" : "denominator") << '\n';
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // true when the merge joined two distinct classes
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

// Strand bookkeeping: strands are numbered 1..4 left to right, each carrying
// the id of the arc currently running along it.  The top caps join strands
// (1,2) and (3,4).  A crossing swaps the two strands of its pair; the
// under-strand's arc ends there and a fresh arc id continues below.
//
// Over-strand choice per twist (constant within a twist):
//   odd twist, n > 0  -> left strand of the (2,3) pair goes over
//   even twist, n > 0 -> right strand of the (1,2) pair goes over
// and the opposite strand for n < 0.  This is the convention under which the
// crossing relations reproduce the color transfer (a,b) -> (a+n(b-a), b+n(b-a))
// with the signed n of the checkerboard shading; the cross-method sweep in the
// acceptance suite pins it.
PlatDiagram build_plat(const TwistVector& tw)
{
    const std::size_t n_twists = tw.size();
    std::vector<Crossing> crossings;
    std::size_t total = 0;
    for (auto n : tw.entries()) total += static_cast<std::size_t>(std::llabs(n));
    crossings.reserve(total);

    int next_arc = 2;
    int strand_arc[5] = {0, 0, 0, 1, 1};  // 1-based strand -> raw arc id

    for (std::size_t t = 0; t < n_twists; ++t) {
        const int twist_index = static_cast<int>(t) + 1;
        const bool odd = twist_index % 2 == 1;
        const std::int64_t n = tw[t];
        const int left = odd ? 2 : 1;      // left strand of the crossing pair
        const bool left_over = odd == (n > 0);
        const std::int64_t count = std::llabs(n);
        for (std::int64_t c = 0; c < count; ++c) {
            const int right = left + 1;
            const int over_strand = left_over ? left : right;
            const int under_strand = left_over ? right : left;
            const int over_arc = strand_arc[over_strand];
            const int under_in = strand_arc[under_strand];
            const int under_out = next_arc++;
            crossings.push_back(Crossing{over_arc, under_in, under_out, twist_index});
            // strands swap sides; the over-arc continues, the fresh arc
            // emerges where the under-strand lands
            strand_arc[under_strand] = over_arc;
            strand_arc[over_strand] = under_out;
        }
    }

    // Bottom closure: odd N caps (1,2) and (3,4) (numerator), even N caps
    // (2,3) and (1,4) (denominator).  A cap joining two ends of one arc is
    // a no-op; that happens exactly when a component runs over every one of
    // its crossings (split closures, determinant 0), leaving one arc more
    // than there are crossings.
    const Closure closure = n_twists % 2 == 1 ? Closure::numerator : Closure::denominator;
    UnionFind uf(next_arc);
    if (closure == Closure::numerator) {
        uf.unite(strand_arc[1], strand_arc[2]);
        uf.unite(strand_arc[3], strand_arc[4]);
    } else {
        uf.unite(strand_arc[2], strand_arc[3]);
        uf.unite(strand_arc[1], strand_arc[4]);
    }

    // Compact to canonical arc ids in order of first appearance.
    std::unordered_map<int, int> compact;
    auto id_of = [&](int raw) {
        const int root = uf.find(raw);
        return compact.try_emplace(root, static_cast<int>(compact.size())).first->second;
    };
    for (auto& c : crossings) {
        c.over = id_of(c.over);
        c.under_in = id_of(c.under_in);
        c.under_out = id_of(c.under_out);
    }

    const int arc_count = static_cast<int>(compact.size());
    if (arc_count != static_cast<int>(crossings.size()) &&
        arc_count != static_cast<int>(crossings.size()) + 1)
        throw std::logic_error("arc count inconsistent with crossing count after closure");
    return PlatDiagram(arc_count, std::move(crossings), closure);
}

IntMatrix coloring_matrix(const PlatDiagram& d)
{
    // Square by construction: when the diagram has one arc more than it has
    // crossings (split closures), a redundant 0 = 0 equation pads the system.
    const std::size_t n =
        std::max(d.crossings().size(), static_cast<std::size_t>(d.arc_count()));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const auto& c = d.crossings()[i];
        m.at(i, static_cast<std::size_t>(c.over)) += 2;
        m.at(i, static_cast<std::size_t>(c.under_in)) -= 1;
        m.at(i, static_cast<std::size_t>(c.under_out)) -= 1;
    }
    return m;
}

CheckerboardGraph checkerboard_graph(const TwistVector& tw)
{
    if (!tw.all_positive())
        throw std::invalid_argument("checkerboard graph requires strictly positive twist entries");

    CheckerboardGraph g;
    g.vertex_count = 2;  // hub 0 and the initial spine end
    int spine = 1;
    for (std::size_t t = 0; t < tw.size(); ++t) {
        const std::int64_t n = tw[t];
        if ((t + 1) % 2 == 1) {
            // parallel cluster between the spine end and the hub
            for (std::int64_t k = 0; k < n; ++k) g.edges.emplace_back(spine, CheckerboardGraph::hub);
        } else {
            // consecutive sequence: a path of n fresh edges
            for (std::int64_t k = 0; k < n; ++k) {
                const int next = g.vertex_count++;
                g.edges.emplace_back(spine, next);
                spine = next;
            }
        }
    }
    if (tw.size() % 2 == 0) {
        // denominator closure folds the last spine vertex into the hub;
        // it is the most recently created vertex, so ids stay compact
        for (auto& e : g.edges) {
            if (e.first == spine) e.first = CheckerboardGraph::hub;
            if (e.second == spine) e.second = CheckerboardGraph::hub;
        }
        --g.vertex_count;
    }
    for (const auto& e : g.edges) {
        if (e.first == e.second) throw std::logic_error("checkerboard graph grew a self-loop");
    }
    return g;
}

}  // namespace ratknot
