#pragma once

#include "intmatrix.hpp"
#include "poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ratknot {

enum class Closure { numerator, denominator };

struct Crossing {
    int over;
    int under_in;
    int under_out;
    int twist_index;  // 1-based
};

// A 4-plat diagram of R(n_1,...,n_N): arcs are numbered 0..arc_count-1
// after closure identification, one crossing per strand crossing.
// arc_count equals the crossing count except for split closures
// (determinant 0), where one component runs over all of its crossings and
// contributes an extra arc.
class PlatDiagram {
public:
    PlatDiagram(int arc_count, std::vector<Crossing> crossings, Closure closure);

    int arc_count() const { return arc_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    Closure closure() const { return closure_; }

    // One crossing per line, "X <over> <under_in> <under_out> twist=<i>",
    // then "closure=<numerator|denominator>".
    std::string to_text() const;

private:
    int arc_count_;
    std::vector<Crossing> crossings_;
    Closure closure_;
};

// Builds the plat closure of the 4-strand twist braid: odd-index twists
// cross the middle strand pair, even-index twists the left pair; the bottom
// closure is numerator for odd N, denominator for even N.
PlatDiagram build_plat(const TwistVector& tw);

// One row per crossing: +2 at the over-arc, -1 at each under-arc, summed
// when arcs coincide.  Square, every row sums to zero; split closures get a
// redundant all-zero row so the matrix stays square.
IntMatrix coloring_matrix(const PlatDiagram& d);

// Multigraph on the shaded regions: hub vertex 0, one spine vertex per
// cluster boundary; parallel edges allowed, self-loops never occur.
struct CheckerboardGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    static constexpr int hub = 0;
};

// Hub-and-spine construction; defined for strictly positive twist entries
// (alternating diagrams).
CheckerboardGraph checkerboard_graph(const TwistVector& tw);

}  // namespace ratknot
