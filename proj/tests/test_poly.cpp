#include "poly.hpp"

#include "ieo.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

using namespace ratknot;

namespace {

// Independent oracle: push two top colors through every crossing of the
// twist region one at a time, using the single-crossing rule
// "emerging under-arc = 2*over - incoming under" on four strand colors.
// Positive twists put the left strand of the pair over at odd twist sites
// and the right strand over at even ones; negative twists the opposite.
ColorTriple simulate_crossings(const TwistVector& tw, const Integer& a, const Integer& b)
{
    Integer strand[5] = {0, b, b, a, a};
    for (std::size_t t = 0; t < tw.size(); ++t) {
        const bool odd_site = (t + 1) % 2 == 1;
        const std::int64_t n = tw[t];
        const int left = odd_site ? 2 : 1;
        const bool left_over = odd_site == (n > 0);
        for (std::int64_t c = 0; c < (n < 0 ? -n : n); ++c) {
            const int over = left_over ? left : left + 1;
            const int under = left_over ? left + 1 : left;
            const Integer emerging = 2 * strand[over] - strand[under];
            strand[under] = strand[over];
            strand[over] = emerging;
        }
    }
    return ColorTriple{strand[1], strand[2], strand[3]};
}

std::set<std::vector<int>> monomial_sets(const MultilinearPoly& p)
{
    std::set<std::vector<int>> out;
    for (const auto& m : p.monomials()) out.insert(m.indices);
    return out;
}

}  // namespace

TEST_CASE("twist vectors validate their entries")
{
    CHECK_THROWS_AS(TwistVector({}), std::invalid_argument);
    CHECK_THROWS_AS(TwistVector({3, 0, 2}), std::invalid_argument);
    CHECK(TwistVector({4, -3}).size() == 2);
}

TEST_CASE("twist vector parsing")
{
    CHECK(TwistVector::parse("4,-3").entries() == std::vector<std::int64_t>{4, -3});
    CHECK(TwistVector::parse(" 1 , 2 , 3 ").entries() == std::vector<std::int64_t>{1, 2, 3});
    CHECK_THROWS_AS(TwistVector::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(TwistVector::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(TwistVector::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(TwistVector::parse("1,0"), std::invalid_argument);
    CHECK(TwistVector::parse("4,-3").to_string() == "4,-3");
}

TEST_CASE("p4 and its parity parts match the known expansion")
{
    CHECK(build_p(4, PolyPart::full).to_string() ==
          "1 + n1 + n3 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3 + n1*n2*n3*n4");
    CHECK(build_p(4, PolyPart::even).to_string() == "1 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3*n4");
    CHECK(build_p(4, PolyPart::odd).to_string() == "n1 + n3 + n1*n2*n3");
}

TEST_CASE("order zero polynomial is the constant 1")
{
    CHECK(build_p(0, PolyPart::full).to_string() == "1");
    CHECK(build_p(0, PolyPart::even).to_string() == "1");
    CHECK(build_p(0, PolyPart::odd).to_string() == "0");
}

TEST_CASE("evaluation")
{
    const MultilinearPoly p2e = build_p(2, PolyPart::even);
    const std::int64_t vals[] = {4, 3};
    CHECK(p2e.evaluate(vals) == 13);  // 1 + 4*3

    const MultilinearPoly p1o = build_p(1, PolyPart::odd);
    const std::int64_t three[] = {3};
    CHECK(p1o.evaluate(three) == 3);

    // at the zero assignment only the constant monomial survives
    const std::int64_t zeros[] = {0, 0, 0, 0};
    CHECK(build_p(4, PolyPart::even).evaluate(zeros) == 1);
    CHECK(build_p(4, PolyPart::odd).evaluate(zeros) == 0);

    CHECK_THROWS_AS(p2e.evaluate(std::span<const std::int64_t>(three, 1)), std::invalid_argument);
}

TEST_CASE("advance reproduces the first worked steps")
{
    const ColorState s0 = ColorState::initial();
    CHECK(s0.left.to_string() == "1");
    CHECK(s0.middle.to_string() == "1");
    CHECK(s0.right.to_string() == "0");

    const ColorState s1 = advance(s0, 3);
    CHECK(s1.left.to_string() == "1");
    CHECK(s1.middle.to_string() == "1 + n1");
    CHECK(s1.right.to_string() == "n1");

    const ColorState s2 = advance(s1, 2);
    CHECK(s2.left.to_string() == "1 + n1*n2");
    CHECK(s2.middle.to_string() == "1 + n1 + n1*n2");
    CHECK(s2.right.to_string() == "n1");

    const ColorState s3 = advance(s2, 1);
    CHECK(s3.right.to_string() == "n1 + n3 + n1*n2*n3");

    CHECK_THROWS_AS(advance(s0, 0), std::invalid_argument);
}

TEST_CASE("propagation matches the five- and four-twist expansions")
{
    const ColorState s5 = propagate(TwistVector({1, 1, 1, 1, 1}));
    CHECK(s5.right.to_string() ==
          "n1 + n3 + n5 + n1*n2*n3 + n1*n2*n5 + n1*n4*n5 + n3*n4*n5 + n1*n2*n3*n4*n5");

    const ColorState s4 = propagate(TwistVector({2, 2, 2, 2}));
    CHECK(s4.left.to_string() == "1 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3*n4");

    const ColorState s1 = propagate(TwistVector({7}));
    CHECK(s1.left.to_string() == "1");
    CHECK(s1.middle.to_string() == "1 + n1");
    CHECK(s1.right.to_string() == "n1");
}

TEST_CASE("propagated parts equal the directly built polynomials")
{
    for (int n = 0; n <= 12; ++n) {
        ColorState state = ColorState::initial();
        for (int i = 0; i < n; ++i) state = advance(state, 1);
        CHECK(state.left == build_p(n, PolyPart::even));
        CHECK(state.middle == build_p(n, PolyPart::full));
        CHECK(state.right == build_p(n, PolyPart::odd));
    }
}

TEST_CASE("middle strand stays the sum of the outer strands")
{
    ColorState state = ColorState::initial();
    for (int i = 0; i < 12; ++i) {
        state = advance(state, 1);
        CHECK(monomial_sets(state.middle) ==
              monomial_sets(poly_union(state.left, state.right)));
    }
}

TEST_CASE("even and odd parts partition the full polynomial")
{
    for (int n = 0; n <= 12; ++n) {
        const auto even = monomial_sets(build_p(n, PolyPart::even));
        const auto odd = monomial_sets(build_p(n, PolyPart::odd));
        std::set<std::vector<int>> both = even;
        both.insert(odd.begin(), odd.end());
        CHECK(both.size() == even.size() + odd.size());  // disjoint
        CHECK(both == monomial_sets(build_p(n, PolyPart::full)));
        for (const auto& m : even) CHECK(m.size() % 2 == 0);
        for (const auto& m : odd) CHECK(m.size() % 2 == 1);
        for (const auto& m : both) CHECK(is_ieo(std::vector<int>(m.begin(), m.end()), n));
    }
}

TEST_CASE("numeric propagation matches the single-crossing simulation")
{
    // frozen case first: R(2,2) with colors 0,1
    const TwistVector figure_eight({2, 2});
    const ColorTriple frozen = propagate_numeric(figure_eight, 0, 1);
    CHECK(frozen.left == 5);
    CHECK(frozen.middle == 7);
    CHECK(frozen.right == 2);
    const ColorTriple sim = simulate_crossings(figure_eight, 0, 1);
    CHECK(sim.left == 5);
    CHECK(sim.middle == 7);
    CHECK(sim.right == 2);

    // single twist: (b, b+n(b-a), a+n(b-a))
    const ColorTriple t3 = propagate_numeric(TwistVector({3}), 10, 14);
    CHECK(t3.left == 14);
    CHECK(t3.middle == 14 + 3 * 4);
    CHECK(t3.right == 10 + 3 * 4);

    // monochrome input propagates unchanged
    const ColorTriple mono = propagate_numeric(TwistVector({5, -2, 7}), 9, 9);
    CHECK(mono.left == 9);
    CHECK(mono.middle == 9);
    CHECK(mono.right == 9);

    // sweep: every signed vector up to length 4 with |n| <= 3
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::int64_t> digits(static_cast<std::size_t>(len), 0);
        for (;;) {
            std::vector<std::int64_t> entries;
            for (auto d : digits) entries.push_back(d < 3 ? d + 1 : 2 - d);
            const TwistVector tw(entries);
            for (auto [a, b] : {std::pair<int, int>{0, 1}, {2, 5}, {-3, 4}}) {
                const ColorTriple got = propagate_numeric(tw, a, b);
                const ColorTriple want = simulate_crossings(tw, a, b);
                CHECK(got.left == want.left);
                CHECK(got.middle == want.middle);
                CHECK(got.right == want.right);
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == 6) {
                digits[pos] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
        }
    }
}

TEST_CASE("determinants of the fixture knots")
{
    const DeterminantResult trefoil = determinant(TwistVector({3}));
    CHECK(trefoil.signed_value == 3);
    CHECK(trefoil.absolute == 3);

    const DeterminantResult mixed = determinant(TwistVector({4, -3}));
    CHECK(mixed.signed_value == -11);  // 1 + 4*(-3)
    CHECK(mixed.absolute == 11);

    const DeterminantResult four = determinant(TwistVector({1, 2, 3, 4}));
    CHECK(four.signed_value == 43);  // 1 + 2 + 4 + 12 + 24
    CHECK(four.absolute == 43);
}

TEST_CASE("determinant equals the evaluated parity part")
{
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> len_dist(1, 7);
    std::uniform_int_distribution<std::int64_t> entry_dist(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> entries(static_cast<std::size_t>(len_dist(rng)));
        for (auto& e : entries) {
            do {
                e = entry_dist(rng);
            } while (e == 0);
        }
        const TwistVector tw(entries);
        const PolyPart part = tw.size() % 2 == 0 ? PolyPart::even : PolyPart::odd;
        const Integer direct = build_p(static_cast<int>(tw.size()), part).evaluate(entries);
        CHECK(determinant(tw).signed_value == direct);
    }
}

TEST_CASE("signed determinants satisfy the continuant recurrence")
{
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<std::int64_t> entry_dist(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> entries(8);
        for (auto& e : entries) {
            do {
                e = entry_dist(rng);
            } while (e == 0);
        }
        // D_0 = 1, D_1 = n_1, D_{k+1} = n_{k+1} D_k + D_{k-1}
        Integer prev = 1;
        Integer cur = entries[0];
        CHECK(determinant(TwistVector({entries[0]})).signed_value == cur);
        for (std::size_t k = 1; k < entries.size(); ++k) {
            Integer next = entries[k] * cur + prev;
            prev = cur;
            cur = next;
            const std::vector<std::int64_t> head(entries.begin(),
                                                 entries.begin() + static_cast<long>(k) + 1);
            CHECK(determinant(TwistVector(head)).signed_value == cur);
        }
    }
}

TEST_CASE("all-ones specialization gives Fibonacci numbers")
{
    Integer fib_prev = 1, fib_cur = 1;  // F(1), F(2)
    std::vector<std::int64_t> ones;
    for (int n = 1; n <= 20; ++n) {
        ones.push_back(1);
        // determinant of the n-twist all-ones vector is F(n+1)
        CHECK(determinant(TwistVector(ones)).signed_value == fib_cur);
        // p_n has F(n+2) monomials
        const Integer next = fib_prev + fib_cur;
        CHECK(build_p(n, PolyPart::full).term_count() == next);
        fib_prev = fib_cur;
        fib_cur = next;
    }
}

TEST_CASE("reduced coloring equation")
{
    CHECK(reduced_cse(TwistVector({3})).to_string() == "3*(b-a)=0");
    CHECK(reduced_cse(TwistVector({4, -3})).to_string() == "-11*(b-a)=0");
    // determinant 1 admits only trivial colorings
    const ReducedEquation unknot = reduced_cse(TwistVector({1}));
    CHECK(unknot.coefficient == 1);
    CHECK(unknot.to_string() == "1*(b-a)=0");
    // the two-twist coefficient polynomial is 1 + n1*n2
    CHECK(propagate(TwistVector({9, 9})).left.to_string() == "1 + n1*n2");
}

TEST_CASE("fresh-variable multiplication rejects stale indices")
{
    const MultilinearPoly p = build_p(3, PolyPart::full);
    CHECK_THROWS_AS(append_index(p, 2), std::invalid_argument);
    CHECK(append_index(p, 4).term_count() == p.term_count());
}
