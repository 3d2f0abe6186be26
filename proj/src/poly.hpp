#pragma once

#include "integer.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ratknot {

// The ordered nonzero twist counts (n_1,...,n_N) of a rational knot or link.
class TwistVector {
public:
    explicit TwistVector(std::vector<std::int64_t> entries);

    // Comma-separated signed integers, whitespace tolerated: "4, -3".
    static TwistVector parse(const std::string& text);

    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    bool all_positive() const;
    std::string to_string() const;

private:
    std::vector<std::int64_t> entries_;
};

// A coefficient-1 product of distinct variables n_i; the empty index set is
// the constant 1.  Index lists are kept sorted ascending.
struct Monomial {
    std::vector<int> indices;

    bool operator==(const Monomial&) const = default;
    std::string to_string() const;
};

// Canonical monomial order: by degree, then lexicographic on the indices.
bool monomial_less(const Monomial& a, const Monomial& b);

// A finite set of distinct coefficient-1 multilinear monomials over the
// variables n_1..n_arity, held in canonical order.
class MultilinearPoly {
public:
    MultilinearPoly() = default;
    MultilinearPoly(int arity, std::vector<Monomial> monomials);

    static MultilinearPoly zero(int arity) { return MultilinearPoly(arity, {}); }
    static MultilinearPoly one(int arity) { return MultilinearPoly(arity, {Monomial{}}); }

    int arity() const { return arity_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t term_count() const { return monomials_.size(); }
    bool contains(const Monomial& m) const;

    // Exact value at n_i = values[i-1]; every index up to arity must be
    // assigned, otherwise std::invalid_argument.
    Integer evaluate(std::span<const std::int64_t> values) const;

    // "1 + n1*n2 + n1*n4"; the zero polynomial prints as "0".
    std::string to_string() const;

    bool operator==(const MultilinearPoly&) const = default;

private:
    int arity_ = 0;
    std::vector<Monomial> monomials_;
};

// Disjoint union of the monomial sets; throws if a monomial repeats.
MultilinearPoly poly_union(const MultilinearPoly& a, const MultilinearPoly& b);

// Multiply every monomial by the fresh variable n_index (index must not
// occur in the polynomial).
MultilinearPoly append_index(const MultilinearPoly& p, int index);

enum class PolyPart { full, even, odd };

// The determinant polynomial p_n, or its even/odd-degree part, built by
// direct enumeration of the index sequences.
MultilinearPoly build_p(int n, PolyPart part);

// Symbolic colors on the three working strands after `step` twists, as
// polynomials P with color = a + (b-a)P.  Invariant: middle = left + right.
struct ColorState {
    MultilinearPoly left;    // p_i^e
    MultilinearPoly middle;  // p_i
    MultilinearPoly right;   // p_i^o

    int step = 0;

    static ColorState initial();
};

// Absorb twist step+1 with n crossings (n enters the state symbolically as
// the fresh variable; its sign/magnitude matter only on evaluation).
ColorState advance(const ColorState& state, std::int64_t n);

// Fold all twists of tw from the initial state.
ColorState propagate(const TwistVector& tw);

struct ColorTriple {
    Integer left;
    Integer middle;
    Integer right;
};

// Numeric colors a + (b-a)*P at the entries of tw, for input colors a, b.
ColorTriple propagate_numeric(const TwistVector& tw, const Integer& a, const Integer& b);

struct DeterminantResult {
    Integer signed_value;  // p_N^e at the entries for even N, p_N^o for odd N
    Integer absolute;
};

DeterminantResult determinant(const TwistVector& tw);

// The single surviving coloring equation D*(b-a) = 0.
struct ReducedEquation {
    Integer coefficient;
    std::string lhs = "b";
    std::string rhs = "a";

    std::string to_string() const;  // "3*(b-a)=0"
};

ReducedEquation reduced_cse(const TwistVector& tw);

}  // namespace ratknot
