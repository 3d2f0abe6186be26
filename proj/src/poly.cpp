#include "poly.hpp"

#include "ieo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ratknot {

TwistVector::TwistVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) throw std::invalid_argument("twist vector must have at least one entry");
    for (auto n : entries_) {
        if (n == 0) throw std::invalid_argument("twist entries must be nonzero");
    }
}

TwistVector TwistVector::parse(const std::string& text)
{
    std::vector<std::int64_t> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::size_t lo = pos, hi = comma;
        while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
        while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
        if (lo == hi) throw std::invalid_argument("empty entry in twist vector '" + text + "'");
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
        if (ec != std::errc() || ptr != text.data() + hi)
            throw std::invalid_argument("bad twist entry '" + text.substr(lo, hi - lo) + "'");
        entries.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return TwistVector(std::move(entries));
}

bool TwistVector::all_positive() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t n) { return n > 0; });
}

std::string TwistVector::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    return os.str();
}

std::string Monomial::to_string() const
{
    if (indices.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) os << '*';
        os << 'n' << indices[i];
    }
    return os.str();
}

bool monomial_less(const Monomial& a, const Monomial& b)
{
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
}

MultilinearPoly::MultilinearPoly(int arity, std::vector<Monomial> monomials)
    : arity_(arity), monomials_(std::move(monomials))
{
    if (arity_ < 0) throw std::invalid_argument("negative arity");
    std::sort(monomials_.begin(), monomials_.end(), monomial_less);
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const auto& idx = monomials_[i].indices;
        if (!std::is_sorted(idx.begin(), idx.end()) ||
            std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::invalid_argument("monomial indices must be strictly increasing");
        if (!idx.empty() && (idx.front() < 1 || idx.back() > arity_))
            throw std::invalid_argument("monomial index out of range");
        if (i > 0 && monomials_[i] == monomials_[i - 1])
            throw std::invalid_argument("duplicate monomial");
    }
}

bool MultilinearPoly::contains(const Monomial& m) const
{
    return std::binary_search(monomials_.begin(), monomials_.end(), m, monomial_less);
}

Integer MultilinearPoly::evaluate(std::span<const std::int64_t> values) const
{
    if (values.size() < static_cast<std::size_t>(arity_))
        throw std::invalid_argument("evaluate: missing assignment for a used index");
    Integer sum = 0;
    for (const auto& m : monomials_) {
        Integer prod = 1;
        for (int idx : m.indices) prod *= values[static_cast<std::size_t>(idx) - 1];
        sum += prod;
    }
    return sum;
}

std::string MultilinearPoly::to_string() const
{
    if (monomials_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (i) os << " + ";
        os << monomials_[i].to_string();
    }
    return os.str();
}

MultilinearPoly poly_union(const MultilinearPoly& a, const MultilinearPoly& b)
{
    std::vector<Monomial> all = a.monomials();
    all.insert(all.end(), b.monomials().begin(), b.monomials().end());
    return MultilinearPoly(std::max(a.arity(), b.arity()), std::move(all));
}

MultilinearPoly append_index(const MultilinearPoly& p, int index)
{
    if (index < 1) throw std::invalid_argument("variable index must be positive");
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const auto& m : p.monomials()) {
        if (!m.indices.empty() && m.indices.back() >= index)
            throw std::invalid_argument("append_index requires a fresh variable");
        Monomial e = m;
        e.indices.push_back(index);
        out.push_back(std::move(e));
    }
    return MultilinearPoly(std::max(p.arity(), index), std::move(out));
}

MultilinearPoly build_p(int n, PolyPart part)
{
    std::vector<Monomial> monos;
    for (auto& seq : enumerate_ieo(n)) {
        const bool even = seq.size() % 2 == 0;
        if (part == PolyPart::even && !even) continue;
        if (part == PolyPart::odd && even) continue;
        monos.push_back(Monomial{std::move(seq)});
    }
    return MultilinearPoly(n, std::move(monos));
}

ColorState ColorState::initial()
{
    // Top caps give colors (b, b, a) on the working strands, i.e. the
    // coefficient polynomials (1, 1, 0).
    return ColorState{MultilinearPoly::one(0), MultilinearPoly::one(0), MultilinearPoly::zero(0), 0};
}

ColorState advance(const ColorState& state, std::int64_t n)
{
    if (n == 0) throw std::invalid_argument("twist entries must be nonzero");
    const int next = state.step + 1;
    ColorState out;
    out.step = next;
    if (next % 2 == 0) {
        // even twist acts on the (left, middle) strands
        const MultilinearPoly gain = append_index(state.right, next);
        out.left = poly_union(state.left, gain);
        out.middle = poly_union(state.middle, gain);
        out.right = MultilinearPoly(next, state.right.monomials());
    } else {
        // odd twist acts on the (middle, right) strands
        const MultilinearPoly gain = append_index(state.left, next);
        out.left = MultilinearPoly(next, state.left.monomials());
        out.middle = poly_union(state.middle, gain);
        out.right = poly_union(state.right, gain);
    }
    return out;
}

ColorState propagate(const TwistVector& tw)
{
    ColorState state = ColorState::initial();
    for (auto n : tw.entries()) state = advance(state, n);
    return state;
}

namespace {

// Numeric counterpart of the twist recurrences: the values of
// (p_i^e, p_i, p_i^o) at the entries of tw, in linear time.
struct PolyValues {
    Integer even{1};
    Integer full{1};
    Integer odd{0};
};

PolyValues fold_values(const TwistVector& tw)
{
    PolyValues v;
    for (std::size_t i = 0; i < tw.size(); ++i) {
        const Integer n = tw[i];
        if ((i + 1) % 2 == 0) {
            const Integer gain = n * v.odd;
            v.even += gain;
            v.full += gain;
        } else {
            const Integer gain = n * v.even;
            v.full += gain;
            v.odd += gain;
        }
    }
    return v;
}

}  // namespace

ColorTriple propagate_numeric(const TwistVector& tw, const Integer& a, const Integer& b)
{
    const PolyValues v = fold_values(tw);
    const Integer d = b - a;
    return ColorTriple{a + d * v.even, a + d * v.full, a + d * v.odd};
}

DeterminantResult determinant(const TwistVector& tw)
{
    const PolyValues v = fold_values(tw);
    Integer signed_value = tw.size() % 2 == 0 ? v.even : v.odd;
    Integer absolute = abs_int(signed_value);
    return DeterminantResult{std::move(signed_value), std::move(absolute)};
}

std::string ReducedEquation::to_string() const
{
    return ratknot::to_string(coefficient) + "*(" + lhs + "-" + rhs + ")=0";
}

ReducedEquation reduced_cse(const TwistVector& tw)
{
    return ReducedEquation{determinant(tw).signed_value};
}

}  // namespace ratknot
