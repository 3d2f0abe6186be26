#include "verify.hpp"

#include "counting.hpp"
#include "intmatrix.hpp"
#include "plat.hpp"
#include "poly.hpp"

#include <functional>
#include <sstream>
#include <vector>

namespace ratknot {

std::string VerifyReport::summary() const
{
    std::ostringstream os;
    const std::uint64_t total = determinant_cases + signed_cases + coloring_cases;
    if (ok) {
        os << "checked " << total << " cases: all methods agree (" << determinant_cases
           << " four-way determinant, " << signed_cases << " signed minor, " << coloring_cases
           << " coloring, of which " << brute_cases << " brute-forced)";
    } else {
        os << "discrepancy: " << discrepancy;
    }
    return os.str();
}

namespace {

// Calls fn for every vector of the given length with entries in
// {1..max_abs} (positive) or {±1..±max_abs} (signed); returns false to stop.
bool for_each_vector(int length, std::int64_t max_abs, bool with_signs,
                     const std::function<bool(const std::vector<std::int64_t>&)>& fn)
{
    const std::int64_t radix = with_signs ? 2 * max_abs : max_abs;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(length), 0);
    std::vector<std::int64_t> entries(static_cast<std::size_t>(length), 0);
    for (;;) {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const std::int64_t d = digits[i];
            entries[i] = with_signs ? (d < max_abs ? d + 1 : max_abs - 1 - d) : d + 1;
        }
        if (!fn(entries)) return false;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == radix) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) return true;
    }
}

std::string describe(const TwistVector& tw) { return "R(" + tw.to_string() + ")"; }

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts)
{
    VerifyReport report;
    if (opts.max_len < 1 || opts.max_abs < 1 || opts.max_modulus < 2)
        throw std::invalid_argument("verify bounds must satisfy max_len>=1, max_n>=1, max_modulus>=2");

    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.discrepancy = msg;
        return false;
    };

    // Four determinant routes plus the coloring counts on positive vectors.
    for (int len = 1; len <= opts.max_len && report.ok; ++len) {
        for_each_vector(len, opts.max_abs, false, [&](const std::vector<std::int64_t>& entries) {
            const TwistVector tw(entries);
            const Integer via_fold = determinant(tw).absolute;
            const PolyPart part = tw.size() % 2 == 0 ? PolyPart::even : PolyPart::odd;
            const Integer via_poly = build_p(static_cast<int>(tw.size()), part).evaluate(entries);
            const Integer via_rec = tree_count_recursion(entries);
            const Integer via_trees = tree_count_matrix(checkerboard_graph(tw));
            const PlatDiagram diagram = build_plat(tw);
            const IntMatrix cm = coloring_matrix(diagram);
            const Integer via_minor = abs_int(first_minor(cm, cm.rows() - 1, cm.cols() - 1));
            ++report.determinant_cases;
            if (via_poly != via_fold || via_poly != via_rec || via_poly != via_trees ||
                via_poly != via_minor) {
                std::ostringstream os;
                os << describe(tw) << ": determinant routes disagree (polynomial " << via_poly
                   << ", recurrence fold " << via_fold << ", tree recursion " << via_rec
                   << ", matrix-tree " << via_trees << ", coloring minor " << via_minor << ")";
                return fail(os.str());
            }

            for (std::int64_t r = 2; r <= opts.max_modulus; ++r) {
                const Integer via_formula = count_colorings_formula(tw, r);
                const Integer via_snf = count_colorings_snf(cm, r);
                ++report.coloring_cases;
                if (via_formula != via_snf) {
                    std::ostringstream os;
                    os << describe(tw) << " mod " << r << ": formula count " << via_formula
                       << " != SNF count " << via_snf;
                    return fail(os.str());
                }
                Integer space = 1;
                for (int i = 0; i < diagram.arc_count(); ++i) space *= r;
                if (space <= opts.brute_cap) {
                    const Integer via_brute = count_colorings_bruteforce(diagram, r, opts.brute_cap);
                    ++report.brute_cases;
                    if (via_brute != via_formula) {
                        std::ostringstream os;
                        os << describe(tw) << " mod " << r << ": brute-force count " << via_brute
                           << " != formula count " << via_formula;
                        return fail(os.str());
                    }
                    const bool nontrivial = via_brute > r;
                    const bool expected = gcd_int(via_poly, Integer(r)) > 1;
                    if (nontrivial != expected) {
                        std::ostringstream os;
                        os << describe(tw) << " mod " << r
                           << ": nontrivial colorings should exist iff gcd(r, det) > 1";
                        return fail(os.str());
                    }
                }
            }
            return true;
        });
    }

    // Signed sweep: polynomial value against the diagram minor.
    for (int len = 1; len <= opts.max_len && report.ok; ++len) {
        for_each_vector(len, opts.max_abs, true, [&](const std::vector<std::int64_t>& entries) {
            const TwistVector tw(entries);
            const Integer via_det = determinant(tw).absolute;
            const IntMatrix cm = coloring_matrix(build_plat(tw));
            const Integer via_minor = abs_int(first_minor(cm, cm.rows() - 1, cm.cols() - 1));
            ++report.signed_cases;
            if (via_det != via_minor) {
                std::ostringstream os;
                os << describe(tw) << ": |determinant| " << via_det << " != |first minor| "
                   << via_minor;
                return fail(os.str());
            }
            return true;
        });
    }

    return report;
}

}  // namespace ratknot
