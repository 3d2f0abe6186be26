#include "ratknot/ratknot.h"

#include "counting.hpp"
#include "plat.hpp"
#include "poly.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

using namespace ratknot;

struct rk_twists {
    TwistVector value;
};

struct rk_plat {
    PlatDiagram value;
};

namespace {

thread_local std::string t_last_error;

rk_status set_error(rk_status status, const std::string& message)
{
    t_last_error = message;
    return status;
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rk_status store(char** out, const std::string& s)
{
    if (!out) return RK_OK;
    *out = dup_string(s);
    return *out ? RK_OK : set_error(RK_ERR_NOMEM, "out of memory");
}

// Runs fn, translating the library's exceptions to status codes.
template <typename Fn>
rk_status guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const WorkBoundExceeded& e) {
        return set_error(RK_ERR_WORK_BOUND, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(RK_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(RK_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return set_error(RK_ERR_INTERNAL, e.what());
    }
}

Integer parse_integer(const char* text, const char* what)
{
    if (!text) throw std::invalid_argument(std::string(what) + " must not be null");
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    }
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "1.0.0"; }

const char* rk_last_error(void) { return t_last_error.c_str(); }

void rk_string_free(char* s) { std::free(s); }

rk_status rk_twists_parse(const char* text, rk_twists** out)
{
    return guarded([&]() -> rk_status {
        if (!text || !out) return set_error(RK_ERR_INVALID_ARGUMENT, "null argument");
        *out = new rk_twists{TwistVector::parse(text)};
        return RK_OK;
    });
}

rk_status rk_twists_create(const int64_t* entries, size_t count, rk_twists** out)
{
    return guarded([&]() -> rk_status {
        if (!entries || !out) return set_error(RK_ERR_INVALID_ARGUMENT, "null argument");
        *out = new rk_twists{TwistVector(std::vector<std::int64_t>(entries, entries + count))};
        return RK_OK;
    });
}

void rk_twists_free(rk_twists* t) { delete t; }

size_t rk_twists_len(const rk_twists* t) { return t ? t->value.size() : 0; }

int64_t rk_twists_entry(const rk_twists* t, size_t index)
{
    if (!t || index >= t->value.size()) return 0;
    return t->value[index];
}

rk_status rk_determinant(const rk_twists* t, char** signed_out, char** abs_out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        const DeterminantResult det = determinant(t->value);
        if (rk_status st = store(signed_out, to_string(det.signed_value)); st != RK_OK) return st;
        return store(abs_out, to_string(det.absolute));
    });
}

rk_status rk_reduced_equation(const rk_twists* t, char** equation_out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        return store(equation_out, reduced_cse(t->value).to_string());
    });
}

rk_status rk_poly_text(int n, rk_poly_part part, char** out)
{
    return guarded([&]() -> rk_status {
        if (n < 0) return set_error(RK_ERR_INVALID_ARGUMENT, "polynomial order must be non-negative");
        PolyPart p;
        switch (part) {
            case RK_POLY_FULL: p = PolyPart::full; break;
            case RK_POLY_EVEN: p = PolyPart::even; break;
            case RK_POLY_ODD: p = PolyPart::odd; break;
            default: return set_error(RK_ERR_INVALID_ARGUMENT, "bad polynomial part");
        }
        return store(out, build_p(n, p).to_string());
    });
}

rk_status rk_propagate_poly(const rk_twists* t, rk_poly_part which, char** out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        const ColorState state = propagate(t->value);
        switch (which) {
            case RK_POLY_EVEN: return store(out, state.left.to_string());
            case RK_POLY_FULL: return store(out, state.middle.to_string());
            case RK_POLY_ODD: return store(out, state.right.to_string());
            default: return set_error(RK_ERR_INVALID_ARGUMENT, "bad strand selector");
        }
    });
}

rk_status rk_propagate_colors(const rk_twists* t, const char* a, const char* b, char** left_out,
                              char** middle_out, char** right_out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        const ColorTriple colors =
            propagate_numeric(t->value, parse_integer(a, "color a"), parse_integer(b, "color b"));
        if (rk_status st = store(left_out, to_string(colors.left)); st != RK_OK) return st;
        if (rk_status st = store(middle_out, to_string(colors.middle)); st != RK_OK) return st;
        return store(right_out, to_string(colors.right));
    });
}

rk_status rk_color_count(const rk_twists* t, int64_t modulus, rk_color_method method,
                         uint64_t brute_cap, char** count_out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        Integer count;
        switch (method) {
            case RK_COLORS_FORMULA:
                count = count_colorings_formula(t->value, modulus);
                break;
            case RK_COLORS_SNF:
                count = count_colorings_snf(coloring_matrix(build_plat(t->value)), modulus);
                break;
            case RK_COLORS_BRUTE:
                count = count_colorings_bruteforce(build_plat(t->value), modulus,
                                                   brute_cap ? brute_cap : kDefaultBruteCap);
                break;
            default:
                return set_error(RK_ERR_INVALID_ARGUMENT, "bad coloring method");
        }
        return store(count_out, to_string(count));
    });
}

rk_status rk_tree_count(const rk_twists* t, rk_tree_method method, char** count_out)
{
    return guarded([&]() -> rk_status {
        if (!t) return set_error(RK_ERR_INVALID_ARGUMENT, "null twist vector");
        Integer count;
        switch (method) {
            case RK_TREES_RECURSION:
                count = tree_count_recursion(t->value.entries());
                break;
            case RK_TREES_MATRIX:
                count = tree_count_matrix(checkerboard_graph(t->value));
                break;
            default:
                return set_error(RK_ERR_INVALID_ARGUMENT, "bad tree method");
        }
        return store(count_out, to_string(count));
    });
}

rk_status rk_plat_build(const rk_twists* t, rk_plat** out)
{
    return guarded([&]() -> rk_status {
        if (!t || !out) return set_error(RK_ERR_INVALID_ARGUMENT, "null argument");
        *out = new rk_plat{build_plat(t->value)};
        return RK_OK;
    });
}

void rk_plat_free(rk_plat* d) { delete d; }

size_t rk_plat_crossing_count(const rk_plat* d) { return d ? d->value.crossings().size() : 0; }

size_t rk_plat_arc_count(const rk_plat* d)
{
    return d ? static_cast<size_t>(d->value.arc_count()) : 0;
}

rk_status rk_plat_text(const rk_plat* d, char** out)
{
    return guarded([&]() -> rk_status {
        if (!d) return set_error(RK_ERR_INVALID_ARGUMENT, "null diagram");
        return store(out, d->value.to_text());
    });
}

void rk_verify_options_default(rk_verify_options* opts)
{
    if (!opts) return;
    const VerifyOptions d;
    opts->max_len = d.max_len;
    opts->max_abs = d.max_abs;
    opts->max_modulus = d.max_modulus;
    opts->brute_cap = d.brute_cap;
}

rk_status rk_verify(const rk_verify_options* opts, rk_verify_result* result, char** report_out)
{
    return guarded([&]() -> rk_status {
        VerifyOptions vo;
        if (opts) {
            vo.max_len = opts->max_len;
            vo.max_abs = opts->max_abs;
            vo.max_modulus = opts->max_modulus;
            vo.brute_cap = opts->brute_cap;
        }
        const VerifyReport report = run_verify(vo);
        if (result) {
            result->cases =
                report.determinant_cases + report.signed_cases + report.coloring_cases;
            result->ok = report.ok ? 1 : 0;
        }
        return store(report_out, report.summary());
    });
}

}  // extern "C"
