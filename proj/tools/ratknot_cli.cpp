// Command-line front end for the ratknot shared library.  Talks to the core
// exclusively through the C API in ratknot/ratknot.h.

#include <ratknot/ratknot.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitWorkBound = 4;

struct StringDeleter {
    void operator()(char* s) const { rk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TwistsDeleter {
    void operator()(rk_twists* t) const { rk_twists_free(t); }
};
using OwnedTwists = std::unique_ptr<rk_twists, TwistsDeleter>;

int exit_code_for(rk_status status)
{
    switch (status) {
        case RK_OK: return kExitOk;
        case RK_ERR_WORK_BOUND: return kExitWorkBound;
        case RK_ERR_INVALID_ARGUMENT: return kExitInvalidInput;
        default: return 1;
    }
}

int report_error(rk_status status)
{
    std::cerr << "error: " << rk_last_error() << "\n";
    return exit_code_for(status);
}

OwnedTwists parse_twists(const std::string& text, rk_status& status)
{
    rk_twists* raw = nullptr;
    status = rk_twists_parse(text.c_str(), &raw);
    return OwnedTwists(raw);
}

// Big results print as decimal strings; values that fit in an int64 become
// plain JSON numbers so scripting stays convenient.
json json_number(const std::string& decimal)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(decimal, &used);
        if (used == decimal.size()) return json(v);
    } catch (const std::exception&) {
    }
    return json(decimal);
}

struct Request {
    std::string twists;
    std::string format = "plain";
    std::string part = "full";
    std::string method;
    std::string color_a = "0";
    std::string color_b = "1";
    std::int64_t modulus = 0;
    std::uint64_t brute_cap = 10'000'000;
    int poly_order = 0;
    rk_verify_options verify_opts{};
};

void emit(const Request& req, const json& fields, const std::string& plain)
{
    if (req.format == "json")
        std::cout << fields.dump() << "\n";
    else
        std::cout << plain << "\n";
}

int run_det(const Request& req)
{
    rk_status status;
    OwnedTwists tw = parse_twists(req.twists, status);
    if (status != RK_OK) return report_error(status);
    char *signed_raw = nullptr, *abs_raw = nullptr, *eq_raw = nullptr;
    status = rk_determinant(tw.get(), &signed_raw, &abs_raw);
    OwnedString signed_s(signed_raw), abs_s(abs_raw);
    if (status != RK_OK) return report_error(status);
    status = rk_reduced_equation(tw.get(), &eq_raw);
    OwnedString eq(eq_raw);
    if (status != RK_OK) return report_error(status);
    emit(req,
         json{{"signed", json_number(signed_s.get())},
              {"abs", json_number(abs_s.get())},
              {"equation", eq.get()}},
         std::string("signed=") + signed_s.get() + " abs=" + abs_s.get() + " equation=" + eq.get());
    return kExitOk;
}

rk_poly_part part_from_name(const std::string& name)
{
    if (name == "even") return RK_POLY_EVEN;
    if (name == "odd") return RK_POLY_ODD;
    return RK_POLY_FULL;
}

int run_poly(const Request& req)
{
    char* raw = nullptr;
    const rk_status status = rk_poly_text(req.poly_order, part_from_name(req.part), &raw);
    OwnedString text(raw);
    if (status != RK_OK) return report_error(status);
    emit(req, json{{"poly", text.get()}}, text.get());
    return kExitOk;
}

int run_colors(const Request& req)
{
    rk_status status;
    OwnedTwists tw = parse_twists(req.twists, status);
    if (status != RK_OK) return report_error(status);
    rk_color_method method = RK_COLORS_FORMULA;
    if (req.method == "snf") method = RK_COLORS_SNF;
    else if (req.method == "brute") method = RK_COLORS_BRUTE;
    if (req.modulus == 2)
        std::cerr << "note: modulus 2 accepted; the usual coloring setting assumes r >= 3\n";
    char* raw = nullptr;
    status = rk_color_count(tw.get(), req.modulus, method, req.brute_cap, &raw);
    OwnedString count(raw);
    if (status != RK_OK) return report_error(status);
    emit(req, json{{"count", json_number(count.get())}}, count.get());
    return kExitOk;
}

int run_trees(const Request& req)
{
    rk_status status;
    OwnedTwists tw = parse_twists(req.twists, status);
    if (status != RK_OK) return report_error(status);
    const rk_tree_method method = req.method == "matrix" ? RK_TREES_MATRIX : RK_TREES_RECURSION;
    char* raw = nullptr;
    status = rk_tree_count(tw.get(), method, &raw);
    OwnedString count(raw);
    if (status != RK_OK) return report_error(status);
    emit(req, json{{"trees", json_number(count.get())}}, count.get());
    return kExitOk;
}

int run_propagate(const Request& req)
{
    rk_status status;
    OwnedTwists tw = parse_twists(req.twists, status);
    if (status != RK_OK) return report_error(status);
    char *l_raw = nullptr, *m_raw = nullptr, *r_raw = nullptr;
    status = rk_propagate_colors(tw.get(), req.color_a.c_str(), req.color_b.c_str(), &l_raw,
                                 &m_raw, &r_raw);
    OwnedString l(l_raw), m(m_raw), r(r_raw);
    if (status != RK_OK) return report_error(status);
    emit(req,
         json{{"l", json_number(l.get())}, {"m", json_number(m.get())}, {"r", json_number(r.get())}},
         std::string("l=") + l.get() + " m=" + m.get() + " r=" + r.get());
    return kExitOk;
}

int run_verify(const Request& req)
{
    rk_verify_result result{};
    char* raw = nullptr;
    const rk_status status = rk_verify(&req.verify_opts, &result, &raw);
    OwnedString report(raw);
    if (status != RK_OK) return report_error(status);
    emit(req,
         json{{"cases", result.cases}, {"ok", result.ok != 0}, {"report", report.get()}},
         report.get());
    return result.ok ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact determinants, colorings and spanning-tree counts of rational knots"};
    app.require_subcommand(1);

    Request req;
    rk_verify_options_default(&req.verify_opts);

    const std::string twists_help = "twist counts n1,n2,... (signed, nonzero)";

    CLI::App* det = app.add_subcommand("det", "determinant and reduced coloring equation");
    det->add_option("twists", req.twists, twists_help)->required();
    det->add_option("--format", req.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    CLI::App* poly = app.add_subcommand("poly", "determinant polynomial in canonical text form");
    poly->add_option("n", req.poly_order, "number of twist variables")->required()
        ->check(CLI::NonNegativeNumber);
    poly->add_option("--part", req.part, "full, even or odd")
        ->check(CLI::IsMember({"full", "even", "odd"}));
    poly->add_option("--format", req.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    CLI::App* colors = app.add_subcommand("colors", "number of Fox colorings for a modulus");
    colors->add_option("twists", req.twists, twists_help)->required();
    colors->add_option("--modulus", req.modulus, "coloring modulus r >= 2")->required();
    req.method = "formula";
    colors->add_option("--method", req.method, "formula, snf or brute")
        ->check(CLI::IsMember({"formula", "snf", "brute"}));
    colors->add_option("--cap", req.brute_cap, "work bound for --method brute");
    colors->add_option("--format", req.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    CLI::App* trees = app.add_subcommand("trees", "spanning trees of the checkerboard graph");
    trees->add_option("twists", req.twists, twists_help)->required();
    trees->add_option("--method", req.method, "recursion or matrix")
        ->check(CLI::IsMember({"recursion", "matrix"}));
    trees->add_option("--format", req.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    CLI::App* propagate = app.add_subcommand("propagate", "strand colors after all twists");
    propagate->add_option("twists", req.twists, twists_help)->required();
    propagate->add_option("--a", req.color_a, "left input color (default 0)");
    propagate->add_option("--b", req.color_b, "right input color (default 1)");
    propagate->add_option("--format", req.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "cross-check every method over a sweep");
    verify->add_option("--max-len", req.verify_opts.max_len, "longest twist vector (default 5)");
    verify->add_option("--max-n", req.verify_opts.max_abs, "largest |n_i| (default 3)");
    verify->add_option("--max-modulus", req.verify_opts.max_modulus,
                       "largest coloring modulus (default 7)");
    verify->add_option("--brute-cap", req.verify_opts.brute_cap,
                       "per-case brute-force bound (default 10^6)");
    verify->add_option("--format", req.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    if (det->parsed()) return run_det(req);
    if (poly->parsed()) return run_poly(req);
    if (colors->parsed()) return run_colors(req);
    if (trees->parsed()) return run_trees(req);
    if (propagate->parsed()) return run_propagate(req);
    if (verify->parsed()) return run_verify(req);
    return kExitInvalidInput;
}
