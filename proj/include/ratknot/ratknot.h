/* ratknot — exact invariants of rational knots and links.
 *
 * C interface to the ratknot core.  All objects are opaque handles created
 * and released through this API; every fallible call returns an rk_status
 * and writes its result through out-parameters.  Numeric results are
 * returned as decimal strings because the underlying arithmetic is exact
 * and unbounded; free them with rk_string_free.
 *
 * Functions set a thread-local message retrievable via rk_last_error()
 * whenever they return a status other than RK_OK.
 */

#ifndef RATKNOT_H
#define RATKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_ERR_INVALID_ARGUMENT = 1, /* bad handle, zero twist, modulus < 2, ... */
    RK_ERR_WORK_BOUND = 2,       /* brute-force search space exceeds its cap */
    RK_ERR_NOMEM = 3,
    RK_ERR_INTERNAL = 4
} rk_status;

typedef enum rk_poly_part {
    RK_POLY_FULL = 0,
    RK_POLY_EVEN = 1,
    RK_POLY_ODD = 2
} rk_poly_part;

typedef enum rk_color_method {
    RK_COLORS_FORMULA = 0, /* r * gcd(|det|, r)            */
    RK_COLORS_SNF = 1,     /* invariant factors of the CM  */
    RK_COLORS_BRUTE = 2    /* exhaustive arc assignment    */
} rk_color_method;

typedef enum rk_tree_method {
    RK_TREES_RECURSION = 0, /* T(N+1) = n_{N+1} T(N) + T(N-1) */
    RK_TREES_MATRIX = 1     /* matrix-tree on the checkerboard graph */
} rk_tree_method;

/* Opaque handles. */
typedef struct rk_twists rk_twists;
typedef struct rk_plat rk_plat;

const char* rk_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * failing call on the same thread. */
const char* rk_last_error(void);

void rk_string_free(char* s);

/* ---- twist vectors ---- */

/* Parses comma-separated signed integers, e.g. "4,-3"; entries must be
 * nonzero and at least one is required. */
rk_status rk_twists_parse(const char* text, rk_twists** out);
rk_status rk_twists_create(const int64_t* entries, size_t count, rk_twists** out);
void rk_twists_free(rk_twists* t);
size_t rk_twists_len(const rk_twists* t);
int64_t rk_twists_entry(const rk_twists* t, size_t index);

/* ---- determinant and coloring equation ---- */

/* signed_out receives the determinant polynomial value (even part for even
 * length, odd part for odd length), abs_out its absolute value: the knot
 * determinant. */
rk_status rk_determinant(const rk_twists* t, char** signed_out, char** abs_out);

/* The single surviving coloring equation, e.g. "3*(b-a)=0". */
rk_status rk_reduced_equation(const rk_twists* t, char** equation_out);

/* ---- polynomials and color propagation ---- */

/* Canonical text of p_n or one of its parity parts, e.g.
 * "1 + n1*n2 + n1*n4 + n3*n4 + n1*n2*n3*n4"; n >= 0. */
rk_status rk_poly_text(int n, rk_poly_part part, char** out);

/* Text of the propagated strand polynomial for the given twist vector:
 * RK_POLY_EVEN selects the left strand, RK_POLY_FULL the middle,
 * RK_POLY_ODD the right. */
rk_status rk_propagate_poly(const rk_twists* t, rk_poly_part which, char** out);

/* Colors of the three strands after all twists, for top colors a and b
 * given as decimal strings. */
rk_status rk_propagate_colors(const rk_twists* t, const char* a, const char* b, char** left_out,
                              char** middle_out, char** right_out);

/* ---- counting ---- */

/* Fox colorings mod `modulus` (>= 2).  brute_cap bounds the exhaustive
 * method only; pass 0 for the default bound of 10^7 assignments. */
rk_status rk_color_count(const rk_twists* t, int64_t modulus, rk_color_method method,
                         uint64_t brute_cap, char** count_out);

/* Spanning trees of the checkerboard graph; entries must be positive. */
rk_status rk_tree_count(const rk_twists* t, rk_tree_method method, char** count_out);

/* ---- diagrams ---- */

rk_status rk_plat_build(const rk_twists* t, rk_plat** out);
void rk_plat_free(rk_plat* d);
size_t rk_plat_crossing_count(const rk_plat* d);
size_t rk_plat_arc_count(const rk_plat* d);

/* Line-oriented serialization: "X <over> <under_in> <under_out> twist=<i>"
 * per crossing, then "closure=<numerator|denominator>". */
rk_status rk_plat_text(const rk_plat* d, char** out);

/* ---- cross-method verification ---- */

typedef struct rk_verify_options {
    int32_t max_len;       /* longest twist vector, >= 1 */
    int64_t max_abs;       /* largest |n_i|, >= 1 */
    int64_t max_modulus;   /* coloring moduli 2..max_modulus */
    uint64_t brute_cap;    /* per-case brute-force bound */
} rk_verify_options;

typedef struct rk_verify_result {
    uint64_t cases;  /* total cases checked */
    int32_t ok;      /* 1 when every route agreed */
} rk_verify_result;

/* Fills opts with the default bounds (max_len 5, max_abs 3, moduli up to 7,
 * brute cap 10^6). */
void rk_verify_options_default(rk_verify_options* opts);

/* Runs the sweep; report_out (optional) receives a one-line summary or the
 * first discrepancy. */
rk_status rk_verify(const rk_verify_options* opts, rk_verify_result* result, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RATKNOT_H */
