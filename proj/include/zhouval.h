/*
 * zhouval C API: exact valuation-theoretic invariants of monomial-singular
 * weights and monomial curve germs, plus their Monte-Carlo verification.
 *
 * Conventions:
 *   - every function returns a zv_status; ZV_OK means success
 *   - on failure, zv_last_error() holds a thread-local message and
 *     zv_last_error_position() a byte offset when the error has one
 *   - exact rationals cross the boundary as "num/den" strings
 *   - returned strings are heap-allocated; release them with zv_string_free
 *   - handles are opaque; release with the matching *_free
 */

#ifndef ZHOUVAL_H
#define ZHOUVAL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zv_status {
    ZV_OK = 0,
    ZV_ERR_INVALID_ARGUMENT = 1,
    ZV_ERR_SYNTAX = 2,
    ZV_ERR_DOMAIN = 3,        /* input outside the exactly-computable class */
    ZV_ERR_PRECONDITION = 4,  /* operation precondition violated */
    ZV_ERR_BUDGET = 5,        /* numeric budget exhausted without a verdict */
    ZV_ERR_INTERNAL = 6
} zv_status;

const char* zv_version(void);
const char* zv_status_name(zv_status s);
const char* zv_last_error(void);
size_t zv_last_error_position(void);
void zv_string_free(char* s);

/* -------- polynomials (exact rational coefficients) -------- */

typedef struct zv_poly zv_poly;

zv_status zv_poly_parse(const char* text, const char* const* variables, size_t nvars,
                        zv_poly** out);
zv_status zv_poly_print(const zv_poly* p, char** out);
zv_status zv_poly_mul(const zv_poly* a, const zv_poly* b, zv_poly** out);
/* Newton-polytope data as JSON: {"support": [[e..]..], "vertices": [[e..]..]} */
zv_status zv_poly_newton(const zv_poly* p, char** json_out);
void zv_poly_free(zv_poly* p);

/* -------- analytic-singularity weights -------- */

typedef struct zv_weight zv_weight;

/* scale and each a_j are rational strings ("1", "5/6", ...). */
zv_status zv_weight_new(const char* scale, const zv_poly* const* generators,
                        const char* const* a, size_t count, zv_weight** out);
zv_status zv_weight_truncate(const zv_weight* w, unsigned n, zv_weight** out);
void zv_weight_free(zv_weight* w);

/* -------- exact invariants -------- */

typedef struct zv_sigma_result zv_sigma_result;

zv_status zv_relative_type(const zv_poly* g, const zv_weight* phi, zv_sigma_result** out);
/* "inf" for the g = 0 convention, otherwise "num/den". */
zv_status zv_sigma_value(const zv_sigma_result* r, char** out);
size_t zv_sigma_witness_count(const zv_sigma_result* r);
/* Witness ray as a JSON array of rational strings. */
zv_status zv_sigma_witness(const zv_sigma_result* r, size_t index, char** json_out);
void zv_sigma_result_free(zv_sigma_result* r);

zv_status zv_jumping_number(const zv_weight* phi, const zv_poly* g, char** out);

/* -------- monomial curve germs -------- */

typedef struct zv_curve zv_curve;

zv_status zv_curve_new(unsigned p, unsigned q, zv_curve** out);
/* point_spec: "origin" | "t=<rational>" | "unit_root:<k>".
 * Writes "inf" for members of the defining ideal. */
zv_status zv_curve_order(const zv_curve* x, const zv_poly* f, const char* point_spec,
                         char** out);
zv_status zv_curve_denominator(const zv_curve* x, char** poly_out);
void zv_curve_free(zv_curve* x);

/* -------- batch problems (the CLI surface) -------- */

typedef struct zv_problem zv_problem;

zv_status zv_problem_from_json(const char* json_text, zv_problem** out);
void zv_problem_free(zv_problem* p);

/* options_json (may be NULL): {"seed":N, "samples":N, "t_max":X, "oracle":bool}.
 * Every runner fills report_json with the versioned JSON report. */
zv_status zv_run_sigma(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_lct(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_tian(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_interpolate(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_zeroset(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_denominator(const zv_problem* p, const char* options_json, char** report_json);
zv_status zv_run_verify_integral(const zv_problem* p, const char* options_json,
                                 char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ZHOUVAL_H */
