/*
 * C interface to the linial engine: characteristic quasi-polynomials of
 * extended Linial arrangements and exact root-line certificates.
 *
 * Conventions:
 *  - Every fallible call returns an lnl_status; LNL_OK is zero.
 *  - On failure lnl_last_error() describes the error for the calling thread
 *    until the next call on that thread.
 *  - Objects come back through out-parameters as opaque handles and are
 *    released with the matching *_free function. Strings returned through
 *    char** are heap allocated and released with lnl_string_free.
 *  - Structured results are canonical JSON; polynomials are
 *    {"coeffs": [["num","den"], ...]} in ascending powers.
 */
#ifndef LINIAL_LINIAL_H
#define LINIAL_LINIAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LINIAL_BUILDING_LIBRARY)
#    define LNL_API __declspec(dllexport)
#  else
#    define LNL_API __declspec(dllimport)
#  endif
#else
#  define LNL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lnl_status {
  LNL_OK = 0,
  LNL_E_INVALID_ARGUMENT = 1,
  LNL_E_INVALID_RANK = 2,
  LNL_E_UNSUPPORTED_RANK = 3,
  LNL_E_DEGREE_MISMATCH = 4,
  LNL_E_ZERO_POLYNOMIAL = 5,
  LNL_E_INEXACT_DIVISION = 6,
  LNL_E_NOT_ADMISSIBLE = 7,
  LNL_E_SYMMETRY_VIOLATION = 8,
  LNL_E_Q_TOO_SMALL = 9,
  LNL_E_NON_CONVERGENCE = 10,
  LNL_E_INTERNAL = 11
} lnl_status;

typedef struct lnl_root_system lnl_root_system;
typedef struct lnl_poly lnl_poly;
typedef struct lnl_quasi lnl_quasi;

/* Error reporting. */
LNL_API const char* lnl_status_name(lnl_status status);
LNL_API const char* lnl_last_error(void);
LNL_API void lnl_string_free(char* s);
LNL_API int lnl_schema_version(void);

/* Root systems: "E6", "E7", "E8", "F4", "G2", "A<k>", "B<k>", "C<k>", "D<k>". */
LNL_API lnl_status lnl_root_system_parse(const char* name, lnl_root_system** out);
LNL_API void lnl_root_system_free(lnl_root_system* rs);
LNL_API lnl_status lnl_root_system_name(const lnl_root_system* rs, char** out);
LNL_API lnl_status lnl_root_system_rank(const lnl_root_system* rs, int* out);
LNL_API lnl_status lnl_root_system_coxeter_number(const lnl_root_system* rs, int* out);
LNL_API lnl_status lnl_root_system_data_json(const lnl_root_system* rs, char** out);
/* JSON array of catalog rows for every supported id. */
LNL_API lnl_status lnl_table_json(char** out);
LNL_API lnl_status lnl_positive_roots_json(const lnl_root_system* rs, char** out);

/* Polynomials. */
LNL_API lnl_status lnl_poly_from_json(const char* json, lnl_poly** out);
LNL_API void lnl_poly_free(lnl_poly* p);
LNL_API lnl_status lnl_poly_to_json(const lnl_poly* p, char** out);
/* Descending powers in the given variable letter. */
LNL_API lnl_status lnl_poly_to_text(const lnl_poly* p, char variable, char** out);
LNL_API lnl_status lnl_poly_degree(const lnl_poly* p, int* out);
LNL_API lnl_status lnl_poly_equal(const lnl_poly* a, const lnl_poly* b, int* out);
/* sum_i f_i g(t - k i) */
LNL_API lnl_status lnl_apply_shift(const lnl_poly* f, int k, const lnl_poly* g, lnl_poly** out);
/* g(M - t) with M = num/den */
LNL_API lnl_status lnl_reflect(const lnl_poly* g, long num, long den, lnl_poly** out);

/* Quasi-polynomials. */
LNL_API lnl_status lnl_quasi_from_json(const char* json, lnl_quasi** out);
LNL_API void lnl_quasi_free(lnl_quasi* q);
LNL_API lnl_status lnl_quasi_to_json(const lnl_quasi* q, char** out);
LNL_API lnl_status lnl_quasi_period(const lnl_quasi* q, int* out);
/* Exact value at x as "n" or "n/d". */
LNL_API lnl_status lnl_quasi_value(const lnl_quasi* q, long x, char** out);
/* Constituent for the class of d (any integer, reduced modulo the period). */
LNL_API lnl_status lnl_quasi_constituent(const lnl_quasi* q, long d, lnl_poly** out);
/* {"holds": bool, "witness": [i, j] | null} */
LNL_API lnl_status lnl_quasi_gcd_property_json(const lnl_quasi* q, char** out);
LNL_API lnl_status lnl_quasi_check_reciprocity(const lnl_quasi* q, int rank, int coxeter_number, int* out);

/* Eulerian polynomials; half != 0 selects the truncated polynomial. */
LNL_API lnl_status lnl_eulerian(const lnl_root_system* rs, int half, lnl_poly** out);
LNL_API lnl_status lnl_asc_oracle(const lnl_root_system* rs, lnl_poly** out);

/* Ehrhart quasi-polynomial of the closed fundamental alcove and its series. */
LNL_API lnl_status lnl_ehrhart(const lnl_root_system* rs, lnl_quasi** out);
/* JSON array of decimal strings. */
LNL_API lnl_status lnl_ehrhart_series_json(const lnl_root_system* rs, int n, char** out);

/* Linial arrangements. */
LNL_API lnl_status lnl_char_quasi(const lnl_root_system* rs, int m, int half, lnl_quasi** out);
LNL_API lnl_status lnl_char_poly(const lnl_root_system* rs, int m, lnl_poly** out);
LNL_API lnl_status lnl_weyl_char_quasi(const lnl_root_system* rs, lnl_quasi** out);
/* {"residues": [...], "divisors": [...], "m0": n} */
LNL_API lnl_status lnl_admissible_json(const lnl_root_system* rs, char** out);
LNL_API lnl_status lnl_averaged_half(const lnl_root_system* rs, int m, int d, lnl_poly** out);
/* g may be NULL for the default seed prod (t + e_i). */
LNL_API lnl_status lnl_toy_poly(const lnl_root_system* rs, int m, const lnl_poly* g, lnl_poly** out);

/* Verification. */
LNL_API lnl_status lnl_limit_poly(const lnl_root_system* rs, lnl_poly** out);
LNL_API lnl_status lnl_find_roots_json(const lnl_poly* p, char** out);
LNL_API lnl_status lnl_max_real_part(const lnl_poly* p, double* out);
/* exact != 0: Sturm certificate; otherwise floating-point roots. M = 2 * center. */
LNL_API lnl_status lnl_check_line_json(const lnl_poly* p, long center_times_2, int exact, char** out);
LNL_API lnl_status lnl_halfplane_json(const lnl_poly* p, long bound_times_2, char** out);
LNL_API lnl_status lnl_bruteforce_modq(const lnl_root_system* rs, int m, long q, int allow_small_q, uint64_t* out);
LNL_API lnl_status lnl_track_json(const lnl_root_system* rs, int d, const int* m_list, size_t count, char** out);

/* Runs the reproduction suite. only/count select criteria (NULL/0 = all).
 * all_passed receives 1 iff every selected criterion passed. */
LNL_API lnl_status lnl_verify_all_json(const int* only, size_t count, int include_timing, int* all_passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LINIAL_LINIAL_H */
