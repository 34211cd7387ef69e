/*
 * C interface to the U(2,1) discrete-series / theta-projection library.
 *
 * Conventions
 *   - Every fallible call returns a u21_status; U21_OK is 0. On failure a
 *     thread-local message is available from u21_last_error().
 *   - Half-integers cross the boundary as int64 "twice" values: -1/2 is -1.
 *   - Handles are opaque and owned by the caller; free them with the matching
 *     *_free function. Strings returned by accessors live as long as the handle.
 *   - Exact rationals are rendered as "num/den".
 *   - K-group elements are five angles {zeta, theta, xi, eta, gamma}.
 */
#ifndef U21_U21_H
#define U21_U21_H

#include <stddef.h>
#include <stdint.h>

#if defined(U21_BUILDING_LIBRARY)
#define U21_API __attribute__((visibility("default")))
#else
#define U21_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum u21_status {
    U21_OK = 0,
    U21_E_INVALID_ARGUMENT = 1,
    U21_E_NOT_REGULAR = 2,
    U21_E_NOT_COMPACT_DOMINANT = 3,
    U21_E_NO_CASE_MATCH = 4,
    U21_E_BOUNDARY_PARAMETER = 5,
    U21_E_NO_PATTERN_MATCH = 6,
    U21_E_INVALID_C = 7,
    U21_E_NON_CONVERGENT = 8,
    U21_E_POLE_AT_ONE = 9,
    U21_E_INVALID_PARAMS = 10,
    U21_E_NON_INTEGRAL_EXPONENT = 11,
    U21_E_DEGREE_CAP = 12,
    U21_E_INVALID_N = 13,
    U21_E_PARSE = 14,
    U21_E_INTERNAL = 100
} u21_status;

typedef struct u21_case u21_case;
typedef struct u21_rational u21_rational;
typedef struct u21_classification u21_classification;
typedef struct u21_report u21_report;

U21_API const char* u21_version(void);
U21_API const char* u21_last_error(void);
U21_API const char* u21_status_name(u21_status s);

/* ---- exact values ---------------------------------------------------- */
U21_API const char* u21_rational_str(const u21_rational* q);
U21_API double u21_rational_to_double(const u21_rational* q);
U21_API void u21_rational_free(u21_rational* q);

/* Parses "a b c" or "a,b,c" with entries like "-1/2" or "3". */
U21_API u21_status u21_parse_halfint_triple(const char* text, int64_t out_twice[3]);
/* Renders a twice-value as "p/2" or an integer. Returns the needed length. */
U21_API size_t u21_halfint_str(int64_t twice, char* buf, size_t cap);

/* ---- parameters ------------------------------------------------------ */
U21_API u21_status u21_classify(const int64_t lambda_twice[3], u21_classification** out);
U21_API const char* u21_classification_chamber(const u21_classification* c);
U21_API void u21_classification_blattner(const u21_classification* c, int64_t out_twice[3]);
U21_API void u21_classification_rs(const u21_classification* c, long* r, long* s);
/* lambda^dual, the contragredient Harish-Chandra parameter. */
U21_API void u21_classification_dual(const u21_classification* c, int64_t out_twice[3]);
/* sigma^dual, the Fock-side weight (dual of the Blattner parameter). */
U21_API void u21_classification_fock_weight(const u21_classification* c, int64_t out_twice[3]);
U21_API const char* u21_classification_formal_degree(const u21_classification* c);
/* NULL when the Fock weight matches no case or sits in a boundary gap. */
U21_API const u21_case* u21_classification_case(const u21_classification* c);
/* Error name and explanation when no case was found, otherwise "". */
U21_API const char* u21_classification_note(const u21_classification* c);
U21_API void u21_classification_free(u21_classification* c);

U21_API u21_status u21_formal_degree(const int64_t lambda_twice[3], u21_rational** out);

/* ---- dual-pair cases ------------------------------------------------- */
/* tag: "A","B","C1","C2","D1","D2"; params in u21_case_param_name order. */
U21_API u21_status u21_case_new(const char* tag, const long params[3], u21_case** out);
U21_API u21_case* u21_case_clone(const u21_case* c);
U21_API void u21_case_free(u21_case* c);
U21_API const char* u21_case_tag(const u21_case* c);
U21_API const char* u21_case_param_name(const char* tag, int index);
U21_API long u21_case_param(const u21_case* c, int index);
/* "I", "II", "III" or NULL in a boundary gap. */
U21_API const char* u21_case_subcase(const u21_case* c);
U21_API const char* u21_case_describe(const u21_case* c);
U21_API void u21_case_fock_weight(const u21_case* c, int64_t out_twice[3]);
U21_API u21_status u21_case_hc_param(const u21_case* c, int64_t out_twice[3]);
/* ||phi||^2 = coeff / pi^inv_pi_power. */
U21_API u21_status u21_case_norm_sq(const u21_case* c, u21_rational** coeff, int* inv_pi_power);

/* ---- matrix coefficients --------------------------------------------- */
U21_API u21_status u21_ctilde(const char* chamber, long r, long s, long i, double t, double* out);
U21_API u21_status u21_psi_radial(const char* chamber, long r, long s, double t, double* out);
U21_API u21_status u21_psi_full(const int64_t blattner_twice[3], const char* chamber, double t, const double k[5],
                                const double kprime[5], double* re, double* im);
U21_API u21_status u21_schmid_residual(const char* chamber, long r, long s, long i, double t, double* first,
                                       double* second);
U21_API u21_status u21_riemann_p_residual(long r, long s, long i, double t, double* out);
/* Closed form of (omega(g) phi, phi) / ||phi||^2. */
U21_API u21_status u21_weil_coeff(const u21_case* c, double t, const double k[5], const double kprime[5], double* re,
                                  double* im);
/* Kernel oracle, not normalized. degree_cap <= 0 selects the default. */
U21_API u21_status u21_bargmann_oracle(const u21_case* c, double t, const double k[5], const double kprime[5],
                                       int degree_cap, double* re, double* im);

/* ---- zeta integrals -------------------------------------------------- */
U21_API u21_status u21_zeta_closed_form(const u21_case* c, u21_rational** out);
U21_API u21_status u21_zeta_numeric(const u21_case* c, int n_t, int n_theta, double* out);
U21_API u21_status u21_zeta_monte_carlo(const u21_case* c, long samples, uint64_t seed, double* mean,
                                        double* std_error);
U21_API u21_status u21_c_squared(const int64_t lambda_twice[3], u21_rational** out);
/* holds is set to 1 iff c^2 = d * Z/||phi||^2 exactly and the cases agree. */
U21_API u21_status u21_consistency_check(const int64_t lambda_twice[3], int* holds);
U21_API u21_status u21_radial_moment(long n, u21_rational** out);

/* ---- verification suites --------------------------------------------- */
typedef struct u21_verify_config {
    int grid_max;
    int n_t;
    int n_theta;
    double tol;
    uint64_t seed;
    unsigned threads; /* 0: all cores */
} u21_verify_config;

U21_API void u21_verify_config_default(u21_verify_config* cfg);
/* suite: "identities", "ode", "harmonics", "zeta", "theorem1". */
U21_API u21_status u21_verify(const char* suite, const u21_verify_config* cfg, u21_report** out);
U21_API size_t u21_report_size(const u21_report* r);
U21_API int u21_report_all_pass(const u21_report* r);
U21_API u21_status u21_report_check(const u21_report* r, size_t index, const char** name, int* pass, double* worst,
                                    long* count, const char** detail);
U21_API void u21_report_free(u21_report* r);

#ifdef __cplusplus
}
#endif

#endif /* U21_U21_H */
