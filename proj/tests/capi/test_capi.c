/* Plain C consumer of the shared library. */
#include "u21/u21.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) {                                                   \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                  \
        }                                                                \
    } while (0)

static void test_classify(void) {
    int64_t lam[3];
    u21_classification* cl = NULL;
    const u21_case* c;
    long r, s;

    EXPECT(u21_parse_halfint_triple("-1/2 -5/2 -3/2", lam) == U21_OK);
    EXPECT(lam[0] == -1 && lam[1] == -5 && lam[2] == -3);
    EXPECT(u21_classify(lam, &cl) == U21_OK);
    EXPECT(strcmp(u21_classification_chamber(cl), "III") == 0);
    u21_classification_rs(cl, &r, &s);
    EXPECT(r == 2 && s == -1);
    EXPECT(strcmp(u21_classification_formal_degree(cl), "2/1") == 0);
    c = u21_classification_case(cl);
    EXPECT(c != NULL);
    if (c) {
        EXPECT(strcmp(u21_case_tag(c), "C1") == 0);
        EXPECT(u21_case_param(c, 0) == 2 && u21_case_param(c, 2) == 2);
        EXPECT(strcmp(u21_case_subcase(c), "III") == 0);
    }
    u21_classification_free(cl);
}

static void test_errors(void) {
    int64_t lam[3] = {1, 1, 3};
    u21_classification* cl = NULL;
    u21_case* c = NULL;
    long bad[3] = {0, 1, 0};
    double v;

    EXPECT(u21_classify(lam, &cl) == U21_E_NOT_REGULAR);
    EXPECT(cl == NULL);
    EXPECT(strlen(u21_last_error()) > 0);
    EXPECT(u21_parse_halfint_triple("0.5 1 2", lam) == U21_E_PARSE);
    EXPECT(u21_case_new("A", bad, &c) != U21_OK);
    EXPECT(u21_case_new("Z", bad, &c) == U21_E_PARSE);
    EXPECT(u21_ctilde("IV", 1, 3, 0, 0.1, &v) == U21_E_PARSE);
    EXPECT(u21_ctilde("I", 1, 3, 0, 0.1, NULL) == U21_E_INVALID_ARGUMENT);
    EXPECT(strcmp(u21_status_name(U21_E_NOT_REGULAR), "NotRegular") == 0);
}

static void test_zeta(void) {
    long p[3] = {2, 0, 2};
    u21_case* c = NULL;
    u21_rational* z = NULL;
    u21_rational* n2 = NULL;
    int inv_pi = -1;
    double num, mean, se;
    int64_t lam[3];
    int holds = 0;

    EXPECT(u21_case_new("C1", p, &c) == U21_OK);
    EXPECT(u21_zeta_closed_form(c, &z) == U21_OK);
    EXPECT(strcmp(u21_rational_str(z), "1/18") == 0);
    EXPECT(u21_zeta_numeric(c, 64, 64, &num) == U21_OK);
    EXPECT(fabs(num - 1.0 / 18) < 1e-10);
    EXPECT(u21_zeta_monte_carlo(c, 20000, 3, &mean, &se) == U21_OK);
    EXPECT(fabs(mean - 1.0 / 18) < 6 * se);
    EXPECT(u21_case_norm_sq(c, &n2, &inv_pi) == U21_OK);
    EXPECT(inv_pi == 4);
    EXPECT(u21_case_hc_param(c, lam) == U21_OK);
    EXPECT(u21_consistency_check(lam, &holds) == U21_OK && holds == 1);
    u21_rational_free(z);
    u21_rational_free(n2);
    u21_case_free(c);
}

static void test_coefficients(void) {
    double v, a, b, re, im, ore, oim;
    double k[5] = {0.1, 0.2, 0.3, 0.4, 0.5};
    double kp[5] = {-0.3, 0.7, 0.2, -0.1, 0.9};
    int64_t lam[3] = {7, -5, 1};
    long p[3] = {1, 1, 1};
    u21_case* c = NULL;
    u21_rational* n2 = NULL;
    int inv_pi = 0;

    EXPECT(u21_ctilde("I", 1, 2, 1, acosh(2.0), &v) == U21_OK && fabs(v - 0.125) < 1e-14);
    EXPECT(u21_psi_radial("III", 4, -2, 0.0, &v) == U21_OK && fabs(v - 5) < 1e-13);
    EXPECT(u21_schmid_residual("III", 4, -2, 1, 0.7, &a, &b) == U21_OK);
    EXPECT(fabs(a) < 1e-9 && fabs(b) < 1e-9);
    EXPECT(u21_riemann_p_residual(4, -2, 1, 0.7, &v) == U21_OK && fabs(v) < 1e-8);
    EXPECT(u21_psi_full(lam, "III", 0.0, k, k, &re, &im) == U21_OK);
    EXPECT(fabs(re - 7) < 1e-12 && fabs(im) < 1e-12);

    EXPECT(u21_case_new("C2", p, &c) == U21_OK);
    EXPECT(u21_weil_coeff(c, 0.4, k, kp, &re, &im) == U21_OK);
    EXPECT(u21_bargmann_oracle(c, 0.4, k, kp, 0, &ore, &oim) == U21_OK);
    EXPECT(u21_case_norm_sq(c, &n2, &inv_pi) == U21_OK);
    {
        double scale = u21_rational_to_double(n2) / pow(acos(-1.0), inv_pi);
        EXPECT(fabs(re - ore / scale) < 1e-10 && fabs(im - oim / scale) < 1e-10);
    }
    u21_rational_free(n2);
    u21_case_free(c);
}

static void test_verify(void) {
    u21_verify_config cfg;
    u21_report* rep = NULL;
    size_t i;

    u21_verify_config_default(&cfg);
    cfg.grid_max = 3;
    EXPECT(u21_verify("ode", &cfg, &rep) == U21_OK);
    EXPECT(u21_report_size(rep) > 0);
    EXPECT(u21_report_all_pass(rep) == 1);
    for (i = 0; i < u21_report_size(rep); ++i) {
        const char* name;
        const char* detail;
        int pass;
        double worst;
        long count;
        EXPECT(u21_report_check(rep, i, &name, &pass, &worst, &count, &detail) == U21_OK);
        EXPECT(pass == 1 && count > 0);
    }
    EXPECT(u21_report_check(rep, 9999, NULL, NULL, NULL, NULL, NULL) != U21_OK);
    u21_report_free(rep);
    EXPECT(u21_verify("nope", &cfg, &rep) != U21_OK);
}

int main(void) {
    char buf[32];
    u21_rational* m = NULL;

    EXPECT(strlen(u21_version()) > 0);
    EXPECT(u21_halfint_str(-5, buf, sizeof buf) > 0 && strcmp(buf, "-5/2") == 0);
    EXPECT(u21_radial_moment(4, &m) == U21_OK && strcmp(u21_rational_str(m), "1/6") == 0);
    u21_rational_free(m);
    EXPECT(u21_radial_moment(2, &m) == U21_E_INVALID_N);

    test_classify();
    test_errors();
    test_zeta();
    test_coefficients();
    test_verify();

    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    puts("C API smoke test passed");
    return 0;
}
