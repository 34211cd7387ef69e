#include <doctest.h>

#include "u21/error.hpp"
#include "u21/fockweil.hpp"
#include "u21/zetaeval.hpp"

#include <cmath>

using namespace u21;

namespace {

DualPairCase mk(CaseTag t, long a, long b, long c) {
    CaseParams p;
    auto names = case_param_names(t);
    set_param(p, names[0], a);
    set_param(p, names[1], b);
    set_param(p, names[2], c);
    return make_case(t, p);
}

Rational q(long n, long d) { return Rational(n) / Rational(d); }

const Theorem1Pattern& pattern(int number, char variant = 0) {
    for (const auto& p : theorem1_patterns())
        if (p.number == number && p.variant == variant) return p;
    throw std::logic_error("no such pattern");
}

}  // namespace

TEST_CASE("closed-form zeta ratios") {
    CHECK(zeta_closed_form(mk(CaseTag::C1, 2, 0, 2)).ratio == q(1, 18));
    CHECK(zeta_closed_form(mk(CaseTag::A, 0, 0, 0)).ratio == q(1, 2));
    CHECK(zeta_closed_form(mk(CaseTag::C2, 0, 0, 2)).ratio == q(1, 6));
    CHECK_THROWS_AS(zeta_closed_form(mk(CaseTag::C1, 1, 0, 0)), Error);
}

TEST_CASE("radial moments") {
    CHECK(radial_moment(3) == q(1, 2));
    CHECK(radial_moment(4) == q(1, 6));
    CHECK(radial_moment(5) == q(1, 12));
    CHECK(radial_moment_quadrature(5, 8) == doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK_THROWS_AS(radial_moment(2), Error);
}

TEST_CASE("pattern values") {
    CaseParams p;
    p.mu1 = 2;
    p.mu2 = 0;
    p.alpha = 2;
    CHECK(theorem1_value(pattern(4), p) == q(1, 9));
    CHECK(theorem1_lambda(pattern(4), p) == parse_triple("-1/2 -5/2 -3/2"));

    CaseParams c2;
    c2.nu = 0;
    c2.mu = 0;
    c2.beta = 2;
    CHECK(theorem1_value(pattern(5), c2) == q(1, 3));

    CaseParams a;
    a.mu1 = 3;
    a.mu2 = 1;
    a.nu = 2;
    CHECK(theorem1_value(pattern(1, 'A'), a) == Rational(1));
    CHECK(theorem1_patterns().size() == 12);
    CHECK(pattern_label(pattern(1, 'B')) == "1B");
}

TEST_CASE("c^2 lookup") {
    CHECK(c_squared_theorem1(parse_triple("-1/2 -5/2 -3/2")) == q(1, 9));
    auto ms = theorem1_matches(parse_triple("-1/2 -5/2 -3/2"));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].pattern.number == 4);
    // The eleven patterns cover every regular weight; only degenerate input misses.
    CHECK(theorem1_matches(parse_triple("101/2 -3/2 -1/2")).size() == 1);
    CHECK(theorem1_matches(parse_triple("1/2 1/2 -3/2")).empty());
    CHECK_THROWS_AS(c_squared_theorem1(parse_triple("1/2 1/2 -3/2")), Error);
}

TEST_CASE("consistency of degree, zeta ratio and c^2") {
    auto rep = consistency_report(parse_triple("-1/2 -5/2 -3/2"));
    CHECK(rep.degree == Rational(2));
    CHECK(rep.zeta_ratio == q(1, 18));
    CHECK(rep.c_squared == q(1, 9));
    CHECK(rep.case_agrees);
    CHECK(rep.holds);

    for (const auto& p : theorem1_patterns())
        for (long a = 0; a <= 5; ++a)
            for (long b = 0; b <= 5; ++b)
                for (long c = 0; c <= 5; ++c) {
                    CaseParams cp;
                    auto names = case_param_names(p.tag);
                    set_param(cp, names[0], a);
                    set_param(cp, names[1], b);
                    set_param(cp, names[2], c);
                    if (!theorem1_inequalities(p, cp)) continue;
                    auto lam = theorem1_lambda(p, cp);
                    CAPTURE(pattern_label(p));
                    CAPTURE(triple_str(lam));
                    CHECK(consistency_check(lam));
                    auto v = theorem1_value(p, cp);
                    CHECK(v > Rational(0));
                    CHECK(v <= Rational(1));
                }
}

TEST_CASE("the doubling integrand has integral phase exponents") {
    for (CaseTag t : kAllCases)
        for (const auto& dc : {mk(t, 2, 2, 2), mk(t, 4, 1, 3)}) {
            if (!dc.subcase) continue;
            CAPTURE(dc.describe());
            CHECK_NOTHROW(phase_constant_term(zeta_integrand(dc)));
        }
}

TEST_CASE("quadrature reproduces the closed forms") {
    QuadratureConfig cfg;
    for (const auto& [dc, want] : {std::pair{mk(CaseTag::C1, 2, 0, 2), 1.0 / 18}, std::pair{mk(CaseTag::A, 0, 0, 0), 0.5},
                                   std::pair{mk(CaseTag::D2, 0, 0, 2), zeta_closed_form(mk(CaseTag::D2, 0, 0, 2)).ratio.to_double()}}) {
        CAPTURE(dc.describe());
        CHECK(zeta_numeric(dc, cfg) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("C1 subcase II: quadrature and printed ratio differ once alpha > 0") {
    // The integrand's alpha dependence cancels between the Weil and
    // spherical factors, so the quadrature equals the alpha = 0 value.
    auto dc = mk(CaseTag::C1, 6, 4, 1);
    REQUIRE(dc.subcase == Chamber::II);
    double numeric = zeta_numeric(dc);
    CHECK(numeric == doctest::Approx(1.0 / 84).epsilon(1e-10));
    CHECK(zeta_closed_form(dc).ratio == q(1, 120));
    auto dc0 = mk(CaseTag::C1, 6, 4, 0);
    CHECK(zeta_numeric(dc0) == doctest::Approx(zeta_closed_form(dc0).ratio.to_double()).epsilon(1e-10));
}

TEST_CASE("Monte Carlo estimate is within a few standard errors") {
    auto dc = mk(CaseTag::C1, 2, 0, 2);
    auto est = zeta_monte_carlo(dc, 200000, 7);
    CHECK(est.samples == 200000);
    CHECK(std::fabs(est.mean - 1.0 / 18) < 5 * est.std_error + 1e-12);
    auto again = zeta_monte_carlo(dc, 200000, 7);
    CHECK(again.mean == est.mean);
}
