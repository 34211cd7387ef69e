#include <doctest.h>

#include "u21/error.hpp"
#include "u21/fockweil.hpp"

#include <cmath>
#include <numbers>

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

FockPolynomial z(int i, int j) { return FockPolynomial::z(i, j); }

}  // namespace

TEST_CASE("harmonic representatives") {
    CHECK(build_harmonic(mk(CaseTag::A, 1, 0, 0)).phi == z(1, 1));
    CHECK(build_harmonic(mk(CaseTag::A, 0, 0, 0)).phi == FockPolynomial::constant(GaussRational(1)));
    CHECK(build_harmonic(mk(CaseTag::C2, 1, 2, 3)).phi == z(1, 1) * z(2, 3).pow(2) * z(3, 2).pow(3));
}

TEST_CASE("harmonicity") {
    CHECK(harmonicity_check(z(1, 1), CaseTag::A));
    CHECK_FALSE(harmonicity_check(z(1, 1) * z(3, 1), CaseTag::A));
    for (CaseTag t : kAllCases)
        for (long a = 0; a <= 2; ++a)
            for (long b = 0; b <= 2; ++b)
                for (long c = 0; c <= 2; ++c) {
                    DualPairCase dc;
                    try {
                        dc = mk(t, a, b, c);
                    } catch (const Error&) {
                        continue;
                    }
                    auto h = build_harmonic(dc);
                    CAPTURE(dc.describe());
                    CHECK(harmonicity_check(h));
                    CHECK(weight_check(h));
                }
}

TEST_CASE("torus weights") {
    auto w = row_weight(FockPolynomial::constant(GaussRational(1)), CaseTag::A);
    REQUIRE(w.has_value());
    CHECK(*w == parse_triple("3/2 3/2 -3/2"));
    auto c2 = build_harmonic(mk(CaseTag::C2, 2, 1, 3));
    // (mu + 1/2, -nu + 1/2, -beta - 1/2)
    CHECK(*row_weight(c2.phi, CaseTag::C2) == parse_triple("5/2 -1/2 -7/2"));
    CHECK_FALSE(row_weight(z(1, 1) + z(2, 2), CaseTag::A).has_value());
}

TEST_CASE("Fock norms") {
    CHECK(phi_norm_sq(mk(CaseTag::A, 0, 0, 0)) == PiScaled{Rational(1), 0});
    CHECK(phi_norm_sq(mk(CaseTag::A, 1, 1, 0)) == PiScaled{Rational(2), 2});
    CHECK(phi_norm_sq(mk(CaseTag::C2, 1, 1, 1)) == PiScaled{Rational(1), 3});
    for (long m1 = 0; m1 <= 3; ++m1)
        for (long m2 = 0; m2 <= m1; ++m2)
            for (long n = 0; n <= 2; ++n)
                CHECK(phi_norm_sq(mk(CaseTag::A, m1, m2, n)) == norm_sq_case_a_formula(m1, m2, n));
    auto pr = fock_inner_product(z(1, 1), z(2, 2));
    CHECK(pr.value() == std::complex<double>(0.0));
}

TEST_CASE("Weil coefficient at the identity") {
    KParams k{0.3, 0.8, -0.4, 1.1, 0.25};
    for (CaseTag t : kAllCases) {
        auto dc = mk(t, 2, 1, 1);
        auto v = weil_coeff(dc, 0.0, k, k);
        CAPTURE(dc.describe());
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::fabs(v.imag()) < 1e-12);
    }
}

TEST_CASE("Weil closed form matches the kernel oracle") {
    KParams k{0.7, 0.4, 1.3, -0.6, 2.0};
    KParams kp{-0.2, 1.1, 0.5, 0.9, -1.4};
    for (CaseTag t : kAllCases) {
        for (auto [a, b, c] : {std::array<long, 3>{0, 0, 0}, {1, 1, 1}, {2, 1, 2}}) {
            DualPairCase dc;
            try {
                dc = mk(t, a, b, c);
            } catch (const Error&) {
                continue;
            }
            double t0 = 0.45;
            auto closed = weil_coeff(dc, t0, k, kp);
            auto oracle = bargmann_oracle(dc, t0, k, kp) / phi_norm_sq(dc).value();
            CAPTURE(dc.describe());
            CHECK(std::abs(closed - oracle) < 1e-10);
        }
    }
}

TEST_CASE("trivial case A decays like cosh^-3 on the identity fibre") {
    auto dc = mk(CaseTag::A, 0, 0, 0);
    KParams id{};
    for (double t : {0.2, 1.0, 2.5}) {
        auto v = weil_coeff(dc, t, id, id);
        CHECK(v.real() == doctest::Approx(std::pow(std::cosh(t), -3)).epsilon(1e-13));
    }
}

TEST_CASE("oracle degree cap") {
    OracleConfig cfg;
    cfg.degree_cap = 2;
    CHECK_THROWS_AS(bargmann_oracle(mk(CaseTag::C2, 1, 1, 1), 0.3, {}, {}, cfg), Error);
}

TEST_CASE("pi-scaled values") {
    PiScaled p{Rational(2), 2};
    CHECK(p.value() == doctest::Approx(2 / (std::numbers::pi * std::numbers::pi)));
}
