#include <doctest.h>

#include "u21/dscoef.hpp"
#include "u21/hypergeo.hpp"

#include <cmath>

using namespace u21;

TEST_CASE("normalization at t = 0") {
    for (long r = 0; r <= 6; ++r)
        for (long s = -12; s <= 12; ++s)
            for (Chamber c : {Chamber::I, Chamber::II, Chamber::III}) {
                if (!is_admissible(c, r, s)) continue;
                for (long i = 0; i <= r; ++i) CHECK(ctilde(c, r, s, i, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
                CHECK(psi_radial(c, r, s, 0.0) == doctest::Approx(double(r + 1)).epsilon(1e-14));
            }
}

TEST_CASE("closed forms in chambers I and II") {
    double t = std::acosh(2.0);
    CHECK(ctilde(Chamber::I, 1, 2, 1, t) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(psi_radial(Chamber::I, 2, 1, t) == doctest::Approx(7.0 / 8).epsilon(1e-14));
    double ii = 0;
    for (long i = 0; i <= 3; ++i) ii += std::pow(2.0, i - 7);
    CHECK(psi_radial(Chamber::II, 3, -7, t) == doctest::Approx(ii).epsilon(1e-14));
}

// Reference values computed with mpmath at 40 digits.
TEST_CASE("chamber III against high-precision references") {
    struct Row {
        long r, s, i;
        double t, want;
    };
    const Row rows[] = {
        {2, -1, 0, 0.7, 0.62500588172494964772},
        {4, -2, 3, 1.5, 0.051272976909022526767},
        {6, -5, 2, 0.3, 0.81810403609612837943},
        {5, -1, 5, 2.5, 8.6846380444871242109e-5},
        {3, -2, 1, 4.0, 3.2847220725927987838e-6},
    };
    for (const auto& row : rows) {
        CAPTURE(row.r);
        CAPTURE(row.i);
        CHECK(ctilde(Chamber::III, row.r, row.s, row.i, row.t) == doctest::Approx(row.want).epsilon(1e-12));
        CHECK(ctilde_alt(row.r, row.s, row.i, row.t) == doctest::Approx(row.want).epsilon(1e-12));
    }
}

TEST_CASE("analytic derivative agrees with central differences") {
    const double h = 1e-5;
    for (Chamber c : {Chamber::I, Chamber::II, Chamber::III}) {
        long r = 3;
        long s = c == Chamber::I ? 4 : (c == Chamber::II ? -7 : -2);
        for (long i = 0; i <= r; ++i)
            for (double t : {0.3, 1.2}) {
                double fd = (ctilde(c, r, s, i, t + h) - ctilde(c, r, s, i, t - h)) / (2 * h);
                CHECK(ctilde_derivative(c, r, s, i, t) == doctest::Approx(fd).epsilon(1e-6));
            }
    }
}

TEST_CASE("Schmid residuals vanish on the closed forms") {
    for (Chamber c : {Chamber::I, Chamber::II, Chamber::III})
        for (long r = 0; r <= 5; ++r)
            for (long s = -12; s <= 12; ++s) {
                if (!is_admissible(c, r, s)) continue;
                for (long i = 0; i <= r; ++i)
                    for (double t : {0.3, 0.7, 1.5}) {
                        auto res = schmid_residual(c, r, s, i, t);
                        CHECK(std::fabs(res.first) < 1e-9);
                        CHECK(std::fabs(res.second) < 1e-9);
                    }
            }
}

TEST_CASE("Schmid residuals detect non-solutions") {
    RadialFamily perturbed = [](long i, double t) {
        return std::pair{ctilde(Chamber::III, 4, -2, i, t) + 0.01, ctilde_derivative(Chamber::III, 4, -2, i, t)};
    };
    double worst = 0;
    for (long i = 0; i <= 4; ++i) {
        auto res = schmid_residual_of(Chamber::III, 4, -2, i, 0.7, perturbed);
        worst = std::max({worst, std::fabs(res.first), std::fabs(res.second)});
    }
    CHECK(worst > 1e-3);

    // A chamber I solution tested against the chamber II system.
    RadialFamily wrong = [](long i, double t) {
        return std::pair{ctilde(Chamber::I, 2, 4, i, t), ctilde_derivative(Chamber::I, 2, 4, i, t)};
    };
    auto res = schmid_residual_of(Chamber::II, 2, 4, 1, 0.7, wrong);
    CHECK(std::fabs(res.first) + std::fabs(res.second) > 1e-3);
}

TEST_CASE("Riemann P-equation") {
    for (long r = 2; r <= 6; ++r)
        for (long s = 1 - r; s <= -1; ++s)
            for (long i = 0; i <= r; ++i)
                for (double t : {0.3, 0.7, 1.5}) CHECK(std::fabs(riemann_p_residual(r, s, i, t)) < 1e-8);

    ZFunction one = [](double) { return std::array<double, 3>{1.0, 0.0, 0.0}; };
    CHECK(std::fabs(riemann_p_residual_of(4, -2, 1, 0.7, one)) > 1e-6);

    // Linearity: scaling u by 5 scales the residual by 5.
    ZFunction probe = [](double z) { return std::array<double, 3>{z * z, 2 * z, 2.0}; };
    ZFunction probe5 = [](double z) { return std::array<double, 3>{5 * z * z, 10 * z, 10.0}; };
    double r1 = riemann_p_residual_of(3, -1, 2, 0.9, probe);
    double r5 = riemann_p_residual_of(3, -1, 2, 0.9, probe5);
    CHECK(r5 == doctest::Approx(5 * r1).epsilon(1e-12));
}

TEST_CASE("full spherical function") {
    KParams id{};
    for (Chamber c : {Chamber::I, Chamber::II, Chamber::III}) {
        HalfIntTriple lambda = c == Chamber::I    ? parse_triple("9/2 3/2 -3/2")
                               : c == Chamber::II ? parse_triple("-1/2 -5/2 9/2")
                                                  : parse_triple("7/2 -5/2 1/2");
        auto b = blattner(lambda);
        CAPTURE(chamber_name(c));
        // identity K-components: only the diagonal terms survive
        CHECK(psi_full(b, c, 0.8, id, id).real() ==
              doctest::Approx(psi_radial(c, b.r, b.s, 0.8)).epsilon(1e-12));
        KParams k{0.4, 0.9, -0.3, 1.2, 0.6};
        auto at0 = psi_full(b, c, 0.0, k, k);
        CHECK(at0.real() == doctest::Approx(double(b.r + 1)).epsilon(1e-12));
        CHECK(std::fabs(at0.imag()) < 1e-12);

        // Symbolic and numeric evaluations agree.
        KParams kp{-0.5, 0.3, 0.8, -1.0, 0.2};
        auto sym = psi_full_symbolic(b, c);
        AngleSample smp{0.8, k.theta, kp.theta};
        CHECK(std::abs(sym.evaluate(smp, phase_pair_angles(k, kp)) - psi_full(b, c, 0.8, k, kp)) < 1e-12);
    }
}

TEST_CASE("spherical function is a class function on K") {
    auto b = blattner(parse_triple("7/2 -5/2 1/2"));
    KParams k{0.4, 0.9, -0.3, 1.2, 0.6};
    KParams kp{-0.5, 0.3, 0.8, -1.0, 0.2};
    // Right-multiplying both k and k' by the same diagonal element.
    KParams k2 = k, kp2 = kp;
    for (KParams* q : {&k2, &kp2}) {
        q->xi += 0.37;
        q->eta -= 1.21;
        q->gamma += 0.55;
    }
    auto v1 = psi_full(b, Chamber::III, 0.6, k, kp);
    auto v2 = psi_full(b, Chamber::III, 0.6, k2, kp2);
    CHECK(std::abs(v1 - v2) < 1e-12);
}
