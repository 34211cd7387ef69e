#include <doctest.h>

#include "u21/error.hpp"
#include "u21/hypergeo.hpp"
#include "u21/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace u21;

namespace {

bool close(double got, double want, double rel) {
    return std::fabs(got - want) <= rel * std::max(1.0, std::fabs(want));
}

}  // namespace

// Reference values computed with mpmath at 40 digits.
TEST_CASE("2F1 against high-precision references") {
    struct Row {
        double a, b, c, z, want;
    };
    const Row rows[] = {
        {1, 3, 1, 0.5, 8.0},
        {0.5, 1.5, 2.5, 0.3, 1.1080625510569319884},
        {2, 3, 5, 0.9, 8.5615383921875608998},
        {3, 2, 5, 0.97, 17.314967749382444668},
        {1, 1, 2, 0.99, 4.6516870565536267891},
        {2, 2, 4, 0.999, 29.588655435495545512},
        {1.5, 2, 3.5, 0.95, 6.571177030764376088},
        {4, -1.5, 2, 0.8, -0.26832815729997472385},
        {3, 5, 4, 0.85, 1555.5555555555546454},
        {1, 4, 8, 0.999999, 2.3333286666899982746},
    };
    for (const auto& r : rows) {
        CAPTURE(r.a);
        CAPTURE(r.b);
        CAPTURE(r.c);
        CAPTURE(r.z);
        CHECK(close(gauss_2f1({r.a, r.b, r.c}, r.z), r.want, 1e-11));
    }
}

TEST_CASE("2F1 simple values") {
    CHECK(gauss_2f1({2.5, -1.25, 0.75}, 0.0) == 1.0);
    CHECK(gauss_2f1({-2, 1, 3}, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_2f1({1, 1, -2}, 0.3), Error);
}

TEST_CASE("Gauss summation at z = 1") {
    CHECK(gauss_value_at_1({-2, 1, 3}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gauss_value_at_1({0, 7, 3}) == 1.0);
    // Chu-Vandermonde (c-b)_n / (c)_n, here with c - a - b < 0
    CHECK(gauss_value_at_1({-1, 4, 1.5}) == doctest::Approx(-5.0 / 3).epsilon(1e-15));
    CHECK(gauss_value_at_1({1, 1, 3}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_value_at_1({1, 1, 2}), Error);
}

TEST_CASE("derivative rule") {
    CHECK(derivative_2f1({1, 3, 1}, 0.5) == doctest::Approx(48.0).epsilon(1e-13));
    CHECK(derivative_2f1({0, 2, 3}, 0.4) == 0.0);
}

TEST_CASE("Euler integral") {
    CHECK(close(euler_integral_2f1({1, 3, 2}, 0.5, 64), gauss_2f1({1, 3, 2}, 0.5), 1e-10));
    CHECK(euler_integral_2f1({1, 0, 2}, 0.7, 16) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(close(euler_integral_2f1({1, 1, 2}, 0.999, 256), gauss_2f1({1, 1, 2}, 0.999), 1e-6));
}

TEST_CASE("Gamma and digamma against references") {
    struct Row {
        double x, gamma, psi;
    };
    const Row rows[] = {
        {0.5, 1.7724538509055160273, -1.9635100260214234794},
        {-0.5, -3.5449077018110320546, 0.036489973978576520559},
        {-2.5, -0.94530872048294188123, 1.1031566406452431872},
        {3.5, 3.3233509704478425512, 1.1031566406452431872},
        {5, 24, 1.5061176684318004727},
        {0.3, 2.9915689876875907446, -3.5025242222001331249},
        {7.25, 1155.3810139199896872, 1.9104535268837360284},
    };
    for (const auto& r : rows) {
        CAPTURE(r.x);
        CHECK(close(gamma_fn(r.x), r.gamma, 1e-14));
        CHECK(close(digamma_fn(r.x), r.psi, 1e-13));
    }
    CHECK(rgamma_fn(-3) == 0.0);
    CHECK_THROWS_AS(gamma_fn(0), Error);
}

TEST_CASE("integer and half-integer predicates") {
    CHECK(is_nonpositive_integer(-3));
    CHECK_FALSE(is_nonpositive_integer(1));
    CHECK(is_half_integer_value(-2.5));
    CHECK_FALSE(is_half_integer_value(2));
}

TEST_CASE("Gauss-Legendre quadrature") {
    const auto& rule = gauss_legendre(8);
    double sum = 0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
    // exact for degree 15
    CHECK(integrate_gl([](double x) { return std::pow(x, 14); }, 0, 1, 8) == doctest::Approx(1.0 / 15).epsilon(1e-14));
    CHECK(integrate_gl([](double x) { return std::sin(x); }, 0, std::numbers::pi, 32) ==
          doctest::Approx(2.0).epsilon(1e-14));
}
