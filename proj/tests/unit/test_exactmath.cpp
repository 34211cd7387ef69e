#include <doctest.h>

#include "u21/error.hpp"
#include "u21/exactmath.hpp"
#include "u21/phase_laurent.hpp"
#include "u21/sparse_poly.hpp"

#include <cmath>

using namespace u21;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, -1) == Rational(0));
    CHECK(binomial(3, 4) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(binomial(60, 30).str() == "118264581564861424/1");
}

TEST_CASE("factorial is exact beyond 64 bits") {
    CHECK(factorial(0).get_str() == "1");
    CHECK(factorial(25).get_str() == "15511210043330985984000000");
}

TEST_CASE("alternating binomial sum") {
    CHECK(comb_lemma_lhs(1, 1, 0) == Rational(3));
    CHECK(comb_lemma_lhs(0, 0, 0) == Rational(1));
    for (long mu = 0; mu <= 6; ++mu)
        for (long r = 0; r <= 6; ++r)
            for (long i = 0; i <= r; ++i)
                CHECK(comb_lemma_lhs(mu, r, i) == Rational(factorial(mu + r + 1)) / Rational(r + 1));
    CHECK_THROWS_AS(comb_lemma_lhs(1, 2, 3), Error);
}

TEST_CASE("binomial convolution") {
    CHECK(vandermonde_identity(4, 2) == Rational(6));
    CHECK(vandermonde_identity(0, 0) == Rational(1));
    CHECK(vandermonde_identity(3, 3) == Rational(1));
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-7").str() == "-7/1");
    CHECK(Rational::parse("+2/4").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("2/-4"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("0.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK(Rational::from_double(0.375) == Rational(3) / Rational(8));
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)) == Rational(1) / Rational(2));
    CHECK(Rational(2).pow(-3) == Rational(1) / Rational(8));
    CHECK(Rational(-3) < Rational(1) / Rational(7));
}

TEST_CASE("half-integers") {
    HalfInt h = HalfInt::parse("-5/2");
    CHECK(h.twice_long() == -5);
    CHECK(h.str() == "-5/2");
    CHECK(HalfInt::parse("4/2") == HalfInt(2));
    CHECK(HalfInt::parse("3").is_integer());
    CHECK_THROWS_AS(HalfInt::parse("1/3"), Error);
    CHECK_THROWS_AS(HalfInt::parse("0.5"), Error);
    CHECK((kHalf + kHalf) == HalfInt(1));
    CHECK(kHalf * 3 == HalfInt::from_twice(3));
    auto t = parse_triple("-1/2, -5/2 -3/2");
    CHECK(triple_str(t) == "(-1/2, -5/2, -3/2)");
    CHECK_THROWS_AS(parse_triple("1/2 3/2"), Error);
}

TEST_CASE("Gaussian rationals") {
    GaussRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussRational(-1));
    CHECK(i.conj() * i == GaussRational(1));
}

TEST_CASE("sparse polynomial algebra") {
    auto x = FockPolynomial::z(1, 1);
    auto y = FockPolynomial::z(3, 1);
    auto p = (x + y).pow(3);
    CHECK(p.degree() == 3);
    CHECK(p.terms().size() == 4);
    auto d = p.derivative(zvar(1, 1)).derivative(zvar(3, 1));
    // d^2/dx dy (x+y)^3 = 6(x+y)
    CHECK(d == (x + y).scaled(GaussRational(6)));
    CHECK((p - p).is_zero());
}

TEST_CASE("phase Laurent constant term") {
    PhaseExponent one{HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)};
    auto f = PhaseLaurent::monomial(one, CoeffRecord::scalar(3)) + PhaseLaurent::constant(CoeffRecord::scalar(5));
    auto c = phase_constant_term(f);
    CHECK(c.evaluate({}) == doctest::Approx(5.0));

    // p2^{1/2} * p2^{1/2} = p2, constant term 0.
    PhaseExponent half{HalfInt(0), kHalf, HalfInt(0), HalfInt(0)};
    auto g = PhaseLaurent::monomial(half, CoeffRecord::scalar(1));
    CHECK(phase_constant_term(g * g).is_zero());
    CHECK_THROWS_AS(phase_constant_term(g), Error);
    CHECK(phase_constant_term(g * g.conj()).evaluate({}) == doctest::Approx(1.0));
}

TEST_CASE("coefficient records evaluate atoms and radial handles") {
    auto h = make_radial("double", [](double t) { return 2 * t; });
    auto rec = CoeffRecord::atom(Rational(3), 2, {1, 0, 0, 1}) * CoeffRecord::radial(h);
    AngleSample s{0.5, 0.3, 0.9};
    double want = 3 * std::pow(std::cosh(0.5), 2) * std::sin(0.3) * std::cos(0.9) * 1.0;
    CHECK(rec.evaluate(s) == doctest::Approx(want).epsilon(1e-14));
}
