#pragma once

// Laurent polynomials in the four phase pairs
//   p1 = zeta*conj(zeta'), p2 = xi*conj(xi'), p3 = eta*conj(eta'), p4 = gamma*conj(gamma')
// with half-integer exponents. Coefficients are finite sums of atoms
//   q * cosh(t)^e0 * sin(th)^e1 cos(th)^e2 sin(th')^e3 cos(th')^e4 * h1(t) * h2(t) ...
// where the h are named scalar functions of t.

#include "u21/exactmath.hpp"

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace u21 {

struct RadialHandle {
    std::string key;  // equal keys must denote the same function
    std::function<double(double)> fn;
};
using RadialRef = std::shared_ptr<const RadialHandle>;

RadialRef make_radial(std::string key, std::function<double(double)> fn);

struct AtomKey {
    int cosh_pow = 0;
    std::array<int, 4> trig{};          // sin th, cos th, sin th', cos th'
    std::vector<std::string> handles;   // sorted, repetitions allowed

    friend auto operator<=>(const AtomKey&, const AtomKey&) = default;
    friend bool operator==(const AtomKey&, const AtomKey&) = default;
};

struct AngleSample {
    double t = 0;
    double theta = 0;
    double theta_prime = 0;
};

class CoeffRecord {
public:
    CoeffRecord() = default;
    static CoeffRecord scalar(const Rational& q);
    static CoeffRecord atom(const Rational& q, int cosh_pow, std::array<int, 4> trig = {});
    static CoeffRecord radial(const RadialRef& h, const Rational& q = Rational(1));

    const std::map<AtomKey, Rational>& atoms() const { return atoms_; }
    const RadialRef& handle(const std::string& key) const;
    bool is_zero() const { return atoms_.empty(); }

    CoeffRecord& operator+=(const CoeffRecord& o);
    friend CoeffRecord operator+(CoeffRecord a, const CoeffRecord& b) { return a += b; }
    friend CoeffRecord operator*(const CoeffRecord& a, const CoeffRecord& b);
    CoeffRecord scaled(const Rational& q) const;

    double evaluate(const AngleSample& s) const;

    friend bool operator==(const CoeffRecord& a, const CoeffRecord& b) { return a.atoms_ == b.atoms_; }

private:
    void add_atom(const AtomKey& k, const Rational& q);
    void merge_handles(const CoeffRecord& o);

    std::map<AtomKey, Rational> atoms_;
    std::map<std::string, RadialRef> handles_;
};

using PhaseExponent = std::array<HalfInt, 4>;

class PhaseLaurent {
public:
    PhaseLaurent() = default;
    static PhaseLaurent constant(const CoeffRecord& c);
    static PhaseLaurent monomial(const PhaseExponent& e, const CoeffRecord& c);

    const std::map<PhaseExponent, CoeffRecord>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const PhaseExponent& e, const CoeffRecord& c);

    PhaseLaurent& operator+=(const PhaseLaurent& o);
    friend PhaseLaurent operator+(PhaseLaurent a, const PhaseLaurent& b) { return a += b; }
    friend PhaseLaurent operator*(const PhaseLaurent& a, const PhaseLaurent& b);
    PhaseLaurent pow(int n) const;
    // Multiplies every exponent by -1 (phase conjugation; coefficients are real).
    PhaseLaurent conj() const;

    // angles[j] is the argument of p_{j+1}; half-integer powers use exp(i*h*angle).
    std::complex<double> evaluate(const AngleSample& s, const std::array<double, 4>& angles) const;

    friend bool operator==(const PhaseLaurent& a, const PhaseLaurent& b) { return a.terms_ == b.terms_; }

private:
    std::map<PhaseExponent, CoeffRecord> terms_;
};

// Coefficient of p1^0 p2^0 p3^0 p4^0. Throws Error(non_integral_exponent) if
// any term carries a non-integral exponent.
CoeffRecord phase_constant_term(const PhaseLaurent& f);

}  // namespace u21
