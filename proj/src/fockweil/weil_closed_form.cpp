#include "u21/error.hpp"
#include "u21/fockweil.hpp"

namespace u21 {

namespace {

constexpr std::array<int, 4> kCC = {0, 1, 0, 1};  // cos th cos th'
constexpr std::array<int, 4> kSS = {1, 0, 1, 0};  // sin th sin th'

// p1^{a/2} p2^{b/2} p3^{c/2} p4^{d/2} times a coefficient.
PhaseLaurent mono(long a2, long b2, long c2, long d2, const CoeffRecord& coeff) {
    PhaseExponent e = {HalfInt::from_twice(a2), HalfInt::from_twice(b2), HalfInt::from_twice(c2),
                       HalfInt::from_twice(d2)};
    return PhaseLaurent::monomial(e, coeff);
}

CoeffRecord atom(int cosh_pow, std::array<int, 4> trig = {}) { return CoeffRecord::atom(Rational(1), cosh_pow, trig); }

// cc/C + p1 ss
PhaseLaurent factor_u() { return mono(0, 0, 0, 0, atom(-1, kCC)) + mono(2, 0, 0, 0, atom(0, kSS)); }
// cc + p1 ss/C
PhaseLaurent factor_v() { return mono(0, 0, 0, 0, atom(0, kCC)) + mono(2, 0, 0, 0, atom(-1, kSS)); }
// ss/C + p1^{-1} cc
PhaseLaurent factor_w() { return mono(0, 0, 0, 0, atom(-1, kSS)) + mono(-2, 0, 0, 0, atom(0, kCC)); }

}  // namespace

std::array<double, 4> phase_pair_angles(const KParams& k, const KParams& kp) {
    return {k.zeta - kp.zeta, k.xi - kp.xi, k.eta - kp.eta, k.gamma - kp.gamma};
}

PhaseLaurent weil_closed_form(const DualPairCase& c) {
    const CaseParams& p = c.params;
    switch (c.tag) {
        case CaseTag::A: {
            const long r = p.mu1 - p.mu2;
            return mono(2 * p.mu2 + 3, 2 * p.mu1 + 3, 2 * p.mu2 + 3, -2 * p.nu - 3, atom(-p.mu2 - p.nu - 3)) *
                   factor_u().pow(r);
        }
        case CaseTag::B: {
            const long r = p.nu1 - p.nu2;
            return mono(-2 * p.nu1 - 3, -2 * p.nu2 - 3, -2 * p.nu1 - 3, 2 * p.alpha + 3,
                        atom(-p.nu2 - p.alpha - 3)) *
                   factor_v().pow(r);
        }
        case CaseTag::C1: {
            const long r = p.mu1 - p.mu2;
            return mono(2 * p.mu2 + 1, 2 * p.mu1 + 1, 2 * p.mu2 + 1, 2 * p.alpha - 1, atom(-p.mu2 - p.alpha - 3)) *
                   factor_u().pow(r);
        }
        case CaseTag::C2:
            return mono(1, 2 * p.mu + 1, -2 * p.nu + 1, -2 * p.beta - 1, atom(-p.beta - 3)) * factor_u().pow(p.mu) *
                   factor_w().pow(p.nu);
        case CaseTag::D1: {
            const long r = p.nu1 - p.nu2;
            return mono(-2 * p.nu1 - 1, -2 * p.nu2 - 1, -2 * p.nu1 - 1, -2 * p.beta + 1,
                        atom(-p.nu2 - p.beta - 3)) *
                   factor_v().pow(r);
        }
        case CaseTag::D2:
            return mono(-1, 2 * p.mu - 1, -2 * p.nu - 1, 2 * p.alpha + 1, atom(-p.alpha - 3)) * factor_u().pow(p.mu) *
                   factor_w().pow(p.nu);
    }
    fail(Errc::invalid_argument, "unknown case");
}

std::complex<double> weil_coeff(const DualPairCase& c, double t, const KParams& k, const KParams& kp) {
    return weil_closed_form(c).evaluate({t, k.theta, kp.theta}, phase_pair_angles(k, kp));
}

}  // namespace u21
