#pragma once

// Archimedean doubling zeta integrals for the six dual-pair cases: exact
// closed forms, the theta-projection constants c^2, and a quadrature
// evaluation built from the Weil and discrete-series matrix coefficients.

#include "u21/phase_laurent.hpp"
#include "u21/repparams.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace u21 {

// Z / ||phi||^2.
struct ZetaValue {
    Rational ratio;
    DualPairCase dpcase;
};

struct QuadratureConfig {
    int n_t = 64;
    int n_theta = 64;
    double tol = 1e-8;
};

ZetaValue zeta_closed_form(const DualPairCase& c);

// Integral of cosh(t)^{-2n} sinh^2 t sinh 2t over t > 0: 1/((n-2)(n-1)).
Rational radial_moment(long n);
// Same integral through the v = cosh^-2 t substitution and Gauss-Legendre.
double radial_moment_quadrature(long n, int nodes);

// The eleven parameter patterns for c^2; pattern 1 has two variants A and B.
struct Theorem1Pattern {
    int number = 1;       // 1..11
    char variant = 0;     // 'A' or 'B' for number 1, otherwise 0
    CaseTag tag = CaseTag::A;
    std::optional<Chamber> subcase;  // empty for the compact cases A and B
};

const std::vector<Theorem1Pattern>& theorem1_patterns();
std::string pattern_label(const Theorem1Pattern& p);
bool theorem1_inequalities(const Theorem1Pattern& p, const CaseParams& q);
HalfIntTriple theorem1_lambda(const Theorem1Pattern& p, const CaseParams& q);
Rational theorem1_value(const Theorem1Pattern& p, const CaseParams& q);

struct Theorem1Match {
    Theorem1Pattern pattern;
    CaseParams params;
};

std::vector<Theorem1Match> theorem1_matches(const HalfIntTriple& lambda);
// Throws no_pattern_match.
Rational c_squared_theorem1(const HalfIntTriple& lambda);

struct ConsistencyReport {
    Theorem1Match match;
    DualPairCase dpcase;  // from classifying the dual of the Blattner parameter
    Rational degree;
    Rational zeta_ratio;
    Rational c_squared;
    bool case_agrees = false;  // the pattern names the same case and subcase
    bool holds = false;        // c^2 == degree * zeta_ratio and case_agrees
};

ConsistencyReport consistency_report(const HalfIntTriple& lambda);
bool consistency_check(const HalfIntTriple& lambda);

// (omega(g) phi, phi)/||phi||^2 * psi(g) as a phase Laurent polynomial; psi
// uses the Blattner parameter dual to the harmonic's Fock weight.
PhaseLaurent zeta_integrand(const DualPairCase& c);
double zeta_numeric(const DualPairCase& c, const QuadratureConfig& cfg = {});

struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
    long samples = 0;
};

// Uniform sampling of the reduced (t, theta, theta') integrand; sanity only.
MonteCarloEstimate zeta_monte_carlo(const DualPairCase& c, long samples, std::uint64_t seed);

}  // namespace u21
