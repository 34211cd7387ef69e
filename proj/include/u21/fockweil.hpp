#pragma once

// Fock model of the oscillator representation restricted to the six dual
// pairs (U(2,1), U(V')): joint harmonics, exact Fock inner products,
// closed-form matrix coefficients and a first-principles kernel oracle.

#include "u21/phase_laurent.hpp"
#include "u21/repparams.hpp"
#include "u21/sparse_poly.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace u21 {

// q / pi^d.
struct PiScaled {
    Rational coeff;
    int inv_pi_power = 0;

    double value() const;
    std::string str() const;
    friend bool operator==(const PiScaled&, const PiScaled&) = default;
};

// Sum over d of c_d / pi^d; the Fock pairing of two arbitrary polynomials.
struct FockPairing {
    std::map<int, GaussRational> by_inv_pi_power;

    std::complex<double> value() const;
    // The pairing as a single PiScaled, when it is real and pure in pi.
    std::optional<PiScaled> as_pi_scaled() const;
};

FockPairing fock_inner_product(const FockPolynomial& p, const FockPolynomial& q);

struct HarmonicVector {
    FockPolynomial phi;
    DualPairCase dpcase;
    PiScaled norm_sq;
};

HarmonicVector build_harmonic(const DualPairCase& c);
PiScaled phi_norm_sq(const DualPairCase& c);
// mu2! nu! / pi^(mu1+mu2+nu) * (mu1+1)! / (mu1-mu2+1)
PiScaled norm_sq_case_a_formula(long mu1, long mu2, long nu);

// A second-order operator sum_k d^2 / dz_{a_k} dz_{b_k}.
using SecondOrderOp = std::vector<std::pair<int, int>>;

struct AnnihilatorSet {
    std::vector<SecondOrderOp> m;        // from the U(2,1) side
    std::vector<SecondOrderOp> m_prime;  // from the G' side
};

AnnihilatorSet annihilators(CaseTag t);
FockPolynomial apply_op(const SecondOrderOp& op, const FockPolynomial& f);
bool harmonicity_check(const FockPolynomial& phi, CaseTag t);
bool harmonicity_check(const HarmonicVector& h);

// Eigenvalues under the torus of U(2,1) (rows) or of G' (columns), if phi is
// a simultaneous eigenvector.
std::optional<HalfIntTriple> row_weight(const FockPolynomial& phi, CaseTag t);
std::optional<HalfIntTriple> column_weight(const FockPolynomial& phi, CaseTag t);
bool weight_check(const HarmonicVector& h);

// k = diag(1, e^{i zeta}, 1) kappa(theta) diag(e^{i xi}, e^{i eta}, e^{i gamma}).
struct KParams {
    double zeta = 0;
    double theta = 0;
    double xi = 0;
    double eta = 0;
    double gamma = 0;
};

// Arguments of p1..p4 for the pair (k, k').
std::array<double, 4> phase_pair_angles(const KParams& k, const KParams& kp);

// (omega(g) phi, phi) / ||phi||^2 for g = k'^{-1} a_t k.
PhaseLaurent weil_closed_form(const DualPairCase& c);
std::complex<double> weil_coeff(const DualPairCase& c, double t, const KParams& k, const KParams& kp);

struct OracleConfig {
    int degree_cap = 12;
};

// (omega(a_t k) phi, omega(k') phi) computed from the Bargmann kernel, not
// normalized by ||phi||^2.
std::complex<double> bargmann_oracle(const DualPairCase& c, double t, const KParams& k, const KParams& kp,
                                     const OracleConfig& cfg = {});

}  // namespace u21
