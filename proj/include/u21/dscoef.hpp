#pragma once

// Matrix coefficients of discrete series of U(2,1) on the minimal K-type:
// radial functions c~_i(t), the full spherical function, and residuals of
// the first-order Schmid systems and of the Riemann P-equation.

#include "u21/fockweil.hpp"
#include "u21/phase_laurent.hpp"
#include "u21/repparams.hpp"

#include <complex>
#include <functional>
#include <utility>

namespace u21 {

// I: cosh^{-i-s}; II: cosh^{i+s}; III: cosh^{-2-i+s} F(1+i, 1-s; r+2; tanh^2 t).
double ctilde(Chamber c, long r, long s, long i, double t);
// The second Xi_III form cosh^{-2r-2+i-s} F(1+r-i, 1+r+s; r+2; tanh^2 t).
double ctilde_alt(long r, long s, long i, double t);
double ctilde_derivative(Chamber c, long r, long s, long i, double t);
double psi_radial(Chamber c, long r, long s, double t);

std::complex<double> psi_full(const BlattnerParam& b, Chamber c, double t, const KParams& k, const KParams& kp);
PhaseLaurent psi_full_symbolic(const BlattnerParam& b, Chamber c);

// Value and t-derivative of a candidate c~_i(t).
using RadialFamily = std::function<std::pair<double, double>(long i, double t)>;

struct ResidualPair {
    double first = 0;
    double second = 0;
};

// The pair of equations governing `system`: I uses (+-),(--); II uses (++),(-+);
// III uses (--),(-+). Evaluated on c_i = (-1)^i C(r,i) c~_i.
ResidualPair schmid_residual_of(Chamber system, long r, long s, long i, double t, const RadialFamily& f);
ResidualPair schmid_residual(Chamber c, long r, long s, long i, double t);

// u(z) with u', u'' in z = cosh^{-2} t.
using ZFunction = std::function<std::array<double, 3>(double z)>;
double riemann_p_residual_of(long r, long s, long i, double t, const ZFunction& u);
double riemann_p_residual(long r, long s, long i, double t);

}  // namespace u21
