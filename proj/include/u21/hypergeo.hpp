#pragma once

// Gauss hypergeometric function 2F1(a, b; c; z) on (-1, 1) plus independent
// oracles (Gauss summation at z = 1, Euler integral) and exact Gamma values
// at integers and half-integers.

namespace u21 {

struct HypParams {
    double a = 0;
    double b = 0;
    double c = 1;
};

struct HypConfig {
    double rel_tol = 1e-14;
    long max_terms = 1'000'000;
    // Above this z the 1-z connection formulas replace the direct series.
    double near_one = 0.75;
};

double gauss_2f1(const HypParams& p, double z, const HypConfig& cfg = {});
double gauss_value_at_1(const HypParams& p);
double derivative_2f1(const HypParams& p, double z, const HypConfig& cfg = {});
double euler_integral_2f1(const HypParams& p, double z, int quadrature_order);

bool is_nonpositive_integer(double x);
bool is_integer_value(double x);
bool is_half_integer_value(double x);  // strictly in 1/2 + Z

// Exact (factorial / sqrt(pi) ladder) for integers and half-integers.
double gamma_fn(double x);
// 1/Gamma(x), zero at the poles.
double rgamma_fn(double x);
// Exact harmonic sums at integers and half-integers.
double digamma_fn(double x);

namespace detail {
// Direct power series, no termination shortcut.
double series_2f1(const HypParams& p, double z, const HypConfig& cfg);
// Exact rational sum; requires a or b to be a nonpositive integer.
double terminating_2f1(const HypParams& p, double z);
// Connection formulas around z = 1.
double connection_2f1(const HypParams& p, double z, const HypConfig& cfg);
}  // namespace detail

}  // namespace u21
