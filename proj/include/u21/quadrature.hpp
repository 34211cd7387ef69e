#pragma once

#include <functional>
#include <vector>

namespace u21 {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// Cached per n; safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int n);

// n-point Gauss-Legendre approximation of the integral of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace u21
