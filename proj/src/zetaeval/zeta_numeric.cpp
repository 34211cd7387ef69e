// Quadrature side of the zeta integral.
//
// After the U(1)^4 x U(1)^4 phase integration only the constant term of the
// phase Laurent product survives. Each surviving atom factors into a theta
// integral, a theta' integral and a radial integral, so they are computed
// separately and reused across atoms. The radial variable is u = 1/cosh t,
// under which cosh^e(t) D(t) dt = 2 u^{-e-5} (1 - u^2) du on (0, 1).

#include "u21/dscoef.hpp"
#include "u21/error.hpp"
#include "u21/fockweil.hpp"
#include "u21/quadrature.hpp"
#include "u21/zetaeval.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace u21 {

namespace {

double trig_power(double theta, int sin_pow, int cos_pow) {
    return std::pow(std::sin(theta), sin_pow) * std::pow(std::cos(theta), cos_pow);
}

struct RadialKey {
    int cosh_pow;
    std::vector<std::string> handles;
    auto operator<=>(const RadialKey&) const = default;
};

struct Reduced {
    CoeffRecord record;
    // atoms grouped by their t-dependence
    std::map<RadialKey, std::vector<std::pair<std::array<int, 4>, double>>> groups;
};

Reduced reduce(const DualPairCase& c) {
    Reduced out;
    out.record = phase_constant_term(zeta_integrand(c));
    for (const auto& [k, q] : out.record.atoms())
        out.groups[{k.cosh_pow, k.handles}].push_back({k.trig, q.to_double()});
    return out;
}

double radial_weight(int cosh_pow, double u) { return 2 * std::pow(u, -cosh_pow - 5) * (1 - u * u); }

double handles_at(const CoeffRecord& rec, const std::vector<std::string>& hs, double t) {
    double v = 1;
    for (const auto& h : hs) v *= rec.handle(h)->fn(t);
    return v;
}

}  // namespace

PhaseLaurent zeta_integrand(const DualPairCase& c) {
    const Chamber ch = c.require_subcase();
    const BlattnerParam b = blattner_param(dual_param(fock_weight(c)));
    return weil_closed_form(c) * psi_full_symbolic(b, ch);
}

double zeta_numeric(const DualPairCase& c, const QuadratureConfig& cfg) {
    if (cfg.n_t < 2 || cfg.n_theta < 2) fail(Errc::invalid_argument, "quadrature needs at least 2 nodes");
    const Reduced red = reduce(c);

    std::map<std::pair<int, int>, double> angular;
    auto ang = [&](int sp, int cp) {
        auto it = angular.find({sp, cp});
        if (it != angular.end()) return it->second;
        const double v = integrate_gl(
            [&](double th) { return trig_power(th, sp, cp) * std::sin(2 * th); }, 0.0, std::numbers::pi / 2,
            cfg.n_theta);
        angular[{sp, cp}] = v;
        return v;
    };

    double total = 0;
    for (const auto& [key, atoms] : red.groups) {
        double angle_sum = 0;
        for (const auto& [trig, q] : atoms) angle_sum += q * ang(trig[0], trig[1]) * ang(trig[2], trig[3]);
        if (angle_sum == 0) continue;
        const double radial = integrate_gl(
            [&](double u) {
                const double t = std::acosh(1 / u);
                return radial_weight(key.cosh_pow, u) * handles_at(red.record, key.handles, t);
            },
            0.0, 1.0, cfg.n_t);
        total += angle_sum * radial;
    }
    return total;
}

MonteCarloEstimate zeta_monte_carlo(const DualPairCase& c, long samples, std::uint64_t seed) {
    if (samples < 2) fail(Errc::invalid_argument, "Monte Carlo needs at least 2 samples");
    const Reduced red = reduce(c);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double half_pi = std::numbers::pi / 2;
    double sum = 0, sum_sq = 0;
    for (long n = 0; n < samples; ++n) {
        const double u = unit(gen), th = half_pi * unit(gen), thp = half_pi * unit(gen);
        const double t = std::acosh(1 / u);
        double f = 0;
        for (const auto& [key, atoms] : red.groups) {
            double a = 0;
            for (const auto& [trig, q] : atoms)
                a += q * trig_power(th, trig[0], trig[1]) * trig_power(thp, trig[2], trig[3]);
            f += a * radial_weight(key.cosh_pow, u) * handles_at(red.record, key.handles, t);
        }
        f *= std::sin(2 * th) * std::sin(2 * thp) * half_pi * half_pi;
        sum += f;
        sum_sq += f * f;
    }
    MonteCarloEstimate e;
    e.samples = samples;
    e.mean = sum / samples;
    const double var = std::max(0.0, sum_sq / samples - e.mean * e.mean);
    e.std_error = std::sqrt(var / (samples - 1));
    return e;
}

}  // namespace u21
