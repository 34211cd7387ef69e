#include "u21/hypergeo.hpp"

#include "u21/error.hpp"
#include "u21/exactmath.hpp"
#include "u21/quadrature.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace u21 {

namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kSqrtPi = 1.772453850905516027298167483341145183L;

std::string params_str(const HypParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(a=" << p.a << ", b=" << p.b << ", c=" << p.c << ")";
    return os.str();
}

// Compensated (Neumaier) accumulator.
struct Accum {
    long double sum = 0, comp = 0;
    void add(long double x) {
        long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    long double value() const { return sum + comp; }
};

long as_long(double x) { return static_cast<long>(std::llround(x)); }

// Smallest-magnitude nonpositive integer among a, b, or 1 if none.
bool terminates(const HypParams& p, long* degree) {
    bool ta = is_nonpositive_integer(p.a), tb = is_nonpositive_integer(p.b);
    if (!ta && !tb) return false;
    long m = -1;
    if (ta) m = -as_long(p.a);
    if (tb && (m < 0 || -as_long(p.b) < m)) m = -as_long(p.b);
    *degree = m;
    return true;
}

}  // namespace

bool is_integer_value(double x) { return std::isfinite(x) && x == std::round(x); }
bool is_nonpositive_integer(double x) { return is_integer_value(x) && x <= 0; }
bool is_half_integer_value(double x) { return std::isfinite(x) && !is_integer_value(x) && is_integer_value(2 * x); }

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) fail(Errc::invalid_params, "Gamma pole at " + std::to_string(x));
    if (is_integer_value(x) && x < 200) return factorial(as_long(x) - 1).get_d();
    if (is_half_integer_value(x) && std::fabs(x) < 200) {
        long n = as_long(std::floor(x));  // x = n + 1/2
        Rational ratio;
        if (n >= 0) {
            ratio = Rational(factorial(2 * n)) / (Rational(factorial(n)) * Rational(4).pow(n));
        } else {
            long m = -n;
            ratio = Rational(factorial(m)) * Rational(-4).pow(m) / Rational(factorial(2 * m));
        }
        return static_cast<double>(static_cast<long double>(ratio.to_double()) * kSqrtPi);
    }
    return boost::math::tgamma(x);
}

double rgamma_fn(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / gamma_fn(x);
}

double digamma_fn(double x) {
    if (is_nonpositive_integer(x)) fail(Errc::invalid_params, "digamma pole at " + std::to_string(x));
    if ((is_integer_value(x) || is_half_integer_value(x)) && std::fabs(x) < 1e6) {
        long double shift = 0;
        long double y = x;
        while (y < 0.75L) {  // recurse up to the positive ladder
            shift -= 1 / y;
            y += 1;
        }
        long double val;
        if (is_integer_value(static_cast<double>(y))) {
            val = -kEulerGamma;
            for (long k = 1; k < as_long(static_cast<double>(y)); ++k) val += 1.0L / k;
        } else {
            val = -kEulerGamma - 2 * kLn2;
            long n = as_long(std::floor(static_cast<double>(y)));
            for (long k = 1; k <= n; ++k) val += 2.0L / (2 * k - 1);
        }
        return static_cast<double>(val + shift);
    }
    return boost::math::digamma(x);
}

namespace detail {

double series_2f1(const HypParams& p, double z, const HypConfig& cfg) {
    Accum acc;
    long double term = 1;
    acc.add(term);
    int quiet = 0;
    for (long k = 0; k < cfg.max_terms; ++k) {
        long double ratio = (p.a + k) * static_cast<long double>(p.b + k) / ((p.c + k) * (k + 1.0L)) * z;
        term *= ratio;
        if (term == 0) return static_cast<double>(acc.value());
        acc.add(term);
        if (std::fabs(ratio) < 1 && std::fabs(term) <= cfg.rel_tol * std::fabs(acc.value())) {
            if (++quiet >= 2) return static_cast<double>(acc.value());
        } else {
            quiet = 0;
        }
    }
    fail(Errc::non_convergent, "2F1 series " + params_str(p) + " did not converge in " +
                                   std::to_string(cfg.max_terms) + " terms at z=" + std::to_string(z));
}

double terminating_2f1(const HypParams& p, double z) {
    long m = 0;
    if (!terminates(p, &m)) fail(Errc::invalid_argument, "series does not terminate");
    if (is_nonpositive_integer(p.c) && m > -as_long(p.c)) {
        fail(Errc::invalid_c, "c is a nonpositive integer reached before termination " + params_str(p));
    }
    const Rational a = Rational::from_double(p.a), b = Rational::from_double(p.b);
    const Rational c = Rational::from_double(p.c), zz = Rational::from_double(z);
    Rational sum(1), term(1);
    for (long k = 0; k < m; ++k) {
        term *= (a + Rational(k)) * (b + Rational(k)) * zz / ((c + Rational(k)) * Rational(k + 1));
        sum += term;
    }
    return sum.to_double();
}

double connection_2f1(const HypParams& p, double z, const HypConfig& cfg) {
    const double a = p.a, b = p.b, c = p.c;
    const double w = 1.0 - z;
    const double d = c - a - b;
    if (!is_integer_value(d)) {
        double total = 0;
        double k1 = gamma_fn(c) * gamma_fn(d) * rgamma_fn(c - a) * rgamma_fn(c - b);
        if (k1 != 0) total += k1 * gauss_2f1({a, b, 1 - d}, w, cfg);
        double k2 = gamma_fn(c) * gamma_fn(-d) * rgamma_fn(a) * rgamma_fn(b);
        if (k2 != 0) total += k2 * std::pow(w, d) * gauss_2f1({c - a, c - b, 1 + d}, w, cfg);
        return total;
    }
    const long m = as_long(d);
    const long double lnw = std::log(static_cast<long double>(w));
    if (m >= 0) {
        // c = a + b + m
        long double s1 = 0;
        if (m > 0) {
            long double term = 1;
            for (long n = 0; n < m; ++n) {
                s1 += term;
                term *= (a + n) * static_cast<long double>(b + n) / ((n + 1.0L) * (1.0L - m + n)) * w;
            }
            s1 *= gamma_fn(static_cast<double>(m)) * gamma_fn(c) * rgamma_fn(a + m) * rgamma_fn(b + m);
        }
        const double k2 = gamma_fn(c) * rgamma_fn(a) * rgamma_fn(b);
        if (k2 == 0) return static_cast<double>(s1);
        long double coef = 1.0L / factorial(m).get_d();
        long double p1 = digamma_fn(1.0), p2 = digamma_fn(static_cast<double>(m + 1));
        long double pa = digamma_fn(a + m), pb = digamma_fn(b + m);
        Accum acc;
        int quiet = 0;
        for (long n = 0;; ++n) {
            if (n >= cfg.max_terms) fail(Errc::non_convergent, "log-case connection series " + params_str(p));
            long double term = coef * (lnw - p1 - p2 + pa + pb);
            acc.add(term);
            if (std::fabs(term) <= cfg.rel_tol * std::fabs(acc.value()) || term == 0) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            coef *= (a + m + n) * static_cast<long double>(b + m + n) / ((n + 1.0L) * (n + m + 1.0L)) * w;
            p1 += 1.0L / (n + 1);
            p2 += 1.0L / (n + m + 1);
            pa += 1.0L / (a + n + m);
            pb += 1.0L / (b + n + m);
        }
        long double sign_wm = std::pow(-static_cast<long double>(w), m);
        return static_cast<double>(s1 - sign_wm * k2 * acc.value());
    }
    // c = a + b - mm
    const long mm = -m;
    long double s1 = 0;
    {
        long double term = 1;
        for (long n = 0; n < mm; ++n) {
            s1 += term;
            term *= (a - mm + n) * static_cast<long double>(b - mm + n) / ((n + 1.0L) * (1.0L - mm + n)) * w;
        }
        s1 *= gamma_fn(static_cast<double>(mm)) * gamma_fn(c) * rgamma_fn(a) * rgamma_fn(b) *
              std::pow(static_cast<long double>(w), -mm);
    }
    const double k2 = gamma_fn(c) * rgamma_fn(a - mm) * rgamma_fn(b - mm);
    if (k2 == 0) return static_cast<double>(s1);
    long double coef = 1.0L / factorial(mm).get_d();
    long double p1 = digamma_fn(1.0), p2 = digamma_fn(static_cast<double>(mm + 1));
    long double pa = digamma_fn(a), pb = digamma_fn(b);
    Accum acc;
    int quiet = 0;
    for (long n = 0;; ++n) {
        if (n >= cfg.max_terms) fail(Errc::non_convergent, "log-case connection series " + params_str(p));
        long double term = coef * (lnw - p1 - p2 + pa + pb);
        acc.add(term);
        if (std::fabs(term) <= cfg.rel_tol * std::fabs(acc.value()) || term == 0) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        coef *= (a + n) * static_cast<long double>(b + n) / ((n + 1.0L) * (n + mm + 1.0L)) * w;
        p1 += 1.0L / (n + 1);
        p2 += 1.0L / (n + mm + 1);
        pa += 1.0L / (a + n);
        pb += 1.0L / (b + n);
    }
    const long double sgn = (mm % 2 == 0) ? 1.0L : -1.0L;
    return static_cast<double>(s1 - sgn * k2 * acc.value());
}

}  // namespace detail

double gauss_2f1(const HypParams& p, double z, const HypConfig& cfg) {
    long m = 0;
    if (terminates(p, &m)) return detail::terminating_2f1(p, z);
    if (is_nonpositive_integer(p.c)) fail(Errc::invalid_c, "c is a nonpositive integer " + params_str(p));
    if (!(std::fabs(z) < 1)) fail(Errc::invalid_argument, "2F1 requires |z| < 1 for a non-terminating series");
    if (z == 0) return 1.0;
    if (z > cfg.near_one) return detail::connection_2f1(p, z, cfg);
    return detail::series_2f1(p, z, cfg);
}

double gauss_value_at_1(const HypParams& p) {
    const double d = p.c - p.a - p.b;
    if (is_nonpositive_integer(p.c)) fail(Errc::invalid_c, "c is a nonpositive integer " + params_str(p));
    // A terminating series is finite at z = 1 whatever c - a - b is.
    if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) return detail::terminating_2f1(p, 1.0);
    if (!(d > 0)) fail(Errc::pole_at_one, "F(a,b,c,1) diverges for c-a-b <= 0 " + params_str(p));
    return gamma_fn(p.c) * gamma_fn(d) * rgamma_fn(p.c - p.a) * rgamma_fn(p.c - p.b);
}

double derivative_2f1(const HypParams& p, double z, const HypConfig& cfg) {
    if (p.a == 0 || p.b == 0) return 0.0;
    return p.a * p.b / p.c * gauss_2f1({p.a + 1, p.b + 1, p.c + 1}, z, cfg);
}

double euler_integral_2f1(const HypParams& p, double z, int quadrature_order) {
    if (!(p.a > 0) || !(p.c > p.a)) fail(Errc::invalid_params, "Euler integral needs c > a > 0 " + params_str(p));
    if (!(z <= 1) || !(z > -1)) fail(Errc::invalid_argument, "Euler integral needs -1 < z <= 1");
    // x = sin^2(phi) turns integer and half-integer exponents into smooth integrands.
    const double ea = 2 * p.a - 1, ec = 2 * (p.c - p.a) - 1;
    auto f = [&](double phi) {
        const double s = std::sin(phi), co = std::cos(phi);
        return 2 * std::pow(s, ea) * std::pow(co, ec) * std::pow(1 - z * s * s, -p.b);
    };
    const double integral = integrate_gl(f, 0.0, std::numbers::pi / 2, quadrature_order);
    return integral * gamma_fn(p.c) * rgamma_fn(p.a) * rgamma_fn(p.c - p.a);
}

}  // namespace u21
