#include "u21/dscoef.hpp"

#include "u21/error.hpp"
#include "u21/hypergeo.hpp"

#include <cmath>

namespace u21 {

namespace {

HypParams mid_params(long r, long s, long i) {
    return {1.0 + static_cast<double>(i), 1.0 - static_cast<double>(s), static_cast<double>(r + 2)};
}

void check_index(long r, long i) {
    if (r < 0 || i < 0 || i > r) fail(Errc::invalid_argument, "index i must lie in 0..r");
}

double binom_d(long n, long k) { return binomial(n, k).to_double(); }

}  // namespace

double ctilde(Chamber c, long r, long s, long i, double t) {
    check_index(r, i);
    const double ch = std::cosh(t);
    switch (c) {
        case Chamber::I: return std::pow(ch, static_cast<double>(-i - s));
        case Chamber::II: return std::pow(ch, static_cast<double>(i + s));
        case Chamber::III: {
            const double th = std::tanh(t);
            return std::pow(ch, static_cast<double>(-2 - i + s)) * gauss_2f1(mid_params(r, s, i), th * th);
        }
    }
    return 0;
}

double ctilde_alt(long r, long s, long i, double t) {
    check_index(r, i);
    const double ch = std::cosh(t), th = std::tanh(t);
    HypParams p{1.0 + r - i, 1.0 + r + s, static_cast<double>(r + 2)};
    return std::pow(ch, static_cast<double>(-2 * r - 2 + i - s)) * gauss_2f1(p, th * th);
}

double ctilde_derivative(Chamber c, long r, long s, long i, double t) {
    check_index(r, i);
    const double th = std::tanh(t);
    switch (c) {
        case Chamber::I: return -static_cast<double>(i + s) * th * ctilde(c, r, s, i, t);
        case Chamber::II: return static_cast<double>(i + s) * th * ctilde(c, r, s, i, t);
        case Chamber::III: {
            const double ch = std::cosh(t);
            const double x = th * th;
            const HypParams p = mid_params(r, s, i);
            const double pw = std::pow(ch, static_cast<double>(-2 - i + s));
            const double f = gauss_2f1(p, x), df = derivative_2f1(p, x);
            return static_cast<double>(-2 - i + s) * th * pw * f + pw * df * 2 * th / (ch * ch);
        }
    }
    return 0;
}

double psi_radial(Chamber c, long r, long s, double t) {
    double sum = 0;
    for (long i = 0; i <= r; ++i) sum += ctilde(c, r, s, i, t);
    return sum;
}

namespace {

// Integer power; std::pow on a complex zero base yields NaN.
std::complex<double> ipow(std::complex<double> z, long n) {
    std::complex<double> out = 1;
    for (; n > 0; --n) out *= z;
    return out;
}

}  // namespace

std::complex<double> psi_full(const BlattnerParam& b, Chamber ch, double t, const KParams& k, const KParams& kp) {
    using cplx = std::complex<double>;
    const auto ang = phase_pair_angles(k, kp);
    const cplx p2 = std::polar(1.0, ang[1]), p3 = std::polar(1.0, ang[2]);
    const double c = std::cos(k.theta), s = std::sin(k.theta), cp = std::cos(kp.theta), sp = std::sin(kp.theta);
    const cplx a = p2 * (c * cp) + p3 * (s * sp);
    const cplx bb = -p2 * (c * sp) + p3 * (s * cp);
    const cplx cc = -p2 * (s * cp) + p3 * (c * sp);
    const cplx d = p2 * (s * sp) + p3 * (c * cp);
    const long r = b.r;
    const double L1 = b.Lambda[0].to_double(), L2 = b.Lambda[1].to_double(), L3 = b.Lambda[2].to_double();
    cplx total = 0;
    for (long i = 0; i <= r; ++i) {
        cplx inner = 0;
        for (long l = 0; l <= i; ++l) {
            const double w = binom_d(i, l) * binom_d(r - i, i - l);
            if (w == 0) continue;
            inner += w * ipow(a, l) * ipow(bb * cc, i - l) * ipow(d, r - 2 * i + l);
        }
        const double phase = (L1 - i) * ang[0] + L2 * (ang[1] + ang[2]) + L3 * ang[3];
        total += ctilde(ch, r, b.s, i, t) * std::polar(1.0, phase) * inner;
    }
    return total;
}

PhaseLaurent psi_full_symbolic(const BlattnerParam& b, Chamber ch) {
    const long r = b.r, s = b.s;
    auto pm = [](long e2, long e3, Rational q, std::array<int, 4> trig) {
        PhaseExponent e = {HalfInt(0), HalfInt(e2), HalfInt(e3), HalfInt(0)};
        return PhaseLaurent::monomial(e, CoeffRecord::atom(q, 0, trig));
    };
    // trig order: sin th, cos th, sin th', cos th'
    const PhaseLaurent a = pm(1, 0, 1, {0, 1, 0, 1}) + pm(0, 1, 1, {1, 0, 1, 0});
    const PhaseLaurent bb = pm(1, 0, -1, {0, 1, 1, 0}) + pm(0, 1, 1, {1, 0, 0, 1});
    const PhaseLaurent cc = pm(1, 0, -1, {1, 0, 0, 1}) + pm(0, 1, 1, {0, 1, 1, 0});
    const PhaseLaurent d = pm(1, 0, 1, {1, 0, 1, 0}) + pm(0, 1, 1, {0, 1, 0, 1});
    const PhaseLaurent bc = bb * cc;

    PhaseLaurent total;
    for (long i = 0; i <= r; ++i) {
        PhaseLaurent inner;
        for (long l = 0; l <= i; ++l) {
            const Rational w = binomial(i, l) * binomial(r - i, i - l);
            if (w.is_zero()) continue;
            PhaseLaurent term = a.pow(static_cast<int>(l)) * bc.pow(static_cast<int>(i - l)) *
                                d.pow(static_cast<int>(r - 2 * i + l));
            inner += term * PhaseLaurent::constant(CoeffRecord::scalar(w));
        }
        CoeffRecord radial;
        switch (ch) {
            case Chamber::I: radial = CoeffRecord::atom(Rational(1), static_cast<int>(-i - s)); break;
            case Chamber::II: radial = CoeffRecord::atom(Rational(1), static_cast<int>(i + s)); break;
            case Chamber::III: {
                const HypParams p = mid_params(r, s, i);
                const std::string key = "2F1(" + std::to_string(1 + i) + "," + std::to_string(1 - s) + ";" +
                                        std::to_string(r + 2) + ";tanh^2 t)";
                RadialRef h = make_radial(key, [p](double t) {
                    const double th = std::tanh(t);
                    return gauss_2f1(p, th * th);
                });
                radial = CoeffRecord::atom(Rational(1), static_cast<int>(-2 - i + s)) * CoeffRecord::radial(h);
                break;
            }
        }
        PhaseExponent e = {b.Lambda[0] - HalfInt(i), b.Lambda[1], b.Lambda[1], b.Lambda[2]};
        total += PhaseLaurent::monomial(e, radial) * inner;
    }
    return total;
}

ResidualPair schmid_residual_of(Chamber system, long r, long s, long i, double t, const RadialFamily& f) {
    check_index(r, i);
    if (!(t > 0)) fail(Errc::invalid_argument, "Schmid residuals need t > 0");
    const double th = std::tanh(t), cth = 1.0 / th, ish = 1.0 / std::sinh(t);
    // c_j and c_j' for j in {i-1, i, i+1}; zero outside 0..r.
    auto cval = [&](long j) -> std::pair<double, double> {
        if (j < 0 || j > r) return {0.0, 0.0};
        const double w = (j % 2 == 0 ? 1.0 : -1.0) * binom_d(r, j);
        auto [v, dv] = f(j, t);
        return {w * v, w * dv};
    };
    const auto [ci, dci] = cval(i);
    const auto [cm, dcm] = cval(i - 1);
    const auto [cp, dcp] = cval(i + 1);
    (void)dcm;
    (void)dcp;
    const double is = static_cast<double>(i + s);
    const double di = static_cast<double>(i), dr = static_cast<double>(r);

    const double pm = -0.5 * dci - 0.5 * is * th * ci + di * cth * ci + (dr - di + 1) * ish * cm;
    const double mm = di * (0.5 * dci + 0.5 * is * th * ci + (dr + 1 - di) * cth * ci) +
                      (dr + 1 - di) * (dr + 1 - di) * ish * cm;
    const double pp = -0.5 * dci + 0.5 * is * th * ci + (dr - di) * cth * ci + (di + 1) * ish * cp;
    const double mp = (dr - di) * (0.5 * dci - 0.5 * is * th * ci + (di + 1) * cth * ci) +
                      (di + 1) * (di + 1) * ish * cp;
    switch (system) {
        case Chamber::I: return {pm, mm};
        case Chamber::II: return {pp, mp};
        case Chamber::III: return {mm, mp};
    }
    return {};
}

ResidualPair schmid_residual(Chamber c, long r, long s, long i, double t) {
    RadialFamily f = [&](long j, double tt) {
        return std::make_pair(ctilde(c, r, s, j, tt), ctilde_derivative(c, r, s, j, tt));
    };
    return schmid_residual_of(c, r, s, i, t, f);
}

double riemann_p_residual_of(long r, long s, long i, double t, const ZFunction& u) {
    const double z = 1.0 / (std::cosh(t) * std::cosh(t));
    const double ai = 1.0 + 0.5 * static_cast<double>(i - s);
    const double ap = static_cast<double>(r + 1) - 0.5 * static_cast<double>(i - s);
    const double b = 0.5 * static_cast<double>(i + s), bp = -b;
    const double g = 0.0, gp = -static_cast<double>(r + 1);
    const auto [v, dv, ddv] = u(z);
    const double p1 = (1 - ai - ap) / z + (1 - g - gp) / (z - 1);
    const double q = (-ai * ap / z + b * bp + g * gp / (z - 1)) / (z * (z - 1));
    return ddv + p1 * dv + q * v;
}

double riemann_p_residual(long r, long s, long i, double t) {
    check_index(r, i);
    const HypParams p = mid_params(r, s, i);
    const HypParams p1{p.a + 1, p.b + 1, p.c + 1};
    const double e = 1.0 + 0.5 * static_cast<double>(i - s);
    ZFunction u = [&](double z) -> std::array<double, 3> {
        const double x = 1 - z;
        const double G = gauss_2f1(p, x);
        const double G1 = derivative_2f1(p, x);
        const double G2 = derivative_2f1(p1, x) * p.a * p.b / p.c;
        const double ze = std::pow(z, e);
        return {ze * G, e * std::pow(z, e - 1) * G - ze * G1,
                e * (e - 1) * std::pow(z, e - 2) * G - 2 * e * std::pow(z, e - 1) * G1 + ze * G2};
    };
    return riemann_p_residual_of(r, s, i, t, u);
}

}  // namespace u21
