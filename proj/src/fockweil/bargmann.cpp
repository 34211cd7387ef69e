// Kernel oracle for (omega(a_t k) phi, omega(k') phi).
//
// omega(k) is the linear substitution of the K-action formula times the
// determinant characters. omega(a_t) uses the Gaussian kernel: with
// P = diag(cosh t, 1, cosh t) and w-bar acting as (1/pi) d/dw under the
// reproducing kernel,
//   omega(a_t) f(z) = cosh^-3 exp(pi tanh S(z)) [exp(-(tanh/pi) L) f](z / P),
// where S = sum_j z1j z3j and L = sum_j d1j d3j.

#include "u21/error.hpp"
#include "u21/fockweil.hpp"

#include <cmath>
#include <numbers>

namespace u21 {

namespace {

using cplx = std::complex<double>;
using Mat3 = std::array<std::array<cplx, 3>, 3>;

Mat3 k_matrix(const KParams& k) {
    const double c = std::cos(k.theta), s = std::sin(k.theta);
    const cplx zeta = std::polar(1.0, k.zeta), xi = std::polar(1.0, k.xi), eta = std::polar(1.0, k.eta),
               gam = std::polar(1.0, k.gamma);
    Mat3 m{};
    m[0][0] = c * xi;
    m[0][1] = s * eta;
    m[1][0] = -zeta * s * xi;
    m[1][1] = zeta * c * eta;
    m[2][2] = gam;
    return m;
}

NumericFockPoly substitute(const NumericFockPoly& f, const std::array<NumericFockPoly, kFockVars>& image) {
    NumericFockPoly out;
    for (const auto& [e, c] : f.terms()) {
        NumericFockPoly term = NumericFockPoly::constant(c);
        for (int v = 0; v < kFockVars; ++v)
            if (e[v]) term = term * image[v].pow(e[v]);
        out += term;
    }
    return out;
}

NumericFockPoly omega_k(const NumericFockPoly& f, const KParams& kp, CaseTag tag) {
    const Mat3 k = k_matrix(kp);
    const int rp = vprime_signature(tag).first;
    const int sp = 3 - rp;
    // k1 = upper-left 2x2 block, k2 = gamma.
    const cplx det1 = k[0][0] * k[1][1] - k[0][1] * k[1][0];
    const cplx inv1[2][2] = {{k[1][1] / det1, -k[0][1] / det1}, {-k[1][0] / det1, k[0][0] / det1}};
    std::array<NumericFockPoly, kFockVars> image;
    for (int j = 1; j <= 3; ++j) {
        const bool a_block = j <= rp;
        for (int i = 1; i <= 2; ++i) {
            NumericFockPoly lin;
            for (int l = 1; l <= 2; ++l) {
                // (tk1 A)_{ij} = sum_l k1[l][i] z_lj ; (k1^{-1} B)_{ij} = sum_l inv1[i][l] z_lj
                cplx coef = a_block ? k[l - 1][i - 1] : inv1[i - 1][l - 1];
                lin += NumericFockPoly::z(l, j).scaled(coef);
            }
            image[zvar(i, j)] = lin;
        }
        cplx g = a_block ? std::conj(k[2][2]) : k[2][2];
        image[zvar(3, j)] = NumericFockPoly::z(3, j).scaled(g);
    }
    // (det k1)^{(r'-s')/2} (det k2)^{-(r'-s')/2} with half-integer powers taken on the angles.
    const double h = 0.5 * (rp - sp);
    const cplx chi = std::polar(1.0, h * (kp.zeta + kp.xi + kp.eta) - h * kp.gamma);
    return substitute(f, image).scaled(chi);
}

NumericFockPoly apply_laplacian(const NumericFockPoly& f) {
    NumericFockPoly out;
    for (int j = 1; j <= 3; ++j) out += f.derivative(zvar(1, j)).derivative(zvar(3, j));
    return out;
}

NumericFockPoly omega_a(const NumericFockPoly& f, double t) {
    const double ch = std::cosh(t), th = std::tanh(t);
    const int d = std::max(f.degree(), 0);

    // exp(-(tanh/pi) L) f
    NumericFockPoly g = f, term = f;
    for (int m = 1; !term.is_zero(); ++m) {
        term = apply_laplacian(term).scaled(cplx(-th / std::numbers::pi / m));
        g += term;
    }
    // evaluate at z / P
    NumericFockPoly scaled_g;
    for (const auto& [e, c] : g.terms()) {
        int rows13 = 0;
        for (int j = 0; j < 3; ++j) rows13 += e[j] + e[6 + j];
        scaled_g.add_term(e, c * std::pow(ch, -rows13));
    }
    // exp(pi tanh S), truncated at the order that can still pair with degree d.
    NumericFockPoly s;
    for (int j = 1; j <= 3; ++j) s += NumericFockPoly::z(1, j) * NumericFockPoly::z(3, j);
    NumericFockPoly expo = NumericFockPoly::constant(1.0), sp = NumericFockPoly::constant(1.0);
    double coef = 1.0;
    for (int n = 1; 2 * n <= d; ++n) {
        sp = sp * s;
        coef *= std::numbers::pi * th / n;
        expo += sp.scaled(coef);
    }
    return (expo * scaled_g).scaled(cplx(std::pow(ch, -3)));
}

cplx numeric_pairing(const NumericFockPoly& p, const NumericFockPoly& q) {
    cplx total = 0;
    const auto& qt = q.terms();
    for (const auto& [e, c] : p.terms()) {
        auto it = qt.find(e);
        if (it == qt.end()) continue;
        double w = 1.0;
        for (int v : e) w *= std::tgamma(v + 1.0) / std::pow(std::numbers::pi, v);
        total += c * std::conj(it->second) * w;
    }
    return total;
}

}  // namespace

std::complex<double> bargmann_oracle(const DualPairCase& c, double t, const KParams& k, const KParams& kp,
                                     const OracleConfig& cfg) {
    const FockPolynomial phi = build_harmonic(c).phi;
    const int deg = phi.degree();
    if (deg > cfg.degree_cap) {
        fail(Errc::degree_cap, "harmonic of degree " + std::to_string(deg) + " exceeds the oracle cap " +
                                   std::to_string(cfg.degree_cap));
    }
    const NumericFockPoly f = to_numeric(phi);
    const NumericFockPoly left = omega_a(omega_k(f, k, c.tag), t);
    const NumericFockPoly right = omega_k(f, kp, c.tag);
    return numeric_pairing(left, right);
}

}  // namespace u21
