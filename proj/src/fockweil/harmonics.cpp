#include "u21/error.hpp"
#include "u21/fockweil.hpp"

#include <cmath>
#include <numbers>

namespace u21 {

double PiScaled::value() const { return coeff.to_double() / std::pow(std::numbers::pi, inv_pi_power); }

std::string PiScaled::str() const {
    if (inv_pi_power == 0) return coeff.str();
    return coeff.str() + " * pi^-" + std::to_string(inv_pi_power);
}

std::complex<double> FockPairing::value() const {
    std::complex<double> v = 0;
    for (const auto& [d, c] : by_inv_pi_power) {
        v += std::complex<double>(c.re.to_double(), c.im.to_double()) / std::pow(std::numbers::pi, d);
    }
    return v;
}

std::optional<PiScaled> FockPairing::as_pi_scaled() const {
    if (by_inv_pi_power.empty()) return PiScaled{Rational(0), 0};
    if (by_inv_pi_power.size() != 1) return std::nullopt;
    const auto& [d, c] = *by_inv_pi_power.begin();
    if (!c.im.is_zero()) return std::nullopt;
    return PiScaled{c.re, d};
}

FockPairing fock_inner_product(const FockPolynomial& p, const FockPolynomial& q) {
    FockPairing out;
    const auto& qt = q.terms();
    for (const auto& [e, c] : p.terms()) {
        auto it = qt.find(e);
        if (it == qt.end()) continue;
        BigInt weight = 1;
        int total = 0;
        for (int v : e) {
            weight *= factorial(v);
            total += v;
        }
        GaussRational term = c * it->second.conj() * GaussRational(Rational(weight));
        auto [slot, inserted] = out.by_inv_pi_power.try_emplace(total, term);
        if (!inserted) slot->second += term;
        if (slot->second.is_zero()) out.by_inv_pi_power.erase(slot);
    }
    return out;
}

namespace {

FockPolynomial zp(int i, int j) { return FockPolynomial::z(i, j); }

FockPolynomial det_a() { return zp(1, 1) * zp(2, 2) - zp(2, 1) * zp(1, 2); }
FockPolynomial det_b() { return zp(1, 2) * zp(2, 3) - zp(2, 2) * zp(1, 3); }

FockPolynomial harmonic_poly(const DualPairCase& c) {
    const CaseParams& p = c.params;
    switch (c.tag) {
        case CaseTag::A:
            return zp(1, 1).pow(p.mu1 - p.mu2) * det_a().pow(p.mu2) * zp(3, 3).pow(p.nu);
        case CaseTag::B:
            return zp(2, 3).pow(p.nu1 - p.nu2) * det_b().pow(p.nu2) * zp(3, 1).pow(p.alpha);
        case CaseTag::C1:
            return zp(1, 1).pow(p.mu1 - p.mu2) * det_a().pow(p.mu2) * zp(3, 3).pow(p.alpha);
        case CaseTag::C2:
            return zp(1, 1).pow(p.mu) * zp(2, 3).pow(p.nu) * zp(3, 2).pow(p.beta);
        case CaseTag::D1:
            return zp(2, 3).pow(p.nu1 - p.nu2) * det_b().pow(p.nu2) * zp(3, 1).pow(p.beta);
        case CaseTag::D2:
            return zp(1, 1).pow(p.mu) * zp(2, 3).pow(p.nu) * zp(3, 2).pow(p.alpha);
    }
    fail(Errc::invalid_argument, "unknown case");
}

constexpr int kRowSign[3] = {+1, +1, -1};

std::array<int, 3> column_signs(CaseTag t) {
    auto [rp, sp] = vprime_signature(t);
    std::array<int, 3> e{};
    for (int j = 0; j < 3; ++j) e[j] = j < rp ? +1 : -1;
    (void)sp;
    return e;
}

}  // namespace

HarmonicVector build_harmonic(const DualPairCase& c) {
    HarmonicVector h;
    h.dpcase = c;
    h.phi = harmonic_poly(c);
    auto n = fock_inner_product(h.phi, h.phi).as_pi_scaled();
    if (!n) fail(Errc::invalid_argument, "norm of a homogeneous harmonic must be pure in pi");
    h.norm_sq = *n;
    return h;
}

PiScaled phi_norm_sq(const DualPairCase& c) { return build_harmonic(c).norm_sq; }

PiScaled norm_sq_case_a_formula(long mu1, long mu2, long nu) {
    Rational q = Rational(factorial(mu2)) * Rational(factorial(nu)) * Rational(factorial(mu1 + 1)) /
                 Rational(mu1 - mu2 + 1);
    return PiScaled{q, static_cast<int>(mu1 + mu2 + nu)};
}

AnnihilatorSet annihilators(CaseTag t) {
    auto d = [](int i1, int j1, int i2, int j2) { return std::make_pair(zvar(i1, j1), zvar(i2, j2)); };
    AnnihilatorSet s;
    switch (t) {
        case CaseTag::A:
        case CaseTag::B:
            s.m = {{d(1, 1, 3, 1), d(1, 2, 3, 2), d(1, 3, 3, 3)}, {d(2, 1, 3, 1), d(2, 2, 3, 2), d(2, 3, 3, 3)}};
            break;
        case CaseTag::C1:
        case CaseTag::C2:
            s.m = {{d(1, 1, 3, 1), d(1, 2, 3, 2)}, {d(1, 3, 3, 3)}, {d(2, 1, 3, 1), d(2, 2, 3, 2)}, {d(2, 3, 3, 3)}};
            s.m_prime = {{d(1, 1, 1, 3), d(2, 1, 2, 3)}, {d(1, 2, 1, 3), d(2, 2, 2, 3)}, {d(3, 1, 3, 3)}, {d(3, 2, 3, 3)}};
            break;
        case CaseTag::D1:
        case CaseTag::D2:
            s.m = {{d(1, 1, 3, 1)}, {d(1, 2, 3, 2), d(1, 3, 3, 3)}, {d(2, 1, 3, 1)}, {d(2, 2, 3, 2), d(2, 3, 3, 3)}};
            s.m_prime = {{d(1, 1, 1, 2), d(2, 1, 2, 2)}, {d(1, 1, 1, 3), d(2, 1, 2, 3)}, {d(3, 1, 3, 2)}, {d(3, 1, 3, 3)}};
            break;
    }
    return s;
}

FockPolynomial apply_op(const SecondOrderOp& op, const FockPolynomial& f) {
    FockPolynomial out;
    for (const auto& [a, b] : op) out += f.derivative(a).derivative(b);
    return out;
}

bool harmonicity_check(const FockPolynomial& phi, CaseTag t) {
    const AnnihilatorSet s = annihilators(t);
    for (const auto* family : {&s.m, &s.m_prime}) {
        for (const auto& op : *family)
            if (!apply_op(op, phi).is_zero()) return false;
    }
    return true;
}

bool harmonicity_check(const HarmonicVector& h) { return harmonicity_check(h.phi, h.dpcase.tag); }

std::optional<HalfIntTriple> row_weight(const FockPolynomial& phi, CaseTag t) {
    if (phi.is_zero()) return std::nullopt;
    const auto eps_col = column_signs(t);
    auto [rp, sp] = vprime_signature(t);
    std::optional<HalfIntTriple> w;
    for (const auto& [e, c] : phi.terms()) {
        HalfIntTriple cur;
        for (int i = 0; i < 3; ++i) {
            long twice = rp - sp;  // 2 * (r'-s')/2
            for (int j = 0; j < 3; ++j) twice += 2L * eps_col[j] * e[3 * i + j];
            cur[i] = HalfInt::from_twice(kRowSign[i] * twice);
        }
        if (w && *w != cur) return std::nullopt;
        w = cur;
    }
    return w;
}

std::optional<HalfIntTriple> column_weight(const FockPolynomial& phi, CaseTag t) {
    if (phi.is_zero()) return std::nullopt;
    const auto eps_col = column_signs(t);
    std::optional<HalfIntTriple> w;
    for (const auto& [e, c] : phi.terms()) {
        HalfIntTriple cur;
        for (int j = 0; j < 3; ++j) {
            long twice = 1;  // 2 * (p-q)/2 with (p, q) = (2, 1)
            for (int i = 0; i < 3; ++i) twice += 2L * kRowSign[i] * e[3 * i + j];
            cur[j] = HalfInt::from_twice(eps_col[j] * twice);
        }
        if (w && *w != cur) return std::nullopt;
        w = cur;
    }
    return w;
}

bool weight_check(const HarmonicVector& h) {
    auto rw = row_weight(h.phi, h.dpcase.tag);
    auto cw = column_weight(h.phi, h.dpcase.tag);
    return rw && cw && *rw == fock_weight(h.dpcase) && *cw == gprime_weight(h.dpcase);
}

}  // namespace u21
