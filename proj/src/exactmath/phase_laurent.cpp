#include "u21/phase_laurent.hpp"

#include "u21/error.hpp"

#include <algorithm>
#include <cmath>

namespace u21 {

RadialRef make_radial(std::string key, std::function<double(double)> fn) {
    return std::make_shared<const RadialHandle>(RadialHandle{std::move(key), std::move(fn)});
}

CoeffRecord CoeffRecord::scalar(const Rational& q) { return atom(q, 0); }

CoeffRecord CoeffRecord::atom(const Rational& q, int cosh_pow, std::array<int, 4> trig) {
    CoeffRecord c;
    AtomKey k;
    k.cosh_pow = cosh_pow;
    k.trig = trig;
    c.add_atom(k, q);
    return c;
}

CoeffRecord CoeffRecord::radial(const RadialRef& h, const Rational& q) {
    CoeffRecord c;
    AtomKey k;
    k.handles.push_back(h->key);
    c.handles_.emplace(h->key, h);
    c.add_atom(k, q);
    return c;
}

const RadialRef& CoeffRecord::handle(const std::string& key) const {
    auto it = handles_.find(key);
    if (it == handles_.end()) fail(Errc::invalid_argument, "unknown radial handle " + key);
    return it->second;
}

void CoeffRecord::add_atom(const AtomKey& k, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = atoms_.try_emplace(k, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) atoms_.erase(it);
    }
}

void CoeffRecord::merge_handles(const CoeffRecord& o) {
    for (const auto& [k, h] : o.handles_) handles_.emplace(k, h);
}

CoeffRecord& CoeffRecord::operator+=(const CoeffRecord& o) {
    merge_handles(o);
    for (const auto& [k, q] : o.atoms_) add_atom(k, q);
    return *this;
}

CoeffRecord operator*(const CoeffRecord& a, const CoeffRecord& b) {
    CoeffRecord out;
    out.merge_handles(a);
    out.merge_handles(b);
    for (const auto& [ka, qa] : a.atoms_) {
        for (const auto& [kb, qb] : b.atoms_) {
            AtomKey k;
            k.cosh_pow = ka.cosh_pow + kb.cosh_pow;
            for (int j = 0; j < 4; ++j) k.trig[j] = ka.trig[j] + kb.trig[j];
            k.handles = ka.handles;
            k.handles.insert(k.handles.end(), kb.handles.begin(), kb.handles.end());
            std::sort(k.handles.begin(), k.handles.end());
            out.add_atom(k, qa * qb);
        }
    }
    return out;
}

CoeffRecord CoeffRecord::scaled(const Rational& q) const {
    CoeffRecord out;
    out.merge_handles(*this);
    for (const auto& [k, v] : atoms_) out.add_atom(k, v * q);
    return out;
}

double CoeffRecord::evaluate(const AngleSample& s) const {
    const double ch = std::cosh(s.t);
    const std::array<double, 4> base = {std::sin(s.theta), std::cos(s.theta), std::sin(s.theta_prime),
                                        std::cos(s.theta_prime)};
    double total = 0.0;
    for (const auto& [k, q] : atoms_) {
        double v = q.to_double() * std::pow(ch, k.cosh_pow);
        for (int j = 0; j < 4; ++j) {
            if (k.trig[j]) v *= std::pow(base[j], k.trig[j]);
        }
        for (const auto& name : k.handles) v *= handle(name)->fn(s.t);
        total += v;
    }
    return total;
}

PhaseLaurent PhaseLaurent::constant(const CoeffRecord& c) { return monomial(PhaseExponent{}, c); }

PhaseLaurent PhaseLaurent::monomial(const PhaseExponent& e, const CoeffRecord& c) {
    PhaseLaurent p;
    p.add_term(e, c);
    return p;
}

void PhaseLaurent::add_term(const PhaseExponent& e, const CoeffRecord& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PhaseLaurent& PhaseLaurent::operator+=(const PhaseLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PhaseLaurent operator*(const PhaseLaurent& a, const PhaseLaurent& b) {
    PhaseLaurent out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            PhaseExponent e;
            for (int j = 0; j < 4; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

PhaseLaurent PhaseLaurent::pow(int n) const {
    if (n < 0) fail(Errc::invalid_argument, "negative power of a PhaseLaurent");
    PhaseLaurent result = constant(CoeffRecord::scalar(Rational(1)));
    for (int k = 0; k < n; ++k) result = result * *this;
    return result;
}

PhaseLaurent PhaseLaurent::conj() const {
    PhaseLaurent out;
    for (const auto& [e, c] : terms_) {
        PhaseExponent f;
        for (int j = 0; j < 4; ++j) f[j] = -e[j];
        out.add_term(f, c);
    }
    return out;
}

std::complex<double> PhaseLaurent::evaluate(const AngleSample& s, const std::array<double, 4>& angles) const {
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
        double arg = 0.0;
        for (int j = 0; j < 4; ++j) arg += e[j].to_double() * angles[j];
        total += c.evaluate(s) * std::polar(1.0, arg);
    }
    return total;
}

CoeffRecord phase_constant_term(const PhaseLaurent& f) {
    CoeffRecord out;
    for (const auto& [e, c] : f.terms()) {
        bool zero = true;
        for (const auto& x : e) {
            if (!x.is_integer()) {
                fail(Errc::non_integral_exponent,
                     "phase exponent " + x.str() + " is not integral; the two factors do not pair");
            }
            if (x != HalfInt(0)) zero = false;
        }
        if (zero) out += c;
    }
    return out;
}

}  // namespace u21
