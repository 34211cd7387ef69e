#pragma once

// Sparse polynomials in the nine Fock variables z_ij (1 <= i,j <= 3).
// The coefficient type is a template parameter so the same code serves the
// exact harmonics (GaussRational) and the numeric kernel oracle
// (std::complex<double>).

#include "u21/exactmath.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>

namespace u21 {

constexpr int kFockVars = 9;
using Exponent9 = std::array<int, kFockVars>;

// Flat index of z_ij, rows and columns 1-based.
constexpr int zvar(int i, int j) { return 3 * (i - 1) + (j - 1); }

inline bool coeff_is_zero(const GaussRational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }

template <class C>
class SparsePoly {
public:
    using Terms = std::map<Exponent9, C>;

    SparsePoly() = default;

    static SparsePoly constant(const C& c) {
        SparsePoly p;
        p.add_term(Exponent9{}, c);
        return p;
    }
    static SparsePoly variable(int idx) {
        Exponent9 e{};
        e[idx] = 1;
        SparsePoly p;
        p.add_term(e, C(1));
        return p;
    }
    static SparsePoly z(int i, int j) { return variable(zvar(i, j)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent9& e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            if (s > d) d = s;
        }
        return d;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent9 e;
                for (int k = 0; k < kFockVars; ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    SparsePoly scaled(const C& s) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }

    SparsePoly pow(int n) const {
        SparsePoly result = constant(C(1));
        SparsePoly base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    SparsePoly derivative(int idx) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponent9 f = e;
            f[idx] -= 1;
            out.add_term(f, c * C(static_cast<long>(e[idx])));
        }
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

using FockPolynomial = SparsePoly<GaussRational>;
using NumericFockPoly = SparsePoly<std::complex<double>>;

std::string to_string(const FockPolynomial& p);
NumericFockPoly to_numeric(const FockPolynomial& p);

}  // namespace u21
