#pragma once

// Exact scalar arithmetic: big rationals, half-integers, Gaussian rationals
// and the factorial/binomial helpers used by the closed forms.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace u21 {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                               // NOLINT
    Rational(const BigInt& v) : q_(v) {}                      // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    static Rational from_mpq(const mpq_class& q);
    // Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double x);
    // Accepts "p", "p/q", optional sign; throws Error(parse_error).
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    // Always "num/den", denominator included even when it is 1.
    std::string str() const;

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return from_mpq(-q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

// A value in (1/2)Z stored as twice its value.
class HalfInt {
public:
    HalfInt() = default;
    HalfInt(long v) : twice_(2 * v) {}  // NOLINT
    static HalfInt from_twice(const BigInt& twice);
    static HalfInt from_twice(long twice) { return from_twice(BigInt(twice)); }
    // Accepts "n" or "p/2" (reduced or not, e.g. "4/2"); floats rejected.
    static HalfInt parse(std::string_view text);
    static HalfInt from_rational(const Rational& r);

    const BigInt& twice() const { return twice_; }
    long twice_long() const;
    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
    // Integer value; throws if not integral.
    long to_long() const;
    Rational to_rational() const { return Rational(twice_, 2); }
    double to_double() const { return twice_.get_d() / 2.0; }
    std::string str() const;

    HalfInt& operator+=(const HalfInt& o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(const HalfInt& o) { twice_ -= o.twice_; return *this; }
    friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
    friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
    HalfInt operator-() const { return from_twice(BigInt(-twice_)); }
    // Multiplication by an integer stays in (1/2)Z.
    friend HalfInt operator*(const HalfInt& a, long k) { return from_twice(BigInt(a.twice_ * k)); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
        int c = cmp(a.twice_, b.twice_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    BigInt twice_;
};

inline const HalfInt kHalf = HalfInt::from_twice(1);

using HalfIntTriple = std::array<HalfInt, 3>;

std::string triple_str(const HalfIntTriple& t);
// Parses "a b c" (whitespace or comma separated).
HalfIntTriple parse_triple(std::string_view text);

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(const Rational& r) : re(r) {}  // NOLINT
    GaussRational(long r) : re(r) {}             // NOLINT
    GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRational conj() const { return {re, -im}; }
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    GaussRational operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    std::string str() const;
};

BigInt factorial(long n);
Rational binomial(long n, long k);

// C(r,i) * sum_j C(mu,j) (j+r-i)! (mu-j+i)!
Rational comb_lemma_lhs(long mu, long r, long i);
// sum_l C(i,l) C(r-i,i-l)
Rational vandermonde_identity(long r, long i);

}  // namespace u21
