#include "u21/exactmath.hpp"

#include "u21/error.hpp"

#include <cctype>
#include <cmath>
#include <climits>
#include <sstream>
#include <vector>

namespace u21 {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::not_regular: return "NotRegular";
        case Errc::not_compact_dominant: return "NotCompactDominant";
        case Errc::no_case_match: return "NoCaseMatch";
        case Errc::boundary_parameter: return "BoundaryParameter";
        case Errc::no_pattern_match: return "NoPatternMatch";
        case Errc::invalid_c: return "InvalidC";
        case Errc::non_convergent: return "NonConvergent";
        case Errc::pole_at_one: return "PoleAtOne";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::non_integral_exponent: return "NonIntegralExponent";
        case Errc::degree_cap: return "DegreeCap";
        case Errc::invalid_n: return "InvalidN";
        case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses an optionally signed decimal integer occupying the whole view.
BigInt parse_integer(std::string_view s, std::string_view whole, size_t offset) {
    size_t pos = 0;
    std::string digits;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') digits.push_back('-');
        ++pos;
    }
    if (pos == s.size()) {
        fail(Errc::parse_error, "expected digits at position " + std::to_string(offset + pos) +
                                    " in '" + std::string(whole) + "'");
    }
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
            fail(Errc::parse_error, "unexpected character '" + std::string(1, s[pos]) +
                                        "' at position " + std::to_string(offset + pos) +
                                        " in '" + std::string(whole) + "'");
        }
        digits.push_back(s[pos]);
    }
    return BigInt(digits);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(Errc::invalid_argument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.q_ = q;
    r.q_.canonicalize();
    return r;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) fail(Errc::invalid_argument, "non-finite double");
    Rational r;
    mpq_set_d(r.q_.get_mpq_t(), x);
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    size_t off = static_cast<size_t>(s.data() - text.data());
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text, off));
    BigInt n = parse_integer(s.substr(0, slash), text, off);
    std::string_view ds = s.substr(slash + 1);
    if (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) {
        fail(Errc::parse_error, "signed denominator at position " +
                                    std::to_string(off + slash + 1) + " in '" + std::string(text) + "'");
    }
    BigInt d = parse_integer(ds, text, off + slash + 1);
    if (d == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rational Rational::abs() const { return from_mpq(::abs(q_)); }

Rational Rational::inverse() const {
    if (is_zero()) fail(Errc::invalid_argument, "inverse of zero");
    return from_mpq(1 / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(Errc::invalid_argument, "division by zero");
    q_ /= o.q_;
    return *this;
}

HalfInt HalfInt::from_twice(const BigInt& twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
}

HalfInt HalfInt::from_rational(const Rational& r) {
    Rational t = r * Rational(2);
    if (!t.is_integer()) fail(Errc::invalid_argument, "not a half-integer: " + r.str());
    return from_twice(t.num());
}

HalfInt HalfInt::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.find_first_of(".eE") != std::string_view::npos) {
        fail(Errc::parse_error, "floating-point literal not accepted: '" + std::string(text) + "'");
    }
    if (s.empty()) fail(Errc::parse_error, "empty half-integer");
    Rational r = Rational::parse(text);
    Rational t = r * Rational(2);
    if (!t.is_integer()) {
        fail(Errc::parse_error, "'" + std::string(text) + "' is not in (1/2)Z");
    }
    return from_twice(t.num());
}

long HalfInt::twice_long() const {
    if (!twice_.fits_slong_p()) fail(Errc::invalid_argument, "half-integer out of machine range");
    return twice_.get_si();
}

long HalfInt::to_long() const {
    if (!is_integer()) fail(Errc::invalid_argument, "half-integer " + str() + " is not integral");
    return twice_long() / 2;
}

std::string HalfInt::str() const {
    if (is_integer()) return BigInt(twice_ / 2).get_str();
    return twice_.get_str() + "/2";
}

std::string triple_str(const HalfIntTriple& t) {
    return "(" + t[0].str() + ", " + t[1].str() + ", " + t[2].str() + ")";
}

HalfIntTriple parse_triple(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) parts.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.size() != 3) {
        fail(Errc::parse_error, "expected three half-integers, got " + std::to_string(parts.size()) +
                                    " in '" + std::string(text) + "'");
    }
    return {HalfInt::parse(parts[0]), HalfInt::parse(parts[1]), HalfInt::parse(parts[2])};
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    return re.str() + (im.sign() < 0 ? " - " : " + ") + im.abs().str() + "i";
}

BigInt factorial(long n) {
    if (n < 0) fail(Errc::invalid_argument, "factorial of negative number");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Rational binomial(long n, long k) {
    if (n < 0) fail(Errc::invalid_argument, "binomial with negative n");
    if (k < 0 || k > n) return Rational(0);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational comb_lemma_lhs(long mu, long r, long i) {
    if (mu < 0 || r < 0 || i < 0 || i > r) fail(Errc::invalid_argument, "comb_lemma_lhs needs 0<=i<=r, mu>=0");
    BigInt sum = 0;
    for (long j = 0; j <= mu; ++j) {
        sum += binomial(mu, j).num() * factorial(j + r - i) * factorial(mu - j + i);
    }
    return binomial(r, i) * Rational(sum);
}

Rational vandermonde_identity(long r, long i) {
    if (r < 0 || i < 0 || i > r) fail(Errc::invalid_argument, "vandermonde_identity needs 0<=i<=r");
    Rational sum(0);
    for (long l = 0; l <= i; ++l) sum += binomial(i, l) * binomial(r - i, i - l);
    return sum;
}

}  // namespace u21
