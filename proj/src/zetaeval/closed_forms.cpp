#include "u21/error.hpp"
#include "u21/quadrature.hpp"
#include "u21/zetaeval.hpp"

#include <cmath>

namespace u21 {

namespace {

Rational inv(const Rational& a, const Rational& b, const Rational& c) { return (a * b * c).inverse(); }
Rational R(long v) { return Rational(v); }

}  // namespace

ZetaValue zeta_closed_form(const DualPairCase& c) {
    const CaseParams& p = c.params;
    Rational z;
    switch (c.tag) {
        case CaseTag::A: z = inv(R(p.mu1 - p.mu2 + 1), R(p.mu1 + p.nu + 2), R(p.mu2 + p.nu + 1)); break;
        case CaseTag::B: z = inv(R(p.nu1 - p.nu2 + 1), R(p.nu1 + p.alpha + 2), R(p.nu2 + p.alpha + 1)); break;
        case CaseTag::C1:
            switch (c.require_subcase()) {
                case Chamber::I: z = inv(R(p.mu1 - p.mu2 + 1), R(p.alpha - 1), R(p.alpha)); break;
                case Chamber::II: z = inv(R(p.mu1 - p.mu2 + 1), R(p.mu2 + p.alpha), R(p.mu1 + p.alpha + 1)); break;
                case Chamber::III: z = inv(R(p.mu1 - p.mu2 + 1), R(p.mu1 + 1), R(p.alpha)); break;
            }
            break;
        case CaseTag::C2:
            switch (c.require_subcase()) {
                case Chamber::II: z = inv(R(p.nu + p.mu + 1), R(p.beta + p.mu + 1), R(p.beta)); break;
                case Chamber::III: z = inv(R(p.nu), R(p.nu + p.mu + 1), R(p.beta + p.mu + 1)); break;
                default: fail(Errc::boundary_parameter, "C2 has no chamber I regime");
            }
            break;
        case CaseTag::D1:
            switch (c.require_subcase()) {
                case Chamber::I: z = inv(R(p.nu1 - p.nu2 + 1), R(p.nu2), R(p.nu1 + 1)); break;
                case Chamber::II: z = inv(R(p.nu1 - p.nu2 + 1), R(p.beta - 1), R(p.beta)); break;
                case Chamber::III: z = inv(R(p.nu1 - p.nu2 + 1), R(p.nu1 + 1), R(p.beta)); break;
            }
            break;
        case CaseTag::D2:
            switch (c.require_subcase()) {
                case Chamber::I: z = inv(R(p.mu + p.nu + 1), R(p.alpha + p.nu + 1), R(p.alpha)); break;
                case Chamber::III: z = inv(R(p.mu), R(p.mu + p.nu + 1), R(p.alpha + p.nu + 1)); break;
                default: fail(Errc::boundary_parameter, "D2 has no chamber II regime");
            }
            break;
    }
    return {z, c};
}

Rational radial_moment(long n) {
    if (n < 3) fail(Errc::invalid_n, "radial moment diverges for n < 3 (got " + std::to_string(n) + ")");
    return Rational((n - 2) * (n - 1)).inverse();
}

double radial_moment_quadrature(long n, int nodes) {
    if (n < 3) fail(Errc::invalid_n, "radial moment diverges for n < 3 (got " + std::to_string(n) + ")");
    return integrate_gl([n](double v) { return std::pow(v, static_cast<double>(n - 3)) * (1 - v); }, 0.0, 1.0, nodes);
}

// ---------------------------------------------------------------------------
// Discrete-series patterns for c^2. lambda_j = sign * param + offset_twice / 2.

namespace {

struct Slot {
    const char* param;
    int sign;
    int offset_twice;
};

struct PatternDef {
    Theorem1Pattern pattern;
    Slot slots[3];
};

const std::vector<PatternDef>& pattern_defs() {
    static const std::vector<PatternDef> defs = {
        {{1, 'A', CaseTag::A, std::nullopt}, {{"mu2", -1, -1}, {"mu1", -1, -3}, {"nu", 1, 1}}},
        {{1, 'B', CaseTag::B, std::nullopt}, {{"nu1", 1, 3}, {"nu2", 1, 1}, {"alpha", -1, -1}}},
        {{2, 0, CaseTag::C1, Chamber::I}, {{"mu2", -1, -1}, {"mu1", -1, -3}, {"alpha", -1, 3}}},
        {{3, 0, CaseTag::C1, Chamber::II}, {{"mu2", -1, 1}, {"mu1", -1, -1}, {"alpha", -1, -1}}},
        {{4, 0, CaseTag::C1, Chamber::III}, {{"mu2", -1, -1}, {"mu1", -1, -1}, {"alpha", -1, 1}}},
        {{5, 0, CaseTag::C2, Chamber::II}, {{"nu", 1, 1}, {"mu", -1, -1}, {"beta", 1, -1}}},
        {{6, 0, CaseTag::C2, Chamber::III}, {{"nu", 1, -1}, {"mu", -1, -1}, {"beta", 1, 1}}},
        {{7, 0, CaseTag::D1, Chamber::I}, {{"nu1", 1, 1}, {"nu2", 1, -1}, {"beta", 1, 1}}},
        {{8, 0, CaseTag::D1, Chamber::II}, {{"nu1", 1, 3}, {"nu2", 1, 1}, {"beta", 1, -3}}},
        {{9, 0, CaseTag::D1, Chamber::III}, {{"nu1", 1, 1}, {"nu2", 1, 1}, {"beta", 1, -1}}},
        {{10, 0, CaseTag::D2, Chamber::I}, {{"nu", 1, 1}, {"mu", -1, -1}, {"alpha", -1, 1}}},
        {{11, 0, CaseTag::D2, Chamber::III}, {{"nu", 1, 1}, {"mu", -1, 1}, {"alpha", -1, -1}}},
    };
    return defs;
}

const PatternDef& def_of(const Theorem1Pattern& p) {
    for (const auto& d : pattern_defs())
        if (d.pattern.number == p.number && d.pattern.variant == p.variant) return d;
    fail(Errc::invalid_argument, "unknown pattern " + pattern_label(p));
}

}  // namespace

const std::vector<Theorem1Pattern>& theorem1_patterns() {
    static const std::vector<Theorem1Pattern> out = [] {
        std::vector<Theorem1Pattern> v;
        for (const auto& d : pattern_defs()) v.push_back(d.pattern);
        return v;
    }();
    return out;
}

std::string pattern_label(const Theorem1Pattern& p) {
    std::string s = std::to_string(p.number);
    if (p.variant) s += p.variant;
    return s;
}

bool theorem1_inequalities(const Theorem1Pattern& pat, const CaseParams& p) {
    for (const auto& s : def_of(pat).slots)
        if (get_param(p, s.param) < 0) return false;
    switch (pat.number) {
        case 1: return pat.variant == 'A' ? p.mu1 >= p.mu2 : p.nu1 >= p.nu2;
        case 2: return p.alpha - 4 >= p.mu1 && p.mu1 >= p.mu2;
        case 3: return p.mu1 >= p.mu2 && p.mu2 >= p.alpha + 2;
        case 4: return p.mu1 >= p.alpha && p.alpha >= p.mu2 + 2;
        case 5: return p.beta >= p.nu + 2;
        case 6: return p.nu >= p.beta + 2;
        case 7: return p.nu1 >= p.nu2 && p.nu2 >= p.beta + 2;
        case 8: return p.beta - 4 >= p.nu1 && p.nu1 >= p.nu2;
        case 9: return p.nu1 >= p.beta && p.beta >= p.nu2 + 2;
        case 10: return p.alpha >= p.mu + 2;
        case 11: return p.mu >= p.alpha + 2;
    }
    return false;
}

HalfIntTriple theorem1_lambda(const Theorem1Pattern& pat, const CaseParams& p) {
    const PatternDef& d = def_of(pat);
    HalfIntTriple l;
    for (int j = 0; j < 3; ++j)
        l[j] = HalfInt::from_twice(2L * d.slots[j].sign * get_param(p, d.slots[j].param) + d.slots[j].offset_twice);
    return l;
}

Rational theorem1_value(const Theorem1Pattern& pat, const CaseParams& p) {
    auto frac = [](std::initializer_list<long> num, std::initializer_list<long> den) {
        Rational n(1), d(1);
        for (long v : num) n *= Rational(v);
        for (long v : den) d *= Rational(v);
        return n / d;
    };
    const long mu1 = p.mu1, mu2 = p.mu2, mu = p.mu, nu = p.nu, nu1 = p.nu1, nu2 = p.nu2, a = p.alpha, b = p.beta;
    switch (pat.number) {
        case 1: return Rational(1);
        case 2: return frac({a - mu1 - 3, a - mu2 - 2}, {a - 1, a});
        case 3: return frac({mu2 - a - 1, mu1 - a}, {mu2 + a, mu1 + a + 1});
        case 4: return frac({mu1 - mu2, mu1 - a + 1, a - mu2 - 1}, {mu1 - mu2 + 1, mu1 + 1, a});
        case 5: return frac({b + mu, b - nu - 1}, {b + mu + 1, b});
        case 6: return frac({nu - b - 1, nu + mu}, {nu, nu + mu + 1});
        case 7: return frac({nu1 - b, nu2 - b - 1}, {nu1 + 1, nu2});
        case 8: return frac({b - nu1 - 3, b - nu2 - 2}, {b - 1, b});
        case 9: return frac({nu1 - nu2, nu1 - b + 1, b - nu2 - 1}, {nu1 - nu2 + 1, nu1 + 1, b});
        case 10: return frac({a + nu, a - mu - 1}, {a + nu + 1, a});
        case 11: return frac({mu - a - 1, mu + nu}, {mu, mu + nu + 1});
    }
    fail(Errc::invalid_argument, "unknown pattern");
}

std::vector<Theorem1Match> theorem1_matches(const HalfIntTriple& lambda) {
    std::vector<Theorem1Match> out;
    for (const auto& d : pattern_defs()) {
        CaseParams p;
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            const BigInt diff = lambda[j].twice() - d.slots[j].offset_twice;
            if (!mpz_even_p(diff.get_mpz_t()) || !diff.fits_slong_p()) {
                ok = false;
                break;
            }
            set_param(p, d.slots[j].param, d.slots[j].sign * (diff.get_si() / 2));
        }
        if (ok && theorem1_inequalities(d.pattern, p)) out.push_back({d.pattern, p});
    }
    return out;
}

Rational c_squared_theorem1(const HalfIntTriple& lambda) {
    const auto m = theorem1_matches(lambda);
    if (m.empty()) fail(Errc::no_pattern_match, triple_str(lambda) + " fits none of the eleven c^2 patterns");
    return theorem1_value(m.front().pattern, m.front().params);
}

ConsistencyReport consistency_report(const HalfIntTriple& lambda) {
    const auto m = theorem1_matches(lambda);
    if (m.empty()) fail(Errc::no_pattern_match, triple_str(lambda) + " fits none of the eleven c^2 patterns");
    ConsistencyReport rep;
    rep.match = m.front();
    rep.c_squared = theorem1_value(rep.match.pattern, rep.match.params);
    const BlattnerParam b = blattner(lambda);
    rep.dpcase = case_from_blattner(b.Lambda);
    rep.degree = formal_degree(lambda);
    rep.zeta_ratio = zeta_closed_form(rep.dpcase).ratio;
    const Chamber ch = classify_chamber(lambda);
    rep.case_agrees = rep.dpcase.tag == rep.match.pattern.tag && rep.dpcase.params == rep.match.params &&
                      (!rep.match.pattern.subcase || *rep.match.pattern.subcase == ch) &&
                      rep.dpcase.subcase == ch;
    rep.holds = rep.case_agrees && rep.c_squared == rep.degree * rep.zeta_ratio;
    return rep;
}

bool consistency_check(const HalfIntTriple& lambda) { return consistency_report(lambda).holds; }

}  // namespace u21
