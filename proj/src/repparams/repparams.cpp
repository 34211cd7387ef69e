#include "u21/repparams.hpp"

#include "u21/error.hpp"

#include <algorithm>
#include <array>

namespace u21 {

namespace {

HalfIntTriple h3(long t0, long t1, long t2) {
    return {HalfInt::from_twice(t0), HalfInt::from_twice(t1), HalfInt::from_twice(t2)};
}

HalfIntTriple add(const HalfIntTriple& a, const HalfIntTriple& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
HalfIntTriple sub(const HalfIntTriple& a, const HalfIntTriple& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// One coordinate of a weight pattern: x = sign * param + offset.
struct Slot {
    const char* param;
    int sign;
    long offset_twice;
};

struct Pattern {
    CaseTag tag;
    std::array<Slot, 3> slots;
};

// Fock-side weights sigma^dual of the six harmonics.
constexpr std::array<Pattern, 6> kFockPatterns = {{
    {CaseTag::A, {{{"mu1", +1, 3}, {"mu2", +1, 3}, {"nu", -1, -3}}}},
    {CaseTag::B, {{{"nu2", -1, -3}, {"nu1", -1, -3}, {"alpha", +1, 3}}}},
    {CaseTag::C1, {{{"mu1", +1, 1}, {"mu2", +1, 1}, {"alpha", +1, -1}}}},
    {CaseTag::C2, {{{"mu", +1, 1}, {"nu", -1, 1}, {"beta", -1, -1}}}},
    {CaseTag::D1, {{{"nu2", -1, -1}, {"nu1", -1, -1}, {"beta", -1, 1}}}},
    {CaseTag::D2, {{{"mu", +1, -1}, {"nu", -1, -1}, {"alpha", +1, 1}}}},
}};

// Weights on the G' side.
constexpr std::array<Pattern, 6> kGPrimePatterns = {{
    {CaseTag::A, {{{"mu1", +1, 1}, {"mu2", +1, 1}, {"nu", -1, 1}}}},
    {CaseTag::B, {{{"alpha", +1, -1}, {"nu2", -1, -1}, {"nu1", -1, -1}}}},
    {CaseTag::C1, {{{"mu1", +1, 1}, {"mu2", +1, 1}, {"alpha", +1, -1}}}},
    {CaseTag::C2, {{{"mu", +1, 1}, {"beta", -1, 1}, {"nu", -1, -1}}}},
    {CaseTag::D1, {{{"beta", -1, 1}, {"nu2", -1, -1}, {"nu1", -1, -1}}}},
    {CaseTag::D2, {{{"mu", +1, 1}, {"alpha", +1, -1}, {"nu", -1, -1}}}},
}};

const Pattern& find_pattern(const std::array<Pattern, 6>& table, CaseTag t) {
    for (const auto& p : table)
        if (p.tag == t) return p;
    fail(Errc::invalid_argument, "unknown case");
}

HalfIntTriple apply_pattern(const Pattern& pat, const CaseParams& p) {
    HalfIntTriple out;
    for (int k = 0; k < 3; ++k) {
        const Slot& s = pat.slots[k];
        out[k] = HalfInt::from_twice(2 * s.sign * get_param(p, s.param) + s.offset_twice);
    }
    return out;
}

void check_params(CaseTag tag, const CaseParams& p) {
    for (const auto& name : case_param_names(tag)) {
        if (get_param(p, name) < 0) {
            fail(Errc::invalid_argument, std::string(case_name(tag)) + " parameter " + name + " must be >= 0");
        }
    }
    if ((tag == CaseTag::A || tag == CaseTag::C1) && p.mu1 < p.mu2) {
        fail(Errc::invalid_argument, std::string(case_name(tag)) + " requires mu1 >= mu2");
    }
    if ((tag == CaseTag::B || tag == CaseTag::D1) && p.nu1 < p.nu2) {
        fail(Errc::invalid_argument, std::string(case_name(tag)) + " requires nu1 >= nu2");
    }
}

}  // namespace

const char* chamber_name(Chamber c) {
    switch (c) {
        case Chamber::I: return "I";
        case Chamber::II: return "II";
        case Chamber::III: return "III";
    }
    return "?";
}

Chamber parse_chamber(const std::string& text) {
    if (text == "I") return Chamber::I;
    if (text == "II") return Chamber::II;
    if (text == "III") return Chamber::III;
    fail(Errc::parse_error, "unknown chamber '" + text + "' (expected I, II or III)");
}

RhoVectors rho_vectors(Chamber c) {
    RhoVectors v;
    switch (c) {
        case Chamber::I: v.rho_J = h3(2, 0, -2); break;
        case Chamber::II: v.rho_J = h3(0, -2, 2); break;
        case Chamber::III: v.rho_J = h3(2, -2, 0); break;
    }
    v.rho_c = h3(1, -1, 0);
    v.rho_Jn = sub(v.rho_J, v.rho_c);
    return v;
}

HalfIntTriple chamber_delta(Chamber c) {
    RhoVectors v = rho_vectors(c);
    return sub(v.rho_J, add(v.rho_c, v.rho_c));
}

void validate_hc(const HalfIntTriple& l) {
    for (const auto& x : l) {
        if (x.is_integer()) fail(Errc::invalid_argument, "entry " + x.str() + " is not in 1/2 + Z");
    }
    if (l[0] == l[1] || l[1] == l[2] || l[0] == l[2]) {
        fail(Errc::not_regular, "parameter " + triple_str(l) + " has repeated coordinates");
    }
    if (l[0] < l[1]) {
        fail(Errc::not_compact_dominant, "parameter " + triple_str(l) + " has lambda1 < lambda2");
    }
}

Chamber classify_chamber(const HalfIntTriple& l) {
    validate_hc(l);
    if (l[1] > l[2]) return Chamber::I;
    if (l[2] > l[0]) return Chamber::II;
    return Chamber::III;
}

BlattnerParam blattner_param(const HalfIntTriple& Lambda) {
    BlattnerParam b;
    b.Lambda = Lambda;
    b.r = (Lambda[0] - Lambda[1]).to_long();
    b.s = (Lambda[1] - Lambda[2]).to_long();
    if (b.r < 0) fail(Errc::invalid_argument, "Blattner parameter " + triple_str(Lambda) + " is not dominant");
    return b;
}

BlattnerParam blattner(const HalfIntTriple& lambda) {
    return blattner_param(add(lambda, chamber_delta(classify_chamber(lambda))));
}

HalfIntTriple blattner_inverse(const HalfIntTriple& Lambda, Chamber c) { return sub(Lambda, chamber_delta(c)); }

HalfIntTriple dual_param(const HalfIntTriple& l) { return {-l[1], -l[0], -l[2]}; }

Rational formal_degree(const HalfIntTriple& l) {
    Rational a = (l[0] - l[1]).to_rational(), b = (l[1] - l[2]).to_rational(), c = (l[0] - l[2]).to_rational();
    return (a * b * c).abs();
}

bool is_admissible(Chamber c, long r, long s) {
    switch (c) {
        case Chamber::I: return r >= 0 && s >= 3;
        case Chamber::II: return r >= 0 && s <= -r - 3;
        case Chamber::III: return r >= 2 && s <= -1 && s >= 1 - r;
    }
    return false;
}

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::A: return "A";
        case CaseTag::B: return "B";
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::D1: return "D1";
        case CaseTag::D2: return "D2";
    }
    return "?";
}

CaseTag parse_case(const std::string& text) {
    for (CaseTag t : kAllCases)
        if (text == case_name(t)) return t;
    fail(Errc::parse_error, "unknown case '" + text + "' (expected A, B, C1, C2, D1 or D2)");
}

std::vector<std::string> case_param_names(CaseTag t) {
    switch (t) {
        case CaseTag::A: return {"mu1", "mu2", "nu"};
        case CaseTag::B: return {"nu1", "nu2", "alpha"};
        case CaseTag::C1: return {"mu1", "mu2", "alpha"};
        case CaseTag::C2: return {"mu", "nu", "beta"};
        case CaseTag::D1: return {"nu1", "nu2", "beta"};
        case CaseTag::D2: return {"mu", "nu", "alpha"};
    }
    return {};
}

long get_param(const CaseParams& p, const std::string& n) {
    if (n == "mu1") return p.mu1;
    if (n == "mu2") return p.mu2;
    if (n == "mu") return p.mu;
    if (n == "nu") return p.nu;
    if (n == "nu1") return p.nu1;
    if (n == "nu2") return p.nu2;
    if (n == "alpha") return p.alpha;
    if (n == "beta") return p.beta;
    fail(Errc::invalid_argument, "unknown case parameter " + n);
}

void set_param(CaseParams& p, const std::string& n, long v) {
    if (n == "mu1") p.mu1 = v;
    else if (n == "mu2") p.mu2 = v;
    else if (n == "mu") p.mu = v;
    else if (n == "nu") p.nu = v;
    else if (n == "nu1") p.nu1 = v;
    else if (n == "nu2") p.nu2 = v;
    else if (n == "alpha") p.alpha = v;
    else if (n == "beta") p.beta = v;
    else fail(Errc::invalid_argument, "unknown case parameter " + n);
}

Chamber DualPairCase::require_subcase() const {
    if (!subcase) fail(Errc::boundary_parameter, describe() + " lies outside every listed inequality regime");
    return *subcase;
}

std::string DualPairCase::describe() const {
    std::string s = case_name(tag);
    s += "(";
    bool first = true;
    for (const auto& n : case_param_names(tag)) {
        if (!first) s += ", ";
        first = false;
        s += n + "=" + std::to_string(get_param(params, n));
    }
    s += ")";
    if (subcase) s += std::string("-") + chamber_name(*subcase);
    return s;
}

std::optional<Chamber> subcase_regime(CaseTag tag, const CaseParams& p) {
    switch (tag) {
        case CaseTag::A: return Chamber::II;
        case CaseTag::B: return Chamber::I;
        case CaseTag::C1:
            if (p.alpha >= p.mu1 + 4) return Chamber::I;
            if (p.mu2 >= p.alpha + 2) return Chamber::II;
            if (p.mu1 >= p.alpha && p.alpha >= p.mu2 + 2) return Chamber::III;
            return std::nullopt;
        case CaseTag::C2:
            if (p.beta >= p.nu + 2) return Chamber::II;
            if (p.nu >= p.beta + 2) return Chamber::III;
            return std::nullopt;
        case CaseTag::D1:
            if (p.nu2 >= p.beta + 2) return Chamber::I;
            if (p.beta >= p.nu1 + 4) return Chamber::II;
            if (p.nu1 >= p.beta && p.beta >= p.nu2 + 2) return Chamber::III;
            return std::nullopt;
        case CaseTag::D2:
            // Only the I and III regimes are treated; anything else is a gap.
            if (p.alpha >= p.mu + 2) return Chamber::I;
            if (p.mu >= p.alpha + 2) return Chamber::III;
            return std::nullopt;
    }
    return std::nullopt;
}

DualPairCase make_case(CaseTag tag, const CaseParams& params) {
    check_params(tag, params);
    DualPairCase c;
    c.tag = tag;
    for (const auto& n : case_param_names(tag)) set_param(c.params, n, get_param(params, n));
    c.subcase = subcase_regime(tag, c.params);
    return c;
}

std::pair<int, int> vprime_signature(CaseTag t) {
    switch (t) {
        case CaseTag::A: return {3, 0};
        case CaseTag::B: return {0, 3};
        case CaseTag::C1:
        case CaseTag::C2: return {2, 1};
        case CaseTag::D1:
        case CaseTag::D2: return {1, 2};
    }
    return {0, 0};
}

HalfIntTriple fock_weight(const DualPairCase& c) { return apply_pattern(find_pattern(kFockPatterns, c.tag), c.params); }

HalfIntTriple gprime_weight(const DualPairCase& c) {
    return apply_pattern(find_pattern(kGPrimePatterns, c.tag), c.params);
}

std::vector<DualPairCase> case_matches(const HalfIntTriple& sd) {
    std::vector<DualPairCase> out;
    for (const auto& pat : kFockPatterns) {
        CaseParams p;
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            const Slot& s = pat.slots[k];
            HalfInt v = (sd[k] - HalfInt::from_twice(s.offset_twice)) * s.sign;
            if (!v.is_integer() || v < HalfInt(0)) ok = false;
            else set_param(p, s.param, v.to_long());
        }
        if (!ok) continue;
        if ((pat.tag == CaseTag::A || pat.tag == CaseTag::C1) && p.mu1 < p.mu2) continue;
        if ((pat.tag == CaseTag::B || pat.tag == CaseTag::D1) && p.nu1 < p.nu2) continue;
        out.push_back(make_case(pat.tag, p));
    }
    return out;
}

DualPairCase case_classify(const HalfIntTriple& sd) {
    auto matches = case_matches(sd);
    if (matches.empty()) fail(Errc::no_case_match, "weight " + triple_str(sd) + " fits none of the six patterns");
    for (const auto& m : matches)
        if (m.subcase) return m;
    std::string names;
    for (const auto& m : matches) names += (names.empty() ? "" : ", ") + m.describe();
    fail(Errc::boundary_parameter, "weight " + triple_str(sd) + " fits " + names + " but no inequality regime");
}

DualPairCase case_from_blattner(const HalfIntTriple& Lambda) { return case_classify(dual_param(Lambda)); }

HalfIntTriple hc_param_of_case(const DualPairCase& c) {
    return blattner_inverse(dual_param(fock_weight(c)), c.require_subcase());
}

}  // namespace u21
