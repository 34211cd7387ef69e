#pragma once

// Parameters of discrete series of the metaplectic cover of U(2,1) and of
// the six dual-pair cases whose joint harmonics realize their minimal K-types.

#include "u21/exactmath.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace u21 {

enum class Chamber { I, II, III };

const char* chamber_name(Chamber c);
Chamber parse_chamber(const std::string& text);

struct RhoVectors {
    HalfIntTriple rho_J;
    HalfIntTriple rho_c;
    HalfIntTriple rho_Jn;  // rho_J - rho_c
};

RhoVectors rho_vectors(Chamber c);
// rho_J - 2 rho_c, the shift from Harish-Chandra to Blattner parameter.
HalfIntTriple chamber_delta(Chamber c);

// Throws not_regular / not_compact_dominant / invalid_argument (entries not in 1/2 + Z).
void validate_hc(const HalfIntTriple& lambda);
Chamber classify_chamber(const HalfIntTriple& lambda);

struct BlattnerParam {
    HalfIntTriple Lambda;
    long r = 0;
    long s = 0;
};

BlattnerParam blattner(const HalfIntTriple& lambda);
// Packages an already-computed Blattner parameter with its (r, s).
BlattnerParam blattner_param(const HalfIntTriple& Lambda);
HalfIntTriple blattner_inverse(const HalfIntTriple& Lambda, Chamber c);
HalfIntTriple dual_param(const HalfIntTriple& lambda);
Rational formal_degree(const HalfIntTriple& lambda);

// (r, s) ranges in which the chamber's closed-form radial functions describe
// a discrete series: I: r>=0, s>=3; II: r>=0, s<=-r-3; III: r>=2, 1-r<=s<=-1.
bool is_admissible(Chamber c, long r, long s);

enum class CaseTag { A, B, C1, C2, D1, D2 };

const char* case_name(CaseTag t);
CaseTag parse_case(const std::string& text);
constexpr CaseTag kAllCases[] = {CaseTag::A, CaseTag::B, CaseTag::C1, CaseTag::C2, CaseTag::D1, CaseTag::D2};

struct CaseParams {
    long mu1 = 0, mu2 = 0, mu = 0, nu = 0, nu1 = 0, nu2 = 0, alpha = 0, beta = 0;
    friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

// Names of the three parameters a case uses, in weight-pattern order.
std::vector<std::string> case_param_names(CaseTag t);
long get_param(const CaseParams& p, const std::string& name);
void set_param(CaseParams& p, const std::string& name, long value);

struct DualPairCase {
    CaseTag tag = CaseTag::A;
    CaseParams params;
    std::optional<Chamber> subcase;  // empty in the boundary gaps

    // Throws boundary_parameter when subcase is empty.
    Chamber require_subcase() const;
    std::string describe() const;
    friend bool operator==(const DualPairCase&, const DualPairCase&) = default;
};

// Validates nonnegativity/dominance and assigns the subcase regime.
DualPairCase make_case(CaseTag tag, const CaseParams& params);
std::optional<Chamber> subcase_regime(CaseTag tag, const CaseParams& p);

// Signature (r', s') of the space V' of G' = U(V').
std::pair<int, int> vprime_signature(CaseTag t);
// Fock-side U(2) x U(1) weight sigma^dual of the harmonic.
HalfIntTriple fock_weight(const DualPairCase& c);
// Weight of the joint harmonic under the maximal torus of G'.
HalfIntTriple gprime_weight(const DualPairCase& c);

// Every pattern the weight fits with valid parameters, boundary or not.
std::vector<DualPairCase> case_matches(const HalfIntTriple& sigma_dual);
// Throws no_case_match or boundary_parameter.
DualPairCase case_classify(const HalfIntTriple& sigma_dual);
DualPairCase case_from_blattner(const HalfIntTriple& Lambda);
// Harish-Chandra parameter of the discrete series paired with the case.
HalfIntTriple hc_param_of_case(const DualPairCase& c);

}  // namespace u21
