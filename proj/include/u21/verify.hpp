#pragma once

// Invariant suites over parameter grids. Each check reports pass/fail, the
// worst residual seen and how many points were tested. Grid cells run in
// parallel but results are always assembled in grid order.

#include "u21/zetaeval.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace u21 {

struct CheckResult {
    std::string name;
    bool pass = true;
    double worst = 0;  // largest residual (0 for exact checks that held)
    long count = 0;
    std::string detail;  // first failure, if any
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

enum class Suite { identities, ode, harmonics, zeta, theorem1 };

const char* suite_name(Suite s);
Suite parse_suite(const std::string& text);

struct VerifyConfig {
    int grid_max = 4;
    QuadratureConfig quad;
    std::uint64_t seed = 20240601;
    int oracle_samples = 20;
    unsigned threads = 0;  // 0: hardware concurrency
};

SuiteReport run_suite(Suite s, const VerifyConfig& cfg);

// Individual checks, reused by the suites, the tests and the acceptance run.
CheckResult check_comb_lemma(long max);
CheckResult check_vandermonde(long max);
CheckResult check_hyp_contiguous();
CheckResult check_hyp_one_minus_z();
CheckResult check_hyp_derivative();
CheckResult check_hyp_gauss_near_one();
CheckResult check_hyp_euler();

CheckResult check_schmid(Chamber c, long rmax, const VerifyConfig& cfg);
CheckResult check_riemann_p(long rmax, const VerifyConfig& cfg);
CheckResult check_xi3_forms(long rmax);
CheckResult check_ctilde_normalization(long rmax);
CheckResult check_schmid_sensitivity();

CheckResult check_harmonicity(CaseTag t, long pmax, const VerifyConfig& cfg);
CheckResult check_weights(CaseTag t, long pmax, const VerifyConfig& cfg);
CheckResult check_norm_formula(long pmax);
CheckResult check_oracle(CaseTag t, long pmax, const VerifyConfig& cfg);

CheckResult check_zeta_cells(const std::vector<DualPairCase>& cells, const std::string& name,
                             const VerifyConfig& cfg);
CheckResult check_radial_moments();
CheckResult check_quadrature_convergence(const std::vector<DualPairCase>& cells, const VerifyConfig& cfg);

CheckResult check_theorem1_pattern(const Theorem1Pattern& p, long pmax, const VerifyConfig& cfg);
CheckResult check_compact_schur(CaseTag t, long pmax, const VerifyConfig& cfg);

// Every valid parameter tuple of the case with entries in 0..pmax; when
// with_subcase is set, boundary tuples are left out.
std::vector<DualPairCase> case_grid(CaseTag t, long pmax, bool with_subcase);
// The smallest valid parameters of each (case, subcase) pair, and one
// mid-range choice per pair.
std::vector<DualPairCase> minimal_cells();
std::vector<DualPairCase> midrange_cells();

}  // namespace u21
