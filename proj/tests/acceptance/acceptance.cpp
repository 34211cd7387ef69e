// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include "u21/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace u21;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<CheckResult>()> run;
};

VerifyConfig config() {
    VerifyConfig cfg;
    cfg.quad.n_t = 64;
    cfg.quad.n_theta = 64;
    cfg.oracle_samples = 20;
    return cfg;
}

std::vector<Criterion> criteria() {
    const VerifyConfig cfg = config();
    return {
        {1, "c^2 = d * Z/|phi|^2 over all eleven patterns, parameters <= 8 (exact)",
         [cfg] {
             std::vector<CheckResult> out;
             for (const auto& p : theorem1_patterns()) out.push_back(check_theorem1_pattern(p, 8, cfg));
             return out;
         }},
        {2, "quadrature zeta vs closed form, minimal and mid-range cells, n = 64, rel 1e-8",
         [cfg] {
             return std::vector{check_zeta_cells(minimal_cells(), "minimal cells", cfg),
                                check_zeta_cells(midrange_cells(), "mid-range cells", cfg)};
         }},
        {3, "Schmid residuals < 1e-9 (r <= 6) and Riemann P residual < 1e-8",
         [cfg] {
             return std::vector{check_schmid(Chamber::I, 6, cfg), check_schmid(Chamber::II, 6, cfg),
                                check_schmid(Chamber::III, 6, cfg), check_riemann_p(6, cfg)};
         }},
        {4, "kernel oracle vs Weil closed forms, 20 samples per case, parameters <= 2, 1e-10",
         [cfg] {
             std::vector<CheckResult> out;
             for (CaseTag t : kAllCases) out.push_back(check_oracle(t, 2, cfg));
             return out;
         }},
        {5, "harmonicity and torus weights, parameters <= 4 (exact)",
         [cfg] {
             std::vector<CheckResult> out;
             for (CaseTag t : kAllCases) {
                 out.push_back(check_harmonicity(t, 4, cfg));
                 out.push_back(check_weights(t, 4, cfg));
             }
             return out;
         }},
        {6, "binomial identities, mu, r <= 30 and i <= r <= 40 (exact)",
         [] { return std::vector{check_comb_lemma(30), check_vandermonde(40)}; }},
        {7, "hypergeometric identity suite",
         [] {
             return std::vector{check_hyp_contiguous(), check_hyp_one_minus_z(), check_hyp_derivative(),
                                check_hyp_gauss_near_one(), check_hyp_euler()};
         }},
        {8, "compact cases A and B: d * Z/|phi|^2 = 1, parameters <= 8 (exact)",
         [cfg] { return std::vector{check_compact_schur(CaseTag::A, 8, cfg), check_compact_schur(CaseTag::B, 8, cfg)}; }},
    };
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        auto start = std::chrono::steady_clock::now();
        auto results = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = true;
        double worst = 0;
        long count = 0;
        for (const auto& r : results) {
            pass = pass && r.pass;
            worst = std::max(worst, r.worst);
            count += r.count;
        }
        std::printf("AC%d %s  %s  [points=%ld worst=%.3e time=%.2fs]\n", c.number, pass ? "PASS" : "FAIL",
                    c.title.c_str(), count, worst, secs);
        for (const auto& r : results)
            if (!r.pass) std::printf("    failing check: %s: %s\n", r.name.c_str(), r.detail.c_str());
        failed += pass ? 0 : 1;
    }
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
