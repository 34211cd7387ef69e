#include "u21/verify.hpp"

#include "u21/dscoef.hpp"
#include "u21/error.hpp"
#include "u21/fockweil.hpp"
#include "u21/hypergeo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace u21 {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::identities: return "identities";
        case Suite::ode: return "ode";
        case Suite::harmonics: return "harmonics";
        case Suite::zeta: return "zeta";
        case Suite::theorem1: return "theorem1";
    }
    return "?";
}

Suite parse_suite(const std::string& text) {
    for (Suite s : {Suite::identities, Suite::ode, Suite::harmonics, Suite::zeta, Suite::theorem1})
        if (text == suite_name(s)) return s;
    fail(Errc::invalid_argument, "unknown suite '" + text + "' (identities, ode, harmonics, zeta, theorem1)");
}

namespace {

struct Cell {
    bool ok = true;
    double worst = 0;
    long count = 0;
    std::string detail;

    // Records one residual against a tolerance.
    void record(double residual, double tol, const std::string& where) {
        ++count;
        if (!(residual <= tol)) {
            if (ok) detail = where + ": residual " + fmt(residual) + " > " + fmt(tol);
            ok = false;
        }
        if (std::isnan(residual) || residual > worst) worst = std::isnan(residual) ? INFINITY : residual;
    }
    void exact(bool holds, const std::string& where) {
        ++count;
        if (!holds && ok) detail = where;
        ok = ok && holds;
    }
    static std::string fmt(double v) {
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << v;
        return os.str();
    }
};

unsigned thread_count(unsigned requested, size_t n) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<size_t>(t, std::max<size_t>(n, 1)));
}

template <class F>
CheckResult run_cells(std::string name, size_t n, unsigned threads, F&& f) {
    std::vector<Cell> cells(n);
    auto guarded = [&](size_t i) {
        try {
            cells[i] = f(i);
        } catch (const std::exception& e) {
            cells[i].ok = false;
            cells[i].count = std::max(cells[i].count, 1L);
            cells[i].detail = e.what();
        }
    };
    const unsigned nt = thread_count(threads, n);
    if (nt <= 1) {
        for (size_t i = 0; i < n; ++i) guarded(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < nt; ++k)
            pool.emplace_back([&] {
                for (size_t i = next++; i < n; i = next++) guarded(i);
            });
        for (auto& th : pool) th.join();
    }
    CheckResult r;
    r.name = std::move(name);
    for (const Cell& c : cells) {
        r.count += c.count;
        r.worst = std::max(r.worst, c.worst);
        if (!c.ok && r.pass) r.detail = c.detail;
        r.pass = r.pass && c.ok;
    }
    return r;
}

// |x - y| measured against the size of the numbers involved.
double rel_diff(double x, double y, double scale = 0) {
    return std::fabs(x - y) / std::max({1.0, std::fabs(x), std::fabs(y), scale});
}

std::string hp_str(double a, double b, double c) {
    std::ostringstream os;
    os << "F(" << a << "," << b << "," << c << ")";
    return os.str();
}

constexpr double kOdeTimes[] = {0.3, 0.7, 1.5};
constexpr double kHypZ[] = {0.1, 0.5, 0.9};

// Admissible (r, s) for a chamber with r in 0..rmax; s runs over a window of
// the same width beyond the discrete-series threshold.
std::vector<std::pair<long, long>> rs_grid(Chamber c, long rmax) {
    std::vector<std::pair<long, long>> out;
    for (long r = 0; r <= rmax; ++r)
        for (long s = -2 * rmax - 3; s <= 2 * rmax + 3; ++s) {
            if (!is_admissible(c, r, s)) continue;
            if (c == Chamber::I && s > 3 + rmax) continue;
            if (c == Chamber::II && s < -r - 3 - rmax) continue;
            out.emplace_back(r, s);
        }
    return out;
}

std::string rsit(long r, long s, long i, double t) {
    std::ostringstream os;
    os << "r=" << r << " s=" << s << " i=" << i << " t=" << t;
    return os.str();
}

KParams random_k(std::mt19937_64& g) {
    std::uniform_real_distribution<double> ph(0, 2 * std::numbers::pi), th(0, std::numbers::pi / 2);
    KParams k;
    k.zeta = ph(g);
    k.theta = th(g);
    k.xi = ph(g);
    k.eta = ph(g);
    k.gamma = ph(g);
    return k;
}

DualPairCase mk(CaseTag t, long a, long b, long c) {
    const auto names = case_param_names(t);
    CaseParams p;
    set_param(p, names[0], a);
    set_param(p, names[1], b);
    set_param(p, names[2], c);
    return make_case(t, p);
}

}  // namespace

// ---------------------------------------------------------------------------
// identities

CheckResult check_comb_lemma(long max) {
    return run_cells("alternating binomial sum (exact)", static_cast<size_t>(max + 1), 1, [max](size_t mu) {
        Cell c;
        for (long r = 0; r <= max; ++r) {
            const Rational rhs = Rational(factorial(static_cast<long>(mu) + r + 1)) / Rational(r + 1);
            for (long i = 0; i <= r; ++i)
                c.exact(comb_lemma_lhs(static_cast<long>(mu), r, i) == rhs,
                        "mu=" + std::to_string(mu) + " r=" + std::to_string(r) + " i=" + std::to_string(i));
        }
        return c;
    });
}

CheckResult check_vandermonde(long max) {
    return run_cells("binomial convolution identity (exact)", 1, 1, [max](size_t) {
        Cell c;
        for (long r = 0; r <= max; ++r)
            for (long i = 0; i <= r; ++i)
                c.exact(vandermonde_identity(r, i) == binomial(r, i),
                        "r=" + std::to_string(r) + " i=" + std::to_string(i));
        return c;
    });
}

CheckResult check_hyp_contiguous() {
    return run_cells("contiguous relation", 1, 1, [](size_t) {
        Cell cell;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                if (b == 0) continue;
                for (int c = 1; c <= 5; ++c)
                    for (double z : kHypZ) {
                        const double lhs = z * gauss_2f1({a + 1.0, b + 1.0, c + 1.0}, z);
                        const double f1 = gauss_2f1({a + 1.0, 1.0 * b, 1.0 * c}, z);
                        const double f0 = gauss_2f1({1.0 * a, 1.0 * b, 1.0 * c}, z);
                        const double k = static_cast<double>(c) / b;
                        const double rhs = k * (f1 - f0);
                        cell.record(rel_diff(lhs, rhs, std::fabs(k) * std::max(std::fabs(f1), std::fabs(f0))),
                                    1e-10, hp_str(a, b, c));
                    }
            }
        return cell;
    });
}

CheckResult check_hyp_one_minus_z() {
    return run_cells("Euler transformation (1-z relation)", 1, 1, [](size_t) {
        Cell cell;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int c = 1; c <= 5; ++c)
                    for (double z : kHypZ) {
                        const double lhs = gauss_2f1({1.0 * a, 1.0 * b, 1.0 * c}, z);
                        const double rhs = std::pow(1 - z, c - a - b) * gauss_2f1({1.0 * (c - a), 1.0 * (c - b), 1.0 * c}, z);
                        cell.record(rel_diff(lhs, rhs), 1e-10, hp_str(a, b, c));
                    }
        return cell;
    });
}

CheckResult check_hyp_derivative() {
    return run_cells("derivative rule vs central differences", 1, 1, [](size_t) {
        Cell cell;
        const double h = 1e-6;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int c = 1; c <= 5; ++c)
                    for (double z : kHypZ) {
                        const HypParams p{1.0 * a, 1.0 * b, 1.0 * c};
                        const double fd = (gauss_2f1(p, z + h) - gauss_2f1(p, z - h)) / (2 * h);
                        cell.record(rel_diff(derivative_2f1(p, z), fd), 1e-6, hp_str(a, b, c));
                    }
        return cell;
    });
}

CheckResult check_hyp_gauss_near_one() {
    return run_cells("Gauss summation vs series near 1", 1, 1, [](size_t) {
        Cell cell;
        const double z = 1 - 1e-12;
        for (double a : {-2.0, -1.0, 0.5, 1.0, 1.5, 2.0})
            for (double b : {-1.5, 0.5, 1.0, 2.0})
                for (double excess : {4.0, 4.5, 6.0}) {
                    const double c = a + b + excess;
                    if (is_nonpositive_integer(c)) continue;
                    const HypParams p{a, b, c};
                    cell.record(rel_diff(gauss_value_at_1(p), detail::series_2f1(p, z, {})), 1e-9, hp_str(a, b, c));
                }
        return cell;
    });
}

CheckResult check_hyp_euler() {
    return run_cells("Euler integral vs series", 1, 1, [](size_t) {
        Cell cell;
        for (double a : {0.5, 1.0, 1.5, 2.0, 3.0})
            for (double gap : {0.5, 1.0, 2.0})
                for (double b : {-2.0, -0.5, 0.0, 1.0, 2.5})
                    for (double z : kHypZ) {
                        const HypParams p{a, b, a + gap};
                        cell.record(rel_diff(euler_integral_2f1(p, z, 96), gauss_2f1(p, z)), 1e-9,
                                    hp_str(p.a, p.b, p.c));
                    }
        return cell;
    });
}

// ---------------------------------------------------------------------------
// ode

CheckResult check_schmid(Chamber ch, long rmax, const VerifyConfig& cfg) {
    const auto grid = rs_grid(ch, rmax);
    return run_cells(std::string("Schmid system, chamber ") + chamber_name(ch), grid.size(), cfg.threads,
                     [&](size_t k) {
                         Cell cell;
                         const auto [r, s] = grid[k];
                         for (long i = 0; i <= r; ++i)
                             for (double t : kOdeTimes) {
                                 const ResidualPair res = schmid_residual(ch, r, s, i, t);
                                 cell.record(std::max(std::fabs(res.first), std::fabs(res.second)), 1e-9,
                                             rsit(r, s, i, t));
                             }
                         return cell;
                     });
}

CheckResult check_riemann_p(long rmax, const VerifyConfig& cfg) {
    const auto grid = rs_grid(Chamber::III, rmax);
    return run_cells("Riemann P-equation, chamber III", grid.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        const auto [r, s] = grid[k];
        for (long i = 0; i <= r; ++i)
            for (double t : kOdeTimes) cell.record(std::fabs(riemann_p_residual(r, s, i, t)), 1e-8, rsit(r, s, i, t));
        return cell;
    });
}

CheckResult check_xi3_forms(long rmax) {
    const auto grid = rs_grid(Chamber::III, rmax);
    return run_cells("two chamber III forms agree", grid.size(), 1, [&](size_t k) {
        Cell cell;
        const auto [r, s] = grid[k];
        for (long i = 0; i <= r; ++i)
            for (double t : kOdeTimes) {
                const double x = ctilde(Chamber::III, r, s, i, t), y = ctilde_alt(r, s, i, t);
                cell.record(std::fabs(x - y) / std::max(std::fabs(x), std::fabs(y)), 1e-10, rsit(r, s, i, t));
            }
        return cell;
    });
}

CheckResult check_ctilde_normalization(long rmax) {
    return run_cells("c~_i(0) = 1", 1, 1, [rmax](size_t) {
        Cell cell;
        for (Chamber ch : {Chamber::I, Chamber::II, Chamber::III})
            for (const auto& [r, s] : rs_grid(ch, rmax))
                for (long i = 0; i <= r; ++i)
                    cell.record(std::fabs(ctilde(ch, r, s, i, 0.0) - 1), 1e-14, rsit(r, s, i, 0));
        return cell;
    });
}

// Negative controls: a shifted family and a wrong-chamber family must fail.
CheckResult check_schmid_sensitivity() {
    return run_cells("Schmid residual sensitivity", 1, 1, [](size_t) {
        Cell cell;
        const long r = 3, s = 4;
        RadialFamily shifted = [&](long j, double t) {
            return std::make_pair(ctilde(Chamber::I, r, s, j, t) + 0.01, ctilde_derivative(Chamber::I, r, s, j, t));
        };
        RadialFamily wrong = [&](long j, double t) {
            return std::make_pair(ctilde(Chamber::I, r, s, j, t), ctilde_derivative(Chamber::I, r, s, j, t));
        };
        for (double t : kOdeTimes) {
            const auto a = schmid_residual_of(Chamber::I, r, s, 1, t, shifted);
            cell.exact(std::max(std::fabs(a.first), std::fabs(a.second)) > 1e-3, "perturbed family not detected");
            const auto b = schmid_residual_of(Chamber::II, r, s, 1, t, wrong);
            cell.exact(std::max(std::fabs(b.first), std::fabs(b.second)) > 1e-3, "wrong-chamber family not detected");
        }
        return cell;
    });
}

// ---------------------------------------------------------------------------
// harmonics

std::vector<DualPairCase> case_grid(CaseTag t, long pmax, bool with_subcase) {
    std::vector<DualPairCase> out;
    for (long a = 0; a <= pmax; ++a)
        for (long b = 0; b <= pmax; ++b)
            for (long c = 0; c <= pmax; ++c) {
                try {
                    DualPairCase dc = mk(t, a, b, c);
                    if (with_subcase && !dc.subcase) continue;
                    out.push_back(dc);
                } catch (const Error&) {
                }
            }
    return out;
}

CheckResult check_harmonicity(CaseTag t, long pmax, const VerifyConfig& cfg) {
    const auto grid = case_grid(t, pmax, false);
    return run_cells(std::string("harmonicity, case ") + case_name(t), grid.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        cell.exact(harmonicity_check(build_harmonic(grid[k])), grid[k].describe());
        return cell;
    });
}

CheckResult check_weights(CaseTag t, long pmax, const VerifyConfig& cfg) {
    const auto grid = case_grid(t, pmax, false);
    return run_cells(std::string("torus weights, case ") + case_name(t), grid.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        cell.exact(weight_check(build_harmonic(grid[k])), grid[k].describe());
        return cell;
    });
}

CheckResult check_norm_formula(long pmax) {
    const auto grid = case_grid(CaseTag::A, pmax, false);
    return run_cells("norm of the case A harmonic", grid.size(), 1, [&](size_t k) {
        Cell cell;
        const CaseParams& p = grid[k].params;
        cell.exact(phi_norm_sq(grid[k]) == norm_sq_case_a_formula(p.mu1, p.mu2, p.nu), grid[k].describe());
        return cell;
    });
}

CheckResult check_oracle(CaseTag t, long pmax, const VerifyConfig& cfg) {
    const auto grid = case_grid(t, pmax, false);
    return run_cells(std::string("Bargmann oracle vs closed form, case ") + case_name(t), grid.size(), cfg.threads,
                     [&](size_t k) {
                         Cell cell;
                         const DualPairCase& dc = grid[k];
                         std::mt19937_64 gen(cfg.seed + 7919 * k + static_cast<int>(t));
                         std::uniform_real_distribution<double> tdist(0.0, 2.0);
                         const double norm = phi_norm_sq(dc).value();
                         for (int n = 0; n < cfg.oracle_samples; ++n) {
                             const double tt = tdist(gen);
                             const KParams a = random_k(gen), b = random_k(gen);
                             const auto w = weil_coeff(dc, tt, a, b);
                             const auto o = bargmann_oracle(dc, tt, a, b) / norm;
                             cell.record(std::fabs(std::abs(w) - std::abs(o)), 1e-10,
                                         dc.describe() + " sample " + std::to_string(n));
                         }
                         return cell;
                     });
}

// ---------------------------------------------------------------------------
// zeta

CheckResult check_zeta_cells(const std::vector<DualPairCase>& cells, const std::string& name,
                             const VerifyConfig& cfg) {
    return run_cells(name, cells.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        const double exact = zeta_closed_form(cells[k]).ratio.to_double();
        const double num = zeta_numeric(cells[k], cfg.quad);
        cell.record(std::fabs(num - exact) / std::fabs(exact), cfg.quad.tol,
                    cells[k].describe() + " numeric " + std::to_string(num) + " vs closed " +
                        zeta_closed_form(cells[k]).ratio.str());
        return cell;
    });
}

CheckResult check_radial_moments() {
    return run_cells("radial moment quadrature", 1, 1, [](size_t) {
        Cell cell;
        for (long n = 3; n <= 12; ++n)
            cell.record(rel_diff(radial_moment_quadrature(n, 16), radial_moment(n).to_double()), 1e-12,
                        "n=" + std::to_string(n));
        return cell;
    });
}

CheckResult check_quadrature_convergence(const std::vector<DualPairCase>& cells, const VerifyConfig& cfg) {
    return run_cells("quadrature stable under node doubling", cells.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        QuadratureConfig twice = cfg.quad;
        twice.n_t *= 2;
        twice.n_theta *= 2;
        const double a = zeta_numeric(cells[k], cfg.quad), b = zeta_numeric(cells[k], twice);
        cell.record(std::fabs(a - b) / std::fabs(b), cfg.quad.tol, cells[k].describe());
        return cell;
    });
}

std::vector<DualPairCase> minimal_cells() {
    return {mk(CaseTag::A, 0, 0, 0),  mk(CaseTag::B, 0, 0, 0),  mk(CaseTag::C1, 0, 0, 4), mk(CaseTag::C1, 2, 2, 0),
            mk(CaseTag::C1, 2, 0, 2), mk(CaseTag::C2, 0, 0, 2), mk(CaseTag::C2, 0, 2, 0), mk(CaseTag::D1, 2, 2, 0),
            mk(CaseTag::D1, 0, 0, 4), mk(CaseTag::D1, 2, 0, 2), mk(CaseTag::D2, 0, 0, 2), mk(CaseTag::D2, 2, 0, 0)};
}

std::vector<DualPairCase> midrange_cells() {
    return {mk(CaseTag::A, 3, 1, 2),  mk(CaseTag::B, 3, 1, 2),  mk(CaseTag::C1, 2, 1, 7), mk(CaseTag::C1, 6, 4, 1),
            mk(CaseTag::C1, 5, 1, 3), mk(CaseTag::C2, 2, 1, 4), mk(CaseTag::C2, 2, 4, 1), mk(CaseTag::D1, 5, 4, 1),
            mk(CaseTag::D1, 2, 1, 7), mk(CaseTag::D1, 5, 1, 3), mk(CaseTag::D2, 2, 1, 4), mk(CaseTag::D2, 4, 1, 1)};
}

// ---------------------------------------------------------------------------
// theorem1

namespace {

std::vector<CaseParams> pattern_grid(const Theorem1Pattern& pat, long pmax) {
    std::vector<CaseParams> out;
    const auto names = case_param_names(pat.tag);
    for (long a = 0; a <= pmax; ++a)
        for (long b = 0; b <= pmax; ++b)
            for (long c = 0; c <= pmax; ++c) {
                CaseParams p;
                set_param(p, names[0], a);
                set_param(p, names[1], b);
                set_param(p, names[2], c);
                if (theorem1_inequalities(pat, p)) out.push_back(p);
            }
    return out;
}

}  // namespace

CheckResult check_theorem1_pattern(const Theorem1Pattern& pat, long pmax, const VerifyConfig& cfg) {
    const auto grid = pattern_grid(pat, pmax);
    return run_cells("c^2 = d * Z/|phi|^2, pattern " + pattern_label(pat), grid.size(), cfg.threads, [&](size_t k) {
        Cell cell;
        const HalfIntTriple l = theorem1_lambda(pat, grid[k]);
        const ConsistencyReport rep = consistency_report(l);
        cell.exact(rep.holds, "lambda=" + triple_str(l) + " c^2=" + rep.c_squared.str() + " d*Z=" +
                                  (rep.degree * rep.zeta_ratio).str() + (rep.case_agrees ? "" : " (case mismatch)"));
        cell.exact(rep.c_squared > Rational(0) && rep.c_squared <= Rational(1),
                   "c^2 outside (0, 1] at lambda=" + triple_str(l));
        return cell;
    });
}

CheckResult check_compact_schur(CaseTag t, long pmax, const VerifyConfig& cfg) {
    const auto grid = case_grid(t, pmax, true);
    return run_cells(std::string("d * Z/|phi|^2 = 1, case ") + case_name(t), grid.size(), cfg.threads,
                     [&](size_t k) {
                         Cell cell;
                         const Rational v = formal_degree(hc_param_of_case(grid[k])) * zeta_closed_form(grid[k]).ratio;
                         cell.exact(v == Rational(1), grid[k].describe() + " gives " + v.str());
                         return cell;
                     });
}

// ---------------------------------------------------------------------------

SuiteReport run_suite(Suite s, const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = suite_name(s);
    const long g = cfg.grid_max;
    auto add = [&](CheckResult r) { rep.checks.push_back(std::move(r)); };
    switch (s) {
        case Suite::identities:
            add(check_comb_lemma(g));
            add(check_vandermonde(g));
            add(check_hyp_contiguous());
            add(check_hyp_one_minus_z());
            add(check_hyp_derivative());
            add(check_hyp_gauss_near_one());
            add(check_hyp_euler());
            break;
        case Suite::ode:
            for (Chamber c : {Chamber::I, Chamber::II, Chamber::III}) add(check_schmid(c, g, cfg));
            add(check_riemann_p(g, cfg));
            add(check_xi3_forms(g));
            add(check_ctilde_normalization(g));
            add(check_schmid_sensitivity());
            break;
        case Suite::harmonics:
            for (CaseTag t : kAllCases) add(check_harmonicity(t, g, cfg));
            for (CaseTag t : kAllCases) add(check_weights(t, g, cfg));
            add(check_norm_formula(g));
            for (CaseTag t : kAllCases) add(check_oracle(t, std::min(g, 2L), cfg));
            break;
        case Suite::zeta: {
            add(check_radial_moments());
            std::vector<DualPairCase> cells;
            for (CaseTag t : kAllCases) {
                auto part = case_grid(t, g, true);
                cells.insert(cells.end(), part.begin(), part.end());
            }
            add(check_zeta_cells(cells, "quadrature vs closed form", cfg));
            add(check_quadrature_convergence(cells, cfg));
            break;
        }
        case Suite::theorem1:
            for (const auto& p : theorem1_patterns()) add(check_theorem1_pattern(p, g, cfg));
            add(check_compact_schur(CaseTag::A, g, cfg));
            add(check_compact_schur(CaseTag::B, g, cfg));
            break;
    }
    return rep;
}

}  // namespace u21
