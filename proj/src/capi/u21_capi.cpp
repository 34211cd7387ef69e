#include "u21/u21.h"

#include "u21/dscoef.hpp"
#include "u21/error.hpp"
#include "u21/fockweil.hpp"
#include "u21/verify.hpp"
#include "u21/zetaeval.hpp"

#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>

struct u21_rational {
    u21::Rational value;
    std::string text;
};

struct u21_case {
    u21::DualPairCase value;
    std::string describe;
};

struct u21_classification {
    std::string chamber;
    u21::HalfIntTriple blattner, dual, fock_weight;
    long r = 0, s = 0;
    std::string degree;
    u21_case* dpcase = nullptr;
    std::string note;
};

struct u21_report {
    u21::SuiteReport value;
};

namespace {

thread_local std::string g_last_error;

u21_status set_error(u21_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs f, mapping library errors onto status codes.
template <class F>
u21_status guard(F&& f) {
    try {
        g_last_error.clear();
        f();
        return U21_OK;
    } catch (const u21::Error& e) {
        return set_error(static_cast<u21_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(U21_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(U21_E_INTERNAL, e.what());
    }
}

void require(const void* p, const char* what) {
    if (!p) u21::fail(u21::Errc::invalid_argument, std::string(what) + " must not be NULL");
}

u21::HalfIntTriple triple_in(const int64_t t[3]) {
    require(t, "parameter triple");
    return {u21::HalfInt::from_twice(static_cast<long>(t[0])), u21::HalfInt::from_twice(static_cast<long>(t[1])),
            u21::HalfInt::from_twice(static_cast<long>(t[2]))};
}

void triple_out(const u21::HalfIntTriple& h, int64_t out[3]) {
    for (int j = 0; j < 3; ++j) out[j] = h[j].twice_long();
}

u21::KParams kparams(const double k[5]) {
    require(k, "K parameters");
    return {k[0], k[1], k[2], k[3], k[4]};
}

u21::Chamber chamber_in(const char* text) {
    require(text, "chamber");
    return u21::parse_chamber(text);
}

u21_rational* new_rational(const u21::Rational& q) { return new u21_rational{q, q.str()}; }

u21_case* new_case(const u21::DualPairCase& c) { return new u21_case{c, c.describe()}; }

const std::vector<std::string>& names_of(u21::CaseTag t) {
    static const std::map<u21::CaseTag, std::vector<std::string>> table = [] {
        std::map<u21::CaseTag, std::vector<std::string>> m;
        for (u21::CaseTag c : u21::kAllCases) m[c] = u21::case_param_names(c);
        return m;
    }();
    return table.at(t);
}

}  // namespace

extern "C" {

const char* u21_version(void) { return "1.0.0"; }
const char* u21_last_error(void) { return g_last_error.c_str(); }

const char* u21_status_name(u21_status s) {
    if (s == U21_OK) return "ok";
    if (s == U21_E_INTERNAL) return "internal_error";
    if (s >= U21_E_INVALID_ARGUMENT && s <= U21_E_PARSE) return u21::errc_name(static_cast<u21::Errc>(static_cast<int>(s)));
    return "unknown";
}

const char* u21_rational_str(const u21_rational* q) { return q ? q->text.c_str() : ""; }
double u21_rational_to_double(const u21_rational* q) { return q ? q->value.to_double() : 0.0; }
void u21_rational_free(u21_rational* q) { delete q; }

u21_status u21_parse_halfint_triple(const char* text, int64_t out_twice[3]) {
    return guard([&] {
        require(text, "text");
        require(out_twice, "output");
        triple_out(u21::parse_triple(text), out_twice);
    });
}

size_t u21_halfint_str(int64_t twice, char* buf, size_t cap) {
    const std::string s = u21::HalfInt::from_twice(static_cast<long>(twice)).str();
    if (buf && cap) {
        const size_t n = std::min(cap - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
    return s.size();
}

u21_status u21_classify(const int64_t lambda_twice[3], u21_classification** out) {
    return guard([&] {
        require(out, "output");
        const u21::HalfIntTriple l = triple_in(lambda_twice);
        u21::validate_hc(l);
        auto c = std::make_unique<u21_classification>();
        c->chamber = u21::chamber_name(u21::classify_chamber(l));
        const u21::BlattnerParam b = u21::blattner(l);
        c->blattner = b.Lambda;
        c->r = b.r;
        c->s = b.s;
        c->dual = u21::dual_param(l);
        c->fock_weight = u21::dual_param(b.Lambda);
        c->degree = u21::formal_degree(l).str();
        try {
            c->dpcase = new_case(u21::case_classify(c->fock_weight));
        } catch (const u21::Error& e) {
            c->note = std::string(u21::errc_name(e.code())) + ": " + e.what();
        }
        *out = c.release();
    });
}

const char* u21_classification_chamber(const u21_classification* c) { return c ? c->chamber.c_str() : ""; }
void u21_classification_blattner(const u21_classification* c, int64_t out[3]) { triple_out(c->blattner, out); }
void u21_classification_rs(const u21_classification* c, long* r, long* s) {
    if (r) *r = c->r;
    if (s) *s = c->s;
}
void u21_classification_dual(const u21_classification* c, int64_t out[3]) { triple_out(c->dual, out); }
void u21_classification_fock_weight(const u21_classification* c, int64_t out[3]) { triple_out(c->fock_weight, out); }
const char* u21_classification_formal_degree(const u21_classification* c) { return c ? c->degree.c_str() : ""; }
const u21_case* u21_classification_case(const u21_classification* c) { return c ? c->dpcase : nullptr; }
const char* u21_classification_note(const u21_classification* c) { return c ? c->note.c_str() : ""; }
void u21_classification_free(u21_classification* c) {
    if (!c) return;
    delete c->dpcase;
    delete c;
}

u21_status u21_formal_degree(const int64_t lambda_twice[3], u21_rational** out) {
    return guard([&] {
        require(out, "output");
        *out = new_rational(u21::formal_degree(triple_in(lambda_twice)));
    });
}

u21_status u21_case_new(const char* tag, const long params[3], u21_case** out) {
    return guard([&] {
        require(tag, "tag");
        require(params, "params");
        require(out, "output");
        const u21::CaseTag t = u21::parse_case(tag);
        u21::CaseParams p;
        const auto& names = names_of(t);
        for (int j = 0; j < 3; ++j) u21::set_param(p, names[j], params[j]);
        *out = new_case(u21::make_case(t, p));
    });
}

u21_case* u21_case_clone(const u21_case* c) { return c ? new (std::nothrow) u21_case(*c) : nullptr; }
void u21_case_free(u21_case* c) { delete c; }
const char* u21_case_tag(const u21_case* c) { return c ? u21::case_name(c->value.tag) : ""; }

const char* u21_case_param_name(const char* tag, int index) {
    try {
        if (!tag || index < 0 || index > 2) return nullptr;
        return names_of(u21::parse_case(tag))[index].c_str();
    } catch (...) {
        return nullptr;
    }
}

long u21_case_param(const u21_case* c, int index) {
    if (!c || index < 0 || index > 2) return 0;
    return u21::get_param(c->value.params, names_of(c->value.tag)[index]);
}

const char* u21_case_subcase(const u21_case* c) {
    return c && c->value.subcase ? u21::chamber_name(*c->value.subcase) : nullptr;
}
const char* u21_case_describe(const u21_case* c) { return c ? c->describe.c_str() : ""; }
void u21_case_fock_weight(const u21_case* c, int64_t out[3]) { triple_out(u21::fock_weight(c->value), out); }

u21_status u21_case_hc_param(const u21_case* c, int64_t out_twice[3]) {
    return guard([&] {
        require(c, "case");
        require(out_twice, "output");
        triple_out(u21::hc_param_of_case(c->value), out_twice);
    });
}

u21_status u21_case_norm_sq(const u21_case* c, u21_rational** coeff, int* inv_pi_power) {
    return guard([&] {
        require(c, "case");
        require(coeff, "output");
        const u21::PiScaled n = u21::phi_norm_sq(c->value);
        *coeff = new_rational(n.coeff);
        if (inv_pi_power) *inv_pi_power = n.inv_pi_power;
    });
}

u21_status u21_ctilde(const char* chamber, long r, long s, long i, double t, double* out) {
    return guard([&] {
        require(out, "output");
        *out = u21::ctilde(chamber_in(chamber), r, s, i, t);
    });
}

u21_status u21_psi_radial(const char* chamber, long r, long s, double t, double* out) {
    return guard([&] {
        require(out, "output");
        *out = u21::psi_radial(chamber_in(chamber), r, s, t);
    });
}

u21_status u21_psi_full(const int64_t blattner_twice[3], const char* chamber, double t, const double k[5],
                        const double kprime[5], double* re, double* im) {
    return guard([&] {
        require(re, "output");
        require(im, "output");
        const auto b = u21::blattner_param(triple_in(blattner_twice));
        const auto v = u21::psi_full(b, chamber_in(chamber), t, kparams(k), kparams(kprime));
        *re = v.real();
        *im = v.imag();
    });
}

u21_status u21_schmid_residual(const char* chamber, long r, long s, long i, double t, double* first, double* second) {
    return guard([&] {
        require(first, "output");
        require(second, "output");
        const auto res = u21::schmid_residual(chamber_in(chamber), r, s, i, t);
        *first = res.first;
        *second = res.second;
    });
}

u21_status u21_riemann_p_residual(long r, long s, long i, double t, double* out) {
    return guard([&] {
        require(out, "output");
        *out = u21::riemann_p_residual(r, s, i, t);
    });
}

u21_status u21_weil_coeff(const u21_case* c, double t, const double k[5], const double kprime[5], double* re,
                          double* im) {
    return guard([&] {
        require(c, "case");
        require(re, "output");
        require(im, "output");
        const auto v = u21::weil_coeff(c->value, t, kparams(k), kparams(kprime));
        *re = v.real();
        *im = v.imag();
    });
}

u21_status u21_bargmann_oracle(const u21_case* c, double t, const double k[5], const double kprime[5], int degree_cap,
                               double* re, double* im) {
    return guard([&] {
        require(c, "case");
        require(re, "output");
        require(im, "output");
        u21::OracleConfig cfg;
        if (degree_cap > 0) cfg.degree_cap = degree_cap;
        const auto v = u21::bargmann_oracle(c->value, t, kparams(k), kparams(kprime), cfg);
        *re = v.real();
        *im = v.imag();
    });
}

u21_status u21_zeta_closed_form(const u21_case* c, u21_rational** out) {
    return guard([&] {
        require(c, "case");
        require(out, "output");
        *out = new_rational(u21::zeta_closed_form(c->value).ratio);
    });
}

u21_status u21_zeta_numeric(const u21_case* c, int n_t, int n_theta, double* out) {
    return guard([&] {
        require(c, "case");
        require(out, "output");
        u21::QuadratureConfig q;
        q.n_t = n_t;
        q.n_theta = n_theta;
        *out = u21::zeta_numeric(c->value, q);
    });
}

u21_status u21_zeta_monte_carlo(const u21_case* c, long samples, uint64_t seed, double* mean, double* std_error) {
    return guard([&] {
        require(c, "case");
        require(mean, "output");
        const auto e = u21::zeta_monte_carlo(c->value, samples, seed);
        *mean = e.mean;
        if (std_error) *std_error = e.std_error;
    });
}

u21_status u21_c_squared(const int64_t lambda_twice[3], u21_rational** out) {
    return guard([&] {
        require(out, "output");
        *out = new_rational(u21::c_squared_theorem1(triple_in(lambda_twice)));
    });
}

u21_status u21_consistency_check(const int64_t lambda_twice[3], int* holds) {
    return guard([&] {
        require(holds, "output");
        *holds = u21::consistency_check(triple_in(lambda_twice)) ? 1 : 0;
    });
}

u21_status u21_radial_moment(long n, u21_rational** out) {
    return guard([&] {
        require(out, "output");
        *out = new_rational(u21::radial_moment(n));
    });
}

void u21_verify_config_default(u21_verify_config* cfg) {
    if (!cfg) return;
    const u21::VerifyConfig d;
    cfg->grid_max = d.grid_max;
    cfg->n_t = d.quad.n_t;
    cfg->n_theta = d.quad.n_theta;
    cfg->tol = d.quad.tol;
    cfg->seed = d.seed;
    cfg->threads = d.threads;
}

u21_status u21_verify(const char* suite, const u21_verify_config* cfg, u21_report** out) {
    return guard([&] {
        require(suite, "suite");
        require(out, "output");
        u21::VerifyConfig v;
        if (cfg) {
            if (cfg->grid_max < 0) u21::fail(u21::Errc::invalid_argument, "grid_max must be nonnegative");
            if (cfg->n_t < 2 || cfg->n_theta < 2) u21::fail(u21::Errc::invalid_argument, "quadrature needs >= 2 nodes");
            if (!(cfg->tol > 0)) u21::fail(u21::Errc::invalid_argument, "tolerance must be positive");
            v.grid_max = cfg->grid_max;
            v.quad.n_t = cfg->n_t;
            v.quad.n_theta = cfg->n_theta;
            v.quad.tol = cfg->tol;
            v.seed = cfg->seed;
            v.threads = cfg->threads;
        }
        *out = new u21_report{u21::run_suite(u21::parse_suite(suite), v)};
    });
}

size_t u21_report_size(const u21_report* r) { return r ? r->value.checks.size() : 0; }
int u21_report_all_pass(const u21_report* r) { return r && r->value.all_pass() ? 1 : 0; }

u21_status u21_report_check(const u21_report* r, size_t index, const char** name, int* pass, double* worst,
                            long* count, const char** detail) {
    return guard([&] {
        require(r, "report");
        if (index >= r->value.checks.size()) u21::fail(u21::Errc::invalid_argument, "check index out of range");
        const auto& c = r->value.checks[index];
        if (name) *name = c.name.c_str();
        if (pass) *pass = c.pass ? 1 : 0;
        if (worst) *worst = c.worst;
        if (count) *count = c.count;
        if (detail) *detail = c.detail.c_str();
    });
}

void u21_report_free(u21_report* r) { delete r; }

}  // extern "C"
