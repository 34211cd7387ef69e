// u21zeta: batch front end over the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 internal error.

#include "u21/u21.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "u21zeta/1";

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInternal = 3 };

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void bad_input(const std::string& msg) { throw CliError{kBadInput, msg}; }

void check(u21_status s) {
    if (s == U21_OK) return;
    const int code = (s == U21_E_INTERNAL || s == U21_E_NON_CONVERGENT) ? kInternal : kBadInput;
    throw CliError{code, std::string(u21_status_name(s)) + ": " + u21_last_error()};
}

struct CaseDel {
    void operator()(u21_case* c) const { u21_case_free(c); }
};
struct RatDel {
    void operator()(u21_rational* q) const { u21_rational_free(q); }
};
struct ClsDel {
    void operator()(u21_classification* c) const { u21_classification_free(c); }
};
struct RepDel {
    void operator()(u21_report* r) const { u21_report_free(r); }
};
using CasePtr = std::unique_ptr<u21_case, CaseDel>;
using RatPtr = std::unique_ptr<u21_rational, RatDel>;

std::string halfint(int64_t twice) {
    char buf[64];
    u21_halfint_str(twice, buf, sizeof buf);
    return buf;
}

std::string triple(const int64_t t[3]) { return "(" + halfint(t[0]) + ", " + halfint(t[1]) + ", " + halfint(t[2]) + ")"; }

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string take(u21_rational* raw) {
    RatPtr q(raw);
    return u21_rational_str(q.get());
}

// ---------------------------------------------------------------------------
// Output: a JSON document plus a flat table for csv/plain.

struct Output {
    json doc;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool tabular = false;  // rows are the payload (table, verify)
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render(const Output& o, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json d = o.doc;
        if (o.tabular) {
            json rows = json::array();
            for (const auto& r : o.rows) {
                json row = json::object();
                for (size_t j = 0; j < o.columns.size(); ++j) row[o.columns[j]] = r[j];
                rows.push_back(row);
            }
            d["rows"] = rows;
        }
        os << d.dump(2) << "\n";
    } else if (format == "csv") {
        for (size_t j = 0; j < o.columns.size(); ++j) os << (j ? "," : "") << csv_field(o.columns[j]);
        os << "\n";
        for (const auto& r : o.rows) {
            for (size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << csv_field(r[j]);
            os << "\n";
        }
    } else if (o.tabular) {
        std::vector<size_t> w(o.columns.size());
        for (size_t j = 0; j < w.size(); ++j) w[j] = o.columns[j].size();
        for (const auto& r : o.rows)
            for (size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t j = 0; j < r.size(); ++j) {
                os << r[j];
                if (j + 1 < r.size()) os << std::string(w[j] - r[j].size() + 2, ' ');
            }
            os << "\n";
        };
        line(o.columns);
        for (const auto& r : o.rows) line(r);
    } else {
        size_t w = 0;
        for (const auto& c : o.columns) w = std::max(w, c.size());
        for (size_t j = 0; j < o.columns.size(); ++j)
            os << o.columns[j] << ":" << std::string(w - o.columns[j].size() + 1, ' ') << o.rows.at(0)[j] << "\n";
    }
    return os.str();
}

// Single-record output: keys in insertion order become CSV columns.
struct Record {
    Output out;
    explicit Record(const std::string& command) {
        out.doc["schema"] = kSchema;
        out.doc["command"] = command;
        out.rows.emplace_back();
    }
    void put(const std::string& key, const std::string& text, json value) {
        out.doc[key] = std::move(value);
        out.columns.push_back(key);
        out.rows[0].push_back(text);
    }
    void put(const std::string& key, const std::string& text) { put(key, text, text); }
    void put_num(const std::string& key, double v) { put(key, num(v), v); }
    void put_int(const std::string& key, long v) { put(key, std::to_string(v), v); }
};

// ---------------------------------------------------------------------------
// Parsing helpers (integers only; floats are rejected).

long parse_long(const std::string& text, const std::string& what) {
    long v = 0;
    const char* b = text.data();
    const char* e = b + text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || text.empty())
        bad_input(what + ": expected an integer, got '" + text + "' (error at position " + std::to_string(p - b) + ")");
    return v;
}

// "n" or "a..b" (inclusive; a > b is an empty range).
std::pair<long, long> parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = parse_long(text, what);
        return {v, v};
    }
    return {parse_long(text.substr(0, dots), what), parse_long(text.substr(dots + 2), what)};
}

std::vector<double> parse_reals(const std::string& text, size_t n, const std::string& what) {
    std::vector<double> out;
    std::string tok;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    while (in >> tok) {
        double v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size()) bad_input(what + ": not a number '" + tok + "'");
        out.push_back(v);
    }
    if (out.size() != n) bad_input(what + ": expected " + std::to_string(n) + " numbers, got " + std::to_string(out.size()));
    return out;
}

void parse_lambda(const std::string& text, int64_t out[3]) { check(u21_parse_halfint_triple(text.c_str(), out)); }

// ---------------------------------------------------------------------------

struct CaseArgs {
    std::string tag;
    std::map<std::string, std::string> raw;  // parameter name -> text (integer or range)
};

constexpr const char* kParamNames[] = {"mu1", "mu2", "mu", "nu", "nu1", "nu2", "alpha", "beta"};

void add_case_options(CLI::App* sub, CaseArgs& a, bool required) {
    auto* o = sub->add_option("--case", a.tag, "dual-pair case: A, B, C1, C2, D1, D2");
    if (required) o->required();
    for (const char* n : kParamNames) sub->add_option(std::string("--") + n, a.raw[n], std::string("case parameter ") + n);
}

std::vector<std::string> param_names(const std::string& tag) {
    std::vector<std::string> out;
    for (int j = 0; j < 3; ++j) {
        const char* n = u21_case_param_name(tag.c_str(), j);
        if (!n) bad_input("unknown case '" + tag + "' (A, B, C1, C2, D1, D2)");
        out.push_back(n);
    }
    return out;
}

// Rejects parameters the case does not use and returns the three in order.
std::vector<std::string> case_param_texts(const CaseArgs& a, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& [k, v] : a.raw) {
        if (v.empty()) continue;
        if (std::find(names.begin(), names.end(), k) == names.end())
            bad_input("--" + k + " is not a parameter of case " + a.tag);
    }
    for (const auto& n : names) {
        auto it = a.raw.find(n);
        if (it == a.raw.end() || it->second.empty()) bad_input("case " + a.tag + " needs --" + n);
        out.push_back(it->second);
    }
    return out;
}

CasePtr make_case(const CaseArgs& a) {
    const auto names = param_names(a.tag);
    const auto texts = case_param_texts(a, names);
    long p[3];
    for (int j = 0; j < 3; ++j) p[j] = parse_long(texts[j], "--" + names[j]);
    u21_case* c = nullptr;
    check(u21_case_new(a.tag.c_str(), p, &c));
    return CasePtr(c);
}

std::array<double, 5> parse_k(const std::string& text, const std::string& what) {
    const auto v = parse_reals(text, 5, what);
    return {v[0], v[1], v[2], v[3], v[4]};
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_classify(const std::string& lambda_text) {
    int64_t l[3];
    parse_lambda(lambda_text, l);
    u21_classification* raw = nullptr;
    check(u21_classify(l, &raw));
    std::unique_ptr<u21_classification, ClsDel> c(raw);
    Record r("classify");
    r.put("lambda", triple(l));
    r.put("chamber", u21_classification_chamber(c.get()));
    int64_t t[3];
    u21_classification_blattner(c.get(), t);
    r.put("blattner", triple(t));
    long rr = 0, ss = 0;
    u21_classification_rs(c.get(), &rr, &ss);
    r.put_int("r", rr);
    r.put_int("s", ss);
    u21_classification_dual(c.get(), t);
    r.put("lambda_dual", triple(t));
    u21_classification_fock_weight(c.get(), t);
    r.put("fock_weight", triple(t));
    r.put("formal_degree", u21_classification_formal_degree(c.get()));
    const u21_case* dc = u21_classification_case(c.get());
    r.put("case", dc ? u21_case_describe(dc) : "");
    r.put("subcase", dc && u21_case_subcase(dc) ? u21_case_subcase(dc) : "");
    r.put("note", u21_classification_note(c.get()));
    return r.out;
}

struct DsArgs {
    std::string lambda, chamber;
    std::optional<long> r, s, i;
    double t = 0;
    std::string k, kprime;
};

Output cmd_coeff_ds(const DsArgs& a) {
    std::string chamber = a.chamber;
    long r = 0, s = 0;
    int64_t blattner[3] = {0, 0, 0};
    const bool have_lambda = !a.lambda.empty();
    if (have_lambda) {
        if (!a.chamber.empty() || a.r || a.s) bad_input("give either --lambda or --chamber/--r/--s, not both");
        int64_t l[3];
        parse_lambda(a.lambda, l);
        u21_classification* raw = nullptr;
        check(u21_classify(l, &raw));
        std::unique_ptr<u21_classification, ClsDel> c(raw);
        chamber = u21_classification_chamber(c.get());
        u21_classification_rs(c.get(), &r, &s);
        u21_classification_blattner(c.get(), blattner);
    } else {
        if (chamber.empty() || !a.r || !a.s) bad_input("coeff-ds needs --lambda or all of --chamber, --r, --s");
        r = *a.r;
        s = *a.s;
    }
    if (a.t < 0) bad_input("--t must be nonnegative");
    Record rec("coeff-ds");
    rec.put("chamber", chamber);
    rec.put_int("r", r);
    rec.put_int("s", s);
    rec.put_num("t", a.t);
    json vals = json::array();
    for (long i = 0; i <= r; ++i) {
        if (a.i && *a.i != i) continue;
        double v = 0;
        check(u21_ctilde(chamber.c_str(), r, s, i, a.t, &v));
        rec.out.columns.push_back("ctilde_" + std::to_string(i));
        rec.out.rows[0].push_back(num(v));
        vals.push_back({{"i", i}, {"value", v}});
    }
    if (a.i && (*a.i < 0 || *a.i > r)) bad_input("--i must lie in 0..r");
    rec.out.doc["ctilde"] = vals;
    double psi = 0;
    check(u21_psi_radial(chamber.c_str(), r, s, a.t, &psi));
    rec.put_num("psi_radial", psi);
    if (!a.k.empty() || !a.kprime.empty()) {
        if (!have_lambda) bad_input("the full spherical function needs --lambda");
        const auto k = parse_k(a.k.empty() ? "0 0 0 0 0" : a.k, "--k");
        const auto kp = parse_k(a.kprime.empty() ? "0 0 0 0 0" : a.kprime, "--kprime");
        double re = 0, im = 0;
        check(u21_psi_full(blattner, chamber.c_str(), a.t, k.data(), kp.data(), &re, &im));
        rec.put_num("psi_full_re", re);
        rec.put_num("psi_full_im", im);
    }
    return rec.out;
}

struct WeilArgs {
    CaseArgs c;
    double t = 0;
    std::string k, kprime;
    bool oracle = false;
    int degree_cap = 0;
};

Output cmd_coeff_weil(const WeilArgs& a) {
    CasePtr c = make_case(a.c);
    const auto k = parse_k(a.k.empty() ? "0 0 0 0 0" : a.k, "--k");
    const auto kp = parse_k(a.kprime.empty() ? "0 0 0 0 0" : a.kprime, "--kprime");
    Record rec("coeff-weil");
    rec.put("case", u21_case_describe(c.get()));
    rec.put_num("t", a.t);
    double re = 0, im = 0;
    check(u21_weil_coeff(c.get(), a.t, k.data(), kp.data(), &re, &im));
    rec.put_num("re", re);
    rec.put_num("im", im);
    rec.put_num("abs", std::hypot(re, im));
    if (a.oracle) {
        u21_rational* nq = nullptr;
        int pi_pow = 0;
        check(u21_case_norm_sq(c.get(), &nq, &pi_pow));
        RatPtr norm(nq);
        const double n = u21_rational_to_double(norm.get()) / std::pow(std::numbers::pi, pi_pow);
        double ore = 0, oim = 0;
        check(u21_bargmann_oracle(c.get(), a.t, k.data(), kp.data(), a.degree_cap, &ore, &oim));
        rec.put("norm_sq", std::string(u21_rational_str(norm.get())) + " * pi^-" + std::to_string(pi_pow));
        rec.put_num("oracle_re", ore / n);
        rec.put_num("oracle_im", oim / n);
        rec.put_num("oracle_abs_diff", std::fabs(std::hypot(re, im) - std::hypot(ore, oim) / n));
    }
    return rec.out;
}

struct ZetaArgs {
    CaseArgs c;
    std::string lambda;
    int n_t = 64, n_theta = 64;
    double tol = 1e-8;
    std::optional<unsigned long long> seed;
    long samples = 200000;
};

Output cmd_zeta(const ZetaArgs& a, int& exit_code) {
    CasePtr c;
    int64_t l[3];
    if (!a.lambda.empty()) {
        if (!a.c.tag.empty()) bad_input("give either --lambda or --case, not both");
        parse_lambda(a.lambda, l);
        u21_classification* raw = nullptr;
        check(u21_classify(l, &raw));
        std::unique_ptr<u21_classification, ClsDel> cls(raw);
        const u21_case* dc = u21_classification_case(cls.get());
        if (!dc) bad_input(std::string("no dual-pair case for this lambda: ") + u21_classification_note(cls.get()));
        c.reset(u21_case_clone(dc));
    } else {
        if (a.c.tag.empty()) bad_input("zeta needs --case with its parameters, or --lambda");
        c = make_case(a.c);
        check(u21_case_hc_param(c.get(), l));
    }
    Record rec("zeta");
    rec.put("case", u21_case_describe(c.get()));
    rec.put("lambda", triple(l));
    u21_rational* q = nullptr;
    check(u21_zeta_closed_form(c.get(), &q));
    RatPtr z(q);
    const double exact = u21_rational_to_double(z.get());
    rec.put("zeta_ratio", u21_rational_str(z.get()));
    double numeric = 0;
    check(u21_zeta_numeric(c.get(), a.n_t, a.n_theta, &numeric));
    rec.put_num("zeta_numeric", numeric);
    const double rel = std::fabs(numeric - exact) / exact;
    rec.put_num("relative_error", rel);
    rec.put("agrees", rel <= a.tol ? "true" : "false", rel <= a.tol);
    rec.put("formal_degree", take([&] {
                u21_rational* d = nullptr;
                check(u21_formal_degree(l, &d));
                return d;
            }()));
    u21_rational* c2 = nullptr;
    if (u21_c_squared(l, &c2) == U21_OK) {
        RatPtr cs(c2);
        rec.put("c_squared", u21_rational_str(cs.get()));
        int holds = 0;
        check(u21_consistency_check(l, &holds));
        rec.put("consistent", holds ? "true" : "false", holds != 0);
        if (!holds) exit_code = kVerifyFailed;
    } else {
        rec.put("c_squared", "");
        rec.put("consistent", "", nullptr);
    }
    if (a.seed) {
        double mean = 0, se = 0;
        check(u21_zeta_monte_carlo(c.get(), a.samples, *a.seed, &mean, &se));
        rec.put_num("monte_carlo_mean", mean);
        rec.put_num("monte_carlo_std_error", se);
        rec.put_int("monte_carlo_samples", a.samples);
    }
    if (rel > a.tol) exit_code = kVerifyFailed;
    return rec.out;
}

struct VerifyArgs {
    std::string suite;
    int grid_max = 4;
    int n_t = 64, n_theta = 64;
    double tol = 1e-8;
    unsigned long long seed = 0;
    bool seed_set = false;
    unsigned threads = 0;
};

Output cmd_verify(const VerifyArgs& a, int& exit_code) {
    u21_verify_config cfg;
    u21_verify_config_default(&cfg);
    cfg.grid_max = a.grid_max;
    cfg.n_t = a.n_t;
    cfg.n_theta = a.n_theta;
    cfg.tol = a.tol;
    if (a.seed_set) cfg.seed = a.seed;
    cfg.threads = a.threads;
    u21_report* raw = nullptr;
    check(u21_verify(a.suite.c_str(), &cfg, &raw));
    std::unique_ptr<u21_report, RepDel> rep(raw);
    Output o;
    o.tabular = true;
    o.doc["schema"] = kSchema;
    o.doc["command"] = "verify";
    o.doc["suite"] = a.suite;
    o.doc["grid_max"] = a.grid_max;
    o.columns = {"check", "status", "worst_residual", "count", "detail"};
    for (size_t i = 0; i < u21_report_size(rep.get()); ++i) {
        const char* name = nullptr;
        const char* detail = nullptr;
        int pass = 0;
        double worst = 0;
        long count = 0;
        check(u21_report_check(rep.get(), i, &name, &pass, &worst, &count, &detail));
        char wbuf[32];
        std::snprintf(wbuf, sizeof wbuf, "%.3e", worst);
        o.rows.push_back({name, pass ? "pass" : "FAIL", wbuf, std::to_string(count), detail});
    }
    const bool ok = u21_report_all_pass(rep.get());
    o.doc["all_pass"] = ok;
    if (!ok) exit_code = kVerifyFailed;
    return o;
}

Output cmd_table(const CaseArgs& a) {
    const auto names = param_names(a.tag);
    const auto texts = case_param_texts(a, names);
    std::pair<long, long> ranges[3];
    for (int j = 0; j < 3; ++j) ranges[j] = parse_range(texts[j], "--" + names[j]);
    Output o;
    o.tabular = true;
    o.doc["schema"] = kSchema;
    o.doc["command"] = "table";
    o.doc["case"] = a.tag;
    o.columns = {"case", names[0], names[1], names[2], "lambda", "chamber", "formal_degree",
                 "zeta_ratio", "c_squared", "c_squared_decimal", "status"};
    for (long x = ranges[0].first; x <= ranges[0].second; ++x)
        for (long y = ranges[1].first; y <= ranges[1].second; ++y)
            for (long z = ranges[2].first; z <= ranges[2].second; ++z) {
                std::vector<std::string> row = {a.tag, std::to_string(x), std::to_string(y), std::to_string(z)};
                const long p[3] = {x, y, z};
                u21_case* raw = nullptr;
                const u21_status st = u21_case_new(a.tag.c_str(), p, &raw);
                CasePtr c(raw);
                if (st != U21_OK) {
                    row.insert(row.end(), {"", "", "", "", "", "", u21_status_name(st)});
                    o.rows.push_back(row);
                    continue;
                }
                if (!u21_case_subcase(c.get())) {
                    row.insert(row.end(), {"", "", "", "", "", "", "boundary_parameter"});
                    o.rows.push_back(row);
                    continue;
                }
                int64_t l[3];
                check(u21_case_hc_param(c.get(), l));
                u21_rational *d = nullptr, *zq = nullptr, *c2 = nullptr;
                check(u21_formal_degree(l, &d));
                check(u21_zeta_closed_form(c.get(), &zq));
                const std::string ds = take(d), zs = take(zq);
                std::string cs, cdec, status = "ok";
                if (u21_c_squared(l, &c2) == U21_OK) {
                    RatPtr cq(c2);
                    cs = u21_rational_str(cq.get());
                    cdec = num(u21_rational_to_double(cq.get()));
                } else {
                    status = "no_pattern_match";
                }
                row.insert(row.end(), {triple(l), u21_case_subcase(c.get()), ds, zs, cs, cdec, status});
                o.rows.push_back(row);
            }
    return o;
}

void emit(const Output& o, const std::string& format, const std::string& path) {
    const std::string text = render(o, format);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) bad_input("cannot open output file '" + path + "'");
    f << text;
    if (!f) throw CliError{kInternal, "failed writing '" + path + "'"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete series, theta lifts and doubling zeta integrals for U(2,1)", "u21zeta"};
    app.set_config("--config", "", "read options from a TOML/INI file; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "plain", out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    std::string lambda_text;
    auto* classify = app.add_subcommand("classify", "chamber, Blattner parameter, degree and dual-pair case of lambda");
    classify->add_option("--lambda,lambda", lambda_text, "Harish-Chandra parameter, e.g. \"-1/2 -5/2 -3/2\"")->required();

    DsArgs ds;
    auto* coeff_ds = app.add_subcommand("coeff-ds", "radial coefficients of the discrete-series matrix coefficient");
    coeff_ds->add_option("--lambda", ds.lambda, "Harish-Chandra parameter");
    coeff_ds->add_option("--chamber", ds.chamber, "I, II or III (with --r and --s)");
    coeff_ds->add_option("--r", ds.r, "r = Lambda1 - Lambda2");
    coeff_ds->add_option("--s", ds.s, "s = Lambda2 - Lambda3");
    coeff_ds->add_option("--i", ds.i, "only this index");
    coeff_ds->add_option("--t", ds.t, "radial coordinate")->required();
    coeff_ds->add_option("--k", ds.k, "K element: zeta theta xi eta gamma");
    coeff_ds->add_option("--kprime", ds.kprime, "second K element");

    WeilArgs weil;
    auto* coeff_weil = app.add_subcommand("coeff-weil", "closed-form Weil matrix coefficient of the joint harmonic");
    add_case_options(coeff_weil, weil.c, true);
    coeff_weil->add_option("--t", weil.t, "radial coordinate")->required();
    coeff_weil->add_option("--k", weil.k, "K element: zeta theta xi eta gamma");
    coeff_weil->add_option("--kprime", weil.kprime, "second K element");
    coeff_weil->add_flag("--oracle", weil.oracle, "also evaluate the Bargmann-kernel oracle");
    coeff_weil->add_option("--degree-cap", weil.degree_cap, "oracle degree cap");

    ZetaArgs zeta;
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta integral: closed form, quadrature and c^2");
    add_case_options(zeta_cmd, zeta.c, false);
    zeta_cmd->add_option("--lambda", zeta.lambda, "Harish-Chandra parameter instead of --case");
    zeta_cmd->add_option("--quad-t", zeta.n_t, "radial quadrature nodes")->check(CLI::Range(2, 4096));
    zeta_cmd->add_option("--quad-theta", zeta.n_theta, "angular quadrature nodes")->check(CLI::Range(2, 4096));
    zeta_cmd->add_option("--tol", zeta.tol, "relative tolerance for agreement")->check(CLI::PositiveNumber);
    zeta_cmd->add_option("--seed", zeta.seed, "run the Monte Carlo sanity estimate with this seed");
    zeta_cmd->add_option("--samples", zeta.samples, "Monte Carlo samples")->check(CLI::Range(2L, 1000000000L));

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "run an invariant suite; exit 1 on any failure");
    verify->add_option("suite", ver.suite, "identities, ode, harmonics, zeta, theorem1")
        ->required()
        ->check(CLI::IsMember({"identities", "ode", "harmonics", "zeta", "theorem1"}));
    verify->add_option("--grid-max", ver.grid_max, "largest parameter in the grids")->check(CLI::Range(0, 64));
    verify->add_option("--quad-t", ver.n_t, "radial quadrature nodes")->check(CLI::Range(2, 4096));
    verify->add_option("--quad-theta", ver.n_theta, "angular quadrature nodes")->check(CLI::Range(2, 4096));
    verify->add_option("--tol", ver.tol, "relative tolerance for quadrature checks")->check(CLI::PositiveNumber);
    auto* seed_opt = verify->add_option("--seed", ver.seed, "seed for the random oracle samples");
    verify->add_option("--threads", ver.threads, "worker threads (0: all cores)");

    CaseArgs table;
    auto* table_cmd = app.add_subcommand("table", "exact zeta ratios and c^2 over parameter ranges (a..b)");
    add_case_options(table_cmd, table, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    int exit_code = kOk;
    try {
        Output o;
        if (*classify) o = cmd_classify(lambda_text);
        else if (*coeff_ds) o = cmd_coeff_ds(ds);
        else if (*coeff_weil) o = cmd_coeff_weil(weil);
        else if (*zeta_cmd) o = cmd_zeta(zeta, exit_code);
        else if (*verify) {
            ver.seed_set = seed_opt->count() > 0;
            o = cmd_verify(ver, exit_code);
        } else if (*table_cmd) o = cmd_table(table);
        emit(o, format, out_path);
    } catch (const CliError& e) {
        std::cerr << "u21zeta: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "u21zeta: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return exit_code;
}
