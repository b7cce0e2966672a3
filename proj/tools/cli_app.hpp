#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gch/gch.hpp"

namespace gch::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Bad flags or values that fail module preconditions; always exit code 2.
struct UsageError {
    std::string field;
    std::string constraint;
    std::string message;
};

inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline void emit_error(std::ostream& err, const std::string& kind, const std::string& field,
                       const std::string& constraint, const std::string& message) {
    json e;
    e["schema_version"] = kSchemaVersion;
    e["error"] = kind;
    e["field"] = field;
    e["constraint"] = constraint;
    e["message"] = message;
    err << e.dump() << '\n';
}

struct Common {
    std::string format = "csv";
    std::string output;
};

inline void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", c.output, "write to a file instead of stdout");
}

inline json read_params_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError{"params-json", "readable file", "cannot open " + path};
    try {
        json j = json::parse(in);
        if (!j.is_object()) throw UsageError{"params-json", "JSON object", "parameter document must be an object"};
        return j;
    } catch (const json::parse_error& e) {
        throw UsageError{"params-json", "valid JSON", e.what()};
    }
}

// Flags given on the command line win over the parameter document.
template <class T>
std::optional<T> pick(const CLI::Option* flag, const T& flag_value, const json& doc, const char* key) {
    if (flag->count() > 0) return flag_value;
    if (doc.contains(key)) {
        try {
            return doc.at(key).get<T>();
        } catch (const json::exception&) {
            throw UsageError{key, "numeric value", std::string("bad value for ") + key + " in params-json"};
        }
    }
    return std::nullopt;
}

template <class T>
T require(const std::optional<T>& v, const std::string& field, const std::string& why) {
    if (!v) throw UsageError{field, "required", "--" + field + " is required " + why};
    return *v;
}

inline void write_out(const Common& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError{"output", "writable path", "cannot open " + c.output};
    f << text;
}

struct EvalArgs {
    Common common;
    std::string kind;
    int alpha0 = 0, alpha1 = 0, psi0 = 0, psi1 = 0;
    double gamma = 0.0, mu = -1.0, eps = 0.0, Omega = 0.0;
    std::string branch = "root0";
    std::vector<double> xs;
    std::string params_json;
    CLI::Option *o_alpha0 = nullptr, *o_alpha1 = nullptr, *o_psi0 = nullptr, *o_psi1 = nullptr, *o_gamma = nullptr,
                *o_mu = nullptr, *o_eps = nullptr, *o_Omega = nullptr;
};

inline std::string run_eval(const EvalArgs& a) {
    json doc = a.params_json.empty() ? json::object() : read_params_json(a.params_json);
    double mu = pick(a.o_mu, a.mu, doc, "mu").value_or(-1.0);
    double eps = pick(a.o_eps, a.eps, doc, "eps").value_or(0.0);
    std::optional<double> gamma = pick(a.o_gamma, a.gamma, doc, "gamma");
    if (!gamma && doc.contains("nu")) gamma = 0.5 * (1.0 + doc.at("nu").get<double>());
    double g = require(gamma, "gamma", "(or nu in params-json)");
    double Omega = pick(a.o_Omega, a.Omega, doc, "Omega").value_or(0.0);
    if (a.xs.empty()) throw UsageError{"x", "at least one --x", "no evaluation points given"};
    GchParams p = GchParams::from_gamma(mu, eps, g, Omega);

    std::vector<GchEvaluation> rows;
    if (a.kind == "qw") {
        int a0 = require(pick(a.o_alpha0, a.alpha0, doc, "alpha0"), "alpha0", "for kind qw");
        int a1 = require(pick(a.o_alpha1, a.alpha1, doc, "alpha1"), "alpha1", "for kind qw");
        TerminationSpec t(a0, a1);
        for (double x : a.xs) rows.push_back(qw(t, p, x));
    } else if (a.kind == "rw") {
        int s0 = require(pick(a.o_psi0, a.psi0, doc, "psi0"), "psi0", "for kind rw");
        int s1 = require(pick(a.o_psi1, a.psi1, doc, "psi1"), "psi1", "for kind rw");
        for (double x : a.xs) rows.push_back(rw(s0, s1, p, x));
    } else if (a.kind == "f") {
        int a0 = require(pick(a.o_alpha0, a.alpha0, doc, "alpha0"), "alpha0", "for kind f");
        for (double x : a.xs) {
            double z = -0.5 * mu * x * x;
            rows.push_back(make_evaluation(f_poly(a0, g, z), 0.0, eps, z, x));
        }
    } else {
        Branch b = a.branch == "root0" ? Branch::root0 : Branch::root1mnu;
        for (double x : a.xs) rows.push_back(infinite_series_eval(p, b, x));
    }

    if (a.common.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "eval";
        j["kind"] = a.kind;
        j["params"] = {{"mu", mu}, {"eps", eps}, {"gamma", g}, {"Omega", Omega}};
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row = {{"x", number(r.x)},
                        {"z", number(r.z)},
                        {"value", number(r.value)},
                        {"eps0_part", number(r.eps0_part)},
                        {"eps1_part", number(r.eps1_part)}};
            if (r.truncated_at >= 0) {
                row["truncated_at"] = r.truncated_at;
                row["last_term"] = number(r.last_term);
            }
            j["rows"].push_back(row);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "x,z,value,eps0_part,eps1_part\n";
    for (const auto& r : rows)
        os << fmt(r.x) << ',' << fmt(r.z) << ',' << fmt(r.value) << ',' << fmt(r.eps0_part) << ','
           << fmt(r.eps1_part) << '\n';
    return os.str();
}

struct SpectrumArgs {
    Common common;
    double b = 1.0, m = 0.0;
    int l_min = 0, l_max = 0, n_max = 1, order_max = 0;
    std::string params_json;
    CLI::Option *o_b = nullptr, *o_m = nullptr;
};

inline std::string run_spectrum(const SpectrumArgs& a) {
    json doc = a.params_json.empty() ? json::object() : read_params_json(a.params_json);
    double b = require(pick(a.o_b, a.b, doc, "b"), "b", "for spectrum");
    double m = pick(a.o_m, a.m, doc, "m").value_or(0.0);
    if (!(b > 0.0)) throw UsageError{"b", "b > 0", "string tension must be positive"};
    PhysicsParams pp{m, b, 0};
    pp.validate();
    auto rows = enumerate_spectrum(pp, a.order_max, a.n_max, a.l_min, a.l_max);
    if (a.common.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "spectrum";
        j["params"] = {{"b", b}, {"m", m}, {"l_min", a.l_min}, {"l_max", a.l_max}, {"n_max", a.n_max},
                       {"order_max", a.order_max}};
        j["perturbative_warning"] = pp.perturbative_warning();
        j["rows"] = json::array();
        for (const auto& e : rows)
            j["rows"].push_back({{"l", e.qn.l},
                                 {"order_i", e.order_i},
                                 {"n_values", e.qn.n},
                                 {"E_squared", number(e.E_squared)},
                                 {"formula_id", e.formula_id}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "l,order_i,n_values,E_squared,formula_id\n";
    for (const auto& e : rows) {
        std::string ns;
        for (std::size_t k = 0; k < e.qn.n.size(); ++k) ns += (k ? ";" : "") + std::to_string(e.qn.n[k]);
        os << e.qn.l << ',' << e.order_i << ',' << ns << ',' << fmt(e.E_squared) << ',' << e.formula_id << '\n';
    }
    return os.str();
}

struct VerifyArgs {
    Common common;
    std::string suite = "all";
    double eps = 0.0;
    int threads = 0;
    CLI::Option* o_eps = nullptr;
};

inline std::string verify_json(const std::string& suite, const std::vector<gch::verify::Check>& checks) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["suite"] = suite;
    int passed = 0, failed = 0, info = 0;
    j["rows"] = json::array();
    for (const auto& c : checks) {
        if (!c.gating) ++info;
        else if (c.pass) ++passed;
        else ++failed;
        j["rows"].push_back({{"suite", c.suite},
                             {"criterion", c.criterion},
                             {"name", c.name},
                             {"pass", c.pass},
                             {"gating", c.gating},
                             {"measured", number(c.measured)},
                             {"threshold", number(c.threshold)},
                             {"detail", c.detail}});
    }
    j["summary"] = {{"total", checks.size()}, {"passed", passed}, {"failed", failed}, {"informational", info}};
    return j.dump(2) + "\n";
}

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const auto& names = gch::verify::suite_names();
    if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
        throw UsageError{"suite", "one of all, recurrence, kummer, ortho, genfunc, frobenius, wronskian, spectrum, classify",
                         "unknown suite '" + a.suite + "'"};
    if (a.threads < 0) throw UsageError{"threads", "threads >= 0", "thread count must be non-negative"};
    gch::verify::Options opt;
    if (a.o_eps->count() > 0) opt.eps = a.eps;
    opt.threads = a.threads > 0 ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto checks = gch::verify::run(a.suite, opt);
    std::string text = a.common.format == "json" ? verify_json(a.suite, checks) : gch::verify::to_csv(checks);
    write_out(a.common, text, out);
    bool ok = gch::verify::all_gating_pass(checks);
    for (const auto& c : checks)
        if (c.gating && !c.pass)
            err << "FAIL " << c.suite << " | " << c.name << " | measured " << fmt(c.measured) << " threshold "
                << fmt(c.threshold) << " | " << c.detail << '\n';
    return ok ? 0 : 1;
}

struct ClassifyArgs {
    Common common;
    double a0 = 2.0, a1 = -0.25, b1 = -0.01, c1 = 1.5, d1 = 0.0;
    std::string branch = "plus";
};

inline std::string run_classify(const ClassifyArgs& a) {
    RawOdeParams raw{a.a0, a.a1, a.b1, a.c1, a.d1, a.branch == "plus" ? ExponentBranch::plus : ExponentBranch::minus};
    auto r = classify(raw);
    auto adm = polynomial_admissible(raw);
    if (a.common.format == "csv") {
        std::ostringstream os;
        os << "case_label,exponent,behavior_at_zero,behavior_at_infinity,polynomial_at_zero,polynomial_at_infinity,"
              "polynomial_admissible,smallness_ratio\n";
        os << to_string(r.case_label) << ',' << fmt(r.exponent) << ',' << to_string(r.behavior_at_zero) << ','
           << to_string(r.behavior_at_infinity) << ',' << to_string(r.polynomial_at_zero) << ','
           << to_string(r.polynomial_at_infinity) << ',' << (r.polynomial_admissible ? "true" : "false") << ','
           << fmt(adm.smallness_ratio) << '\n';
        return os.str();
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["inputs"] = {{"a0", a.a0}, {"a1", a.a1}, {"b1", a.b1}, {"c1", a.c1}, {"d1", a.d1}, {"branch", a.branch}};
    j["case_label"] = to_string(r.case_label);
    j["exponent"] = number(r.exponent);
    j["behavior_at_zero"] = to_string(r.behavior_at_zero);
    j["behavior_at_infinity"] = to_string(r.behavior_at_infinity);
    j["polynomial_at_zero"] = to_string(r.polynomial_at_zero);
    j["polynomial_at_infinity"] = to_string(r.polynomial_at_infinity);
    j["polynomial_admissible"] = r.polynomial_admissible;
    j["admissibility"] = {{"smallness_ratio", number(adm.smallness_ratio)}, {"reasons", adm.reasons}};
    return j.dump(2) + "\n";
}

// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grand confluent hypergeometric functions: evaluation, verification, spectra"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* e = app.add_subcommand("eval", "evaluate a function at one or more points");
    add_common(e, ev.common);
    e->add_option("--kind", ev.kind, "qw, rw, f or infinite")->required()->check(CLI::IsMember({"qw", "rw", "f", "infinite"}));
    ev.o_alpha0 = e->add_option("--alpha0", ev.alpha0);
    ev.o_alpha1 = e->add_option("--alpha1", ev.alpha1);
    ev.o_psi0 = e->add_option("--psi0", ev.psi0);
    ev.o_psi1 = e->add_option("--psi1", ev.psi1);
    ev.o_gamma = e->add_option("--gamma", ev.gamma);
    ev.o_mu = e->add_option("--mu", ev.mu, "default -1");
    ev.o_eps = e->add_option("--eps", ev.eps, "default 0");
    ev.o_Omega = e->add_option("--Omega", ev.Omega, "eigenvalue for kind infinite");
    e->add_option("--branch", ev.branch, "root0 or root1mnu")->check(CLI::IsMember({"root0", "root1mnu"}));
    e->add_option("--x", ev.xs, "evaluation point, repeatable")->allow_extra_args(false);
    e->add_option("--params-json", ev.params_json, "parameter document");

    SpectrumArgs sp;
    auto* s = app.add_subcommand("spectrum", "tabulate squared energy levels");
    add_common(s, sp.common);
    sp.o_b = s->add_option("--b", sp.b, "string tension");
    sp.o_m = s->add_option("--m", sp.m, "quark mass, default 0");
    s->add_option("--l-min", sp.l_min);
    s->add_option("--l-max", sp.l_max);
    s->add_option("--n-max", sp.n_max);
    s->add_option("--order-max", sp.order_max);
    s->add_option("--params-json", sp.params_json, "parameter document");

    VerifyArgs vf;
    auto* v = app.add_subcommand("verify", "run verification suites");
    add_common(v, vf.common);
    v->add_option("--suite", vf.suite, "suite name or all");
    vf.o_eps = v->add_option("--eps", vf.eps, "eps for the orthogonality grid");
    v->add_option("--threads", vf.threads, "worker threads, 0 for all cores");

    ClassifyArgs cl;
    auto* c = app.add_subcommand("classify", "classify boundary behaviour of the raw equation");
    add_common(c, cl.common);
    cl.common.format = "json";
    c->add_option("--a0", cl.a0);
    c->add_option("--a1", cl.a1);
    c->add_option("--b1", cl.b1);
    c->add_option("--c1", cl.c1);
    c->add_option("--d1", cl.d1);
    c->add_option("--branch", cl.branch, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& pe) {
        emit_error(err, "usage", "arguments", "valid command line", pe.what());
        return 2;
    }

    try {
        if (e->parsed()) {
            write_out(ev.common, run_eval(ev), out);
            return 0;
        }
        if (s->parsed()) {
            write_out(sp.common, run_spectrum(sp), out);
            return 0;
        }
        if (v->parsed()) return run_verify(vf, out, err);
        write_out(cl.common, run_classify(cl), out);
        return 0;
    } catch (const UsageError& u) {
        emit_error(err, "usage", u.field, u.constraint, u.message);
    } catch (const gch::Error& ge) {
        emit_error(err, to_string(ge.kind()), ge.field(), ge.constraint(), ge.what());
    } catch (const json::exception& je) {
        emit_error(err, "usage", "params-json", "well-typed document", je.what());
    }
    return 2;
}

} // namespace gch::cli
