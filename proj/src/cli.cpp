#include "slicereg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "slicereg/expr.hpp"
#include "slicereg/intrinsic.hpp"
#include "slicereg/sqrt.hpp"
#include "slicereg/starexp.hpp"

namespace slicereg {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands{"eval", "exp", "identities", "sum-rule", "sqrt", "classify"};

struct Outcome {
    bool ok = true;
    json results = json::array();
};

std::vector<SliceFunction> build_functions(const JobSpec& spec) {
    const ExprContext ctx{spec.series_tol, spec.grid};
    std::vector<SliceFunction> out;
    for (const auto& f : spec.functions) out.push_back(parse_expression(f, ctx).restricted_to(spec.domain));
    return out;
}

double mu_nu_residual(const SliceFunction& f, const GridSpec& grid) {
    double worst = 0.0;
    for (const auto& pt : grid_points(f.domain(), grid)) {
        const Complex s = vector_square(vector_part(f.stem(pt.alpha, pt.beta)));
        const auto [mu, nu] = mu_nu(s);
        const double scale = std::max(1.0, std::norm(mu) + std::abs(nu * nu * s));
        worst = std::max(worst, std::abs(mu * mu + nu * nu * s - 1.0) / scale);
    }
    return worst;
}

json values_at(const SliceFunction& f, const std::vector<Quaternion>& points) {
    json out = json::array();
    for (const auto& q : points) {
        out.push_back({{"point", quaternion_to_json(q)}, {"value", quaternion_to_json(evaluate(f, q))}});
    }
    return out;
}

Outcome run_eval(const JobSpec& spec) {
    Outcome o;
    for (const auto& f : build_functions(spec)) {
        o.results.push_back({{"values", values_at(f, spec.points)}, {"sup_norm", sup_norm(f, spec.grid)}});
    }
    return o;
}

Outcome run_exp(const JobSpec& spec) {
    Outcome o;
    for (const auto& f : build_functions(spec)) {
        const SliceFunction closed = exp_star_closed(f);
        const int depth = series_depth(f, spec.series_tol, spec.grid);
        const double dual = sup_distance(exp_star_series(f, spec.series_tol, spec.grid), closed, spec.grid);
        const double scale = std::max(1.0, sup_norm(closed, spec.grid));
        const double munu = mu_nu_residual(f, spec.grid);
        const bool ok = dual <= spec.tol * scale && munu <= spec.tol;
        o.ok = o.ok && ok;
        o.results.push_back({{"values", values_at(closed, spec.points)},
                             {"series_depth", depth},
                             {"dual_path_residual", dual},
                             {"mu_nu_residual", munu},
                             {"scale", scale},
                             {"passed", ok}});
    }
    return o;
}

Outcome run_identities(const JobSpec& spec) {
    Outcome o;
    for (const auto& f : build_functions(spec)) {
        const IdentityReport r = verify_exp_identities(f, spec.grid, spec.tol);
        const int depth = series_depth(f, spec.series_tol, spec.grid);
        const double dual = sup_distance(exp_star_series(f, spec.series_tol, spec.grid), exp_star_closed(f), spec.grid);
        const bool ok = r.passed(spec.tol) && dual <= spec.tol * std::max(1.0, r.scale);
        o.ok = o.ok && ok;
        o.results.push_back({{"residuals",
                              {{"symmetrized", r.symmetrized},
                               {"even_part", r.even_part},
                               {"odd_part", r.odd_part},
                               {"inverse", r.inverse},
                               {"conjugation", r.conjugation},
                               {"real_axis_modulus", r.real_axis_modulus},
                               {"dual_path", dual}}},
                             {"min_modulus", r.min_modulus},
                             {"scale", r.scale},
                             {"series_depth", depth},
                             {"passed", ok}});
    }
    return o;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

Outcome run_sum_rule(const JobSpec& spec) {
    const auto fns = build_functions(spec);
    if (fns.size() != 2) throw InputError("sum-rule needs exactly two functions");
    const SumRuleReport r = sum_rule(fns[0], fns[1], spec.grid, spec.tol);
    Outcome o;
    o.ok = r.consistent;
    o.results.push_back({{"case", to_string(r.rule_case)},
                         {"n", optional_json(r.n)},
                         {"m", optional_json(r.m)},
                         {"p", optional_json(r.p)},
                         {"inner", optional_json(r.inner)},
                         {"parity_ok", optional_json(r.parity_ok)},
                         {"commutes", r.commutation.commutes},
                         {"wedge_sup", r.commutation.wedge_sup},
                         {"predicted_equal", r.predicted_equal},
                         {"measured_equal", r.measured_equal},
                         {"numeric_residual", r.numeric_residual},
                         {"scale", r.scale},
                         {"prediction", r.necessity_applies ? "characterization" : "sufficient-only"},
                         {"consistent", r.consistent}});
    return o;
}

json structure_json(const ZeroStructure& zs) {
    json roots = json::array();
    for (const auto& r : zs.real_roots) roots.push_back({{"r", r.r}, {"k", r.k}});
    json spheres = json::array();
    for (const auto& s : zs.spheres) {
        spheres.push_back({{"a", s.a}, {"b", s.b}, {"m", s.m}, {"spherical_multiplicity", s.spherical_multiplicity()}});
    }
    return {{"leading", zs.leading}, {"real_roots", roots}, {"spheres", spheres}};
}

Outcome run_sqrt(const JobSpec& spec) {
    const Tolerances tol{spec.tol, spec.series_tol};
    RealPolynomial h;
    if (!spec.coeffs.empty()) {
        h = RealPolynomial(spec.coeffs);
    } else if (spec.functions.size() == 1) {
        const SliceFunction g = parse_expression(spec.functions.front());
        if (!g.polynomial()) throw InputError("sqrt of g^s needs a polynomial g");
        h = symmetrized_real(g, tol);
    } else {
        throw InputError("sqrt needs 'coeffs' or a single polynomial function");
    }
    if (h.is_zero()) throw InputError("sqrt of the zero polynomial");

    const SqrtCheck check = has_sqrt(h, tol);
    json res{{"polynomial", h.coeffs()},
             {"has_sqrt", check.ok},
             {"reason", check.reason},
             {"structure", structure_json(check.structure)}};
    if (check.ok) res["sqrt"] = sqrt(h, tol).coeffs();
    Outcome o;
    o.ok = check.ok;
    o.results.push_back(res);
    return o;
}

Outcome run_classify(const JobSpec& spec) {
    Outcome o;
    for (const auto& f : build_functions(spec)) {
        const ExpClassification c = classify_exp(f, spec.grid, spec.tol);
        o.results.push_back({{"kind", to_string(c.kind)},
                             {"J", c.J ? quaternion_to_json(c.J->value()) : json(nullptr)},
                             {"n", optional_json(c.n)}});
    }
    return o;
}

json base_report(const JobSpec& spec) {
    return {{"command", spec.command},
            {"domain", spec.domain.describe()},
            {"grid",
             {{"n_alpha", spec.grid.n_alpha},
              {"n_beta", spec.grid.n_beta},
              {"seed", spec.grid.seed ? json(*spec.grid.seed) : json(nullptr)}}},
            {"tolerances", {{"eval", spec.tol}, {"series", spec.series_tol}}}};
}

JobResult failure(json report, int code, const std::string& msg) {
    report["error"] = msg;
    report["exit_code"] = code;
    return {code, std::move(report)};
}

std::string fmt(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(6);
        os << v.get<double>();
        return os.str();
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

void JobSpec::validate() const {
    if (!kCommands.contains(command)) throw InputError("unknown command '" + command + "'");
    if (grid.n_alpha < 2 || grid.n_beta < 2) throw InputError("grid dimensions must be >= 2");
    if (!(tol > 0.0) || !(series_tol > 0.0)) throw InputError("tolerances must be positive");
    if (command != "sqrt" && functions.empty()) throw InputError("'" + command + "' needs at least one function");
}

JobSpec job_from_json(const json& j) {
    if (!j.is_object()) throw InputError("job must be a JSON object");
    JobSpec spec;
    try {
        spec.command = j.at("command").get<std::string>();
        if (j.contains("functions")) spec.functions = j.at("functions").get<std::vector<json>>();
        if (j.contains("points"))
            for (const auto& p : j.at("points")) spec.points.push_back(quaternion_from_json(p));
        if (j.contains("coeffs")) spec.coeffs = j.at("coeffs").get<std::vector<double>>();
        if (j.contains("domain")) spec.domain = domain_from_json(j.at("domain"));
        if (j.contains("grid")) {
            const auto g = j.at("grid").get<std::vector<int>>();
            if (g.size() != 2) throw InputError("'grid' must be [n_alpha, n_beta]");
            spec.grid.n_alpha = g[0];
            spec.grid.n_beta = g[1];
        }
        if (j.contains("tol")) spec.tol = j.at("tol").get<double>();
        if (j.contains("series_tol")) spec.series_tol = j.at("series_tol").get<double>();
        if (j.contains("seed")) spec.grid.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed job: ") + e.what());
    }
    return spec;
}

JobResult run(const JobSpec& spec) {
    json report = base_report(spec);
    try {
        spec.validate();
        Outcome o;
        if (spec.command == "eval") o = run_eval(spec);
        else if (spec.command == "exp") o = run_exp(spec);
        else if (spec.command == "identities") o = run_identities(spec);
        else if (spec.command == "sum-rule") o = run_sum_rule(spec);
        else if (spec.command == "sqrt") o = run_sqrt(spec);
        else o = run_classify(spec);
        report["results"] = o.results;
        report["exit_code"] = o.ok ? 0 : 1;
        return {o.ok ? 0 : 1, report};
    } catch (const ConvergenceError& e) {
        return failure(report, 1, e.what());
    } catch (const Error& e) {
        return failure(report, 2, e.what());
    } catch (const json::exception& e) {
        return failure(report, 2, e.what());
    }
}

JobResult run_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        return failure(json{{"command", nullptr}}, 2, std::string("malformed JSON: ") + e.what());
    }
    try {
        return run(job_from_json(j));
    } catch (const Error& e) {
        return failure(json{{"command", j.value("command", json(nullptr))}}, 2, e.what());
    }
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "command: " << fmt(report.value("command", json(nullptr))) << '\n';
    if (report.contains("domain")) os << "domain:  " << fmt(report["domain"]) << '\n';
    if (report.contains("grid")) {
        os << "grid:    " << report["grid"]["n_alpha"] << " x " << report["grid"]["n_beta"] << '\n';
    }
    if (report.contains("error")) {
        os << "error:   " << fmt(report["error"]) << '\n';
    }
    if (report.contains("results")) {
        int idx = 0;
        for (const auto& r : report["results"]) {
            os << "[" << idx++ << "]\n";
            for (const auto& [key, value] : r.items()) {
                if (key == "values") {
                    for (const auto& v : value) os << "  f(" << v["point"].dump() << ") = " << v["value"].dump() << '\n';
                } else if (value.is_object()) {
                    os << "  " << key << ":\n";
                    for (const auto& [k2, v2] : value.items()) os << "    " << k2 << " = " << fmt(v2) << '\n';
                } else {
                    os << "  " << key << " = " << fmt(value) << '\n';
                }
            }
        }
    }
    os << "exit:    " << report.value("exit_code", -1) << '\n';
    return os.str();
}

std::optional<std::string> check_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        return std::string("not valid JSON: ") + e.what();
    }
    if (!j.is_object()) return "report must be a JSON object";
    if (!j.contains("command")) return "report has no 'command'";
    if (!j.contains("exit_code") || !j["exit_code"].is_number_integer()) return "report has no integer 'exit_code'";
    const int code = j["exit_code"].get<int>();
    if (code < 0 || code > 2) return "exit_code out of range";
    if (!j.contains("results") && !j.contains("error")) return "report has neither 'results' nor 'error'";
    if (j.contains("results") && !j["results"].is_array()) return "'results' must be an array";
    return std::nullopt;
}

}  // namespace slicereg
