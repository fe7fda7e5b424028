#include "slicereg/expr.hpp"

#include <sstream>

#include "slicereg/intrinsic.hpp"
#include "slicereg/starexp.hpp"

namespace slicereg {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("expression node is missing '") + key + "': " + j.dump());
    }
    return j.at(key);
}

std::vector<SliceFunction> parse_args(const json& j, const ExprContext& ctx) {
    const json& args = field(j, "args");
    if (!args.is_array() || args.empty()) {
        throw InputError("'args' must be a non-empty array: " + j.dump());
    }
    std::vector<SliceFunction> out;
    for (const auto& a : args) out.push_back(parse_expression(a, ctx));
    return out;
}

SliceFunction analytic(const std::string& op, const SliceFunction& f, const std::string& method,
                       const ExprContext& ctx) {
    if (method == "closed") {
        if (op == "exp") return exp_star_closed(f);
        if (op == "sin") return sin_star_closed(f);
        return cos_star_closed(f);
    }
    if (method == "series") {
        if (op == "exp") return exp_star_series(f, ctx.series_tol, ctx.grid);
        if (op == "sin") return sin_star_series(f, ctx.series_tol, ctx.grid);
        return cos_star_series(f, ctx.series_tol, ctx.grid);
    }
    throw InputError("unknown method '" + method + "' (expected closed or series)");
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) throw InputError(std::string("'") + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

Quaternion quaternion_from_json(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_array() && j.size() == 4 && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number(); })) {
        return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    }
    throw InputError("expected a number or [w, x, y, z], got " + j.dump());
}

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

SliceFunction parse_expression(const json& j, const ExprContext& ctx) {
    if (j.is_number() || j.is_array()) {
        return SliceFunction::constant(quaternion_from_json(j));
    }
    if (!j.is_object() || !j.contains("op") || !j.at("op").is_string()) {
        throw InputError("expression must be a number, an array or an object with 'op': " + j.dump());
    }
    const std::string op = j.at("op").get<std::string>();

    if (op == "poly") {
        const json& c = field(j, "coeffs");
        if (!c.is_array()) throw InputError("'coeffs' must be an array");
        std::vector<Quaternion> coeffs;
        for (const auto& x : c) coeffs.push_back(quaternion_from_json(x));
        return SliceFunction::polynomial(QuaternionPolynomial(std::move(coeffs)));
    }
    if (op == "const") return SliceFunction::constant(quaternion_from_json(field(j, "value")));
    if (op == "id") return SliceFunction::identity();
    if (op == "tau") return tau();
    if (op == "builtin") {
        const json& name = field(j, "name");
        if (!name.is_string()) throw InputError("'name' must be a string");
        const Quaternion premul = j.contains("premul") ? quaternion_from_json(j.at("premul")) : Quaternion(1.0);
        try {
            if (j.contains("arg")) {
                return compose_builtin(name.get<std::string>(), parse_expression(j.at("arg"), ctx), premul);
            }
            return builtin(name.get<std::string>(), premul);
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }
    if (op == "sum" || op == "star") {
        auto args = parse_args(j, ctx);
        SliceFunction acc = args.front();
        for (std::size_t n = 1; n < args.size(); ++n) acc = op == "sum" ? acc + args[n] : star_product(acc, args[n]);
        return acc;
    }
    if (op == "scale") {
        return parse_expression(field(j, "arg"), ctx) * quaternion_from_json(field(j, "by"));
    }
    if (op == "conj") return conjugate_fn(parse_expression(field(j, "arg"), ctx));
    if (op == "scalar") return scalar_part(parse_expression(field(j, "arg"), ctx));
    if (op == "vector") return vector_part(parse_expression(field(j, "arg"), ctx));
    if (op == "sym") return symmetrized(parse_expression(field(j, "arg"), ctx));
    if (op == "exp" || op == "sin" || op == "cos") {
        const std::string method = j.value("method", std::string("closed"));
        return analytic(op, parse_expression(field(j, "arg"), ctx), method, ctx);
    }
    throw InputError("unknown expression node '" + op + "'");
}

PlanarDomain parse_domain(const std::string& text) {
    if (text == "whole") return PlanarDomain::whole_plane();
    if (text == "slit") return PlanarDomain::plane_minus_real_axis();
    if (text.rfind("rect:", 0) == 0) {
        std::istringstream in(text.substr(5));
        double v[3];
        char sep = 0;
        if (!(in >> v[0] >> sep) || sep != ',' || !(in >> v[1] >> sep) || sep != ',' || !(in >> v[2]) ||
            !(in >> std::ws).eof()) {
            throw InputError("domain must be rect:amin,amax,bmax, got '" + text + "'");
        }
        try {
            return PlanarDomain::rectangle(v[0], v[1], v[2]);
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("unknown domain '" + text + "' (expected whole, slit or rect:amin,amax,bmax)");
}

PlanarDomain domain_from_json(const json& j) {
    if (j.is_string()) return parse_domain(j.get<std::string>());
    const json& kind = field(j, "kind");
    if (kind == "whole") return PlanarDomain::whole_plane();
    if (kind == "slit") {
        if (j.contains("alpha_min")) {
            return PlanarDomain::plane_minus_real_axis(
                Bounds{number(j, "alpha_min"), number(j, "alpha_max"), number(j, "beta_max")});
        }
        return PlanarDomain::plane_minus_real_axis();
    }
    if (kind == "rect") {
        try {
            return PlanarDomain::rectangle(number(j, "alpha_min"), number(j, "alpha_max"), number(j, "beta_max"));
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("unknown domain kind " + kind.dump());
}

}  // namespace slicereg
