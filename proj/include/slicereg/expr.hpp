#pragma once

#include "json.hpp"

#include "slicereg/domain.hpp"
#include "slicereg/slice_function.hpp"

namespace slicereg {

/// Settings used by series nodes of an expression.
struct ExprContext {
    double series_tol = 1e-12;
    GridSpec grid;
};

/// Quaternion from a number or a [w, x, y, z] array.  Throws InputError.
Quaternion quaternion_from_json(const nlohmann::json& j);
nlohmann::json quaternion_to_json(const Quaternion& q);

/// Builds a slice function from a JSON expression tree.
///
///   number | [w,x,y,z]                      constant
///   {"op": "poly", "coeffs": [c0, c1, ...]}  sum q^n c_n
///   {"op": "const", "value": c}
///   {"op": "id"}
///   {"op": "builtin", "name": "exp"|"sin"|"cos", "premul": c, "arg": e?}
///   {"op": "tau"}
///   {"op": "sum" | "star", "args": [e, ...]}
///   {"op": "scale", "arg": e, "by": c}       right multiplication
///   {"op": "conj" | "scalar" | "vector" | "sym", "arg": e}
///   {"op": "exp" | "sin" | "cos", "arg": e, "method": "closed"|"series"}
///
/// Throws InputError on malformed input or unknown nodes.
SliceFunction parse_expression(const nlohmann::json& j, const ExprContext& ctx = {});

/// Planar domain from "whole", "slit", "rect:amin,amax,bmax" or an object
/// {"kind": "rect", "alpha_min": .., "alpha_max": .., "beta_max": ..}.
PlanarDomain domain_from_json(const nlohmann::json& j);
PlanarDomain parse_domain(const std::string& text);

}  // namespace slicereg
