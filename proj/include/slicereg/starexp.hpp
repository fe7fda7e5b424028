#pragma once

#include <optional>

#include "slicereg/domain.hpp"
#include "slicereg/intrinsic.hpp"
#include "slicereg/slice_function.hpp"

namespace slicereg {

// ---------------------------------------------------------------------------
// Truncated series
// ---------------------------------------------------------------------------

/// Hard cap on the truncation depth of the star series.
inline constexpr int kMaxSeriesDepth = 200;

/// Smallest N with M^(N+1)/(N+1)! * e^M < tol.  Throws ConvergenceError if
/// N would exceed kMaxSeriesDepth.
int series_truncation(double sup_bound, double tol);

/// exp_*(f) = sum f^{*n}/n!, truncated by series_truncation() with M the
/// grid sup of |f| over the domain of f.
SliceFunction exp_star_series(const SliceFunction& f, double tol, const GridSpec& grid);
SliceFunction cos_star_series(const SliceFunction& f, double tol, const GridSpec& grid);
SliceFunction sin_star_series(const SliceFunction& f, double tol, const GridSpec& grid);

/// Depth chosen by the *_series functions for this f.
int series_depth(const SliceFunction& f, double tol, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// exp_*(f) = exp(f0) (mu(f) + nu(f) f_v), evaluated pointwise on the stem.
SliceFunction exp_star_closed(const SliceFunction& f);
SliceFunction cos_star_closed(const SliceFunction& f);
SliceFunction sin_star_closed(const SliceFunction& f);

/// exp_*(f0) * exp_*(f_v), the splitting of the scalar part.
SliceFunction exp_star_factored(const SliceFunction& f);

/// mu(f) = sum (-1)^m (f_v^s)^m/(2m)!, slice-preserving.
SliceFunction mu_fn(const SliceFunction& f);
/// nu(f) = sum (-1)^m (f_v^s)^m/(2m+1)!, slice-preserving.
SliceFunction nu_fn(const SliceFunction& f);

/// Values of mu(f), nu(f) and s = f_v^s at a point.  All three lie in the
/// slice C_I of the point, and mu^2 + nu^2 s = 1.
struct MuNuValue {
    Quaternion mu;
    Quaternion nu;
    Quaternion s;
};

MuNuValue mu_nu(const SliceFunction& f, const Quaternion& point);

/// exp_*(f)(q0) by the case analysis on f_v^s(q0): zero, positive, negative
/// or non-real (principal square root in C_I).  Uses only pointwise values of
/// f0, f_v and f_v^s; independent of exp_star_closed.
Quaternion exp_star_four_case(const SliceFunction& f, const Quaternion& point, double tol = 1e-14);

/// exp(f0) (cos(sqrt(f_v^s)) + sin(sqrt(f_v^s))/sqrt(f_v^s) f_v) with the global
/// square root of f_v^s.  f must be a polynomial; throws NoGlobalSquareRoot when
/// f_v^s = 0 or has no slice-preserving square root.
SliceFunction exp_star_sqrtform(const SliceFunction& f, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Classification, products and identities
// ---------------------------------------------------------------------------

struct ExpClassification {
    enum class Kind { SlicePreserving, CJPreserving, Generic };
    Kind kind = Kind::Generic;
    /// Preserved slice for CJPreserving (sign fixed: first nonzero coordinate > 0).
    std::optional<ImaginaryUnit> J;
    /// n with f_v^s = n^2 pi^2 when that is why exp_*(f) is slice-preserving.
    std::optional<int> n;
};

ExpClassification classify_exp(const SliceFunction& f, const GridSpec& grid, double tol);

/// exp_*(f) * exp_*(g) through mu, nu, <f_v, g_v>_* and f_v ∧_* g_v.
SliceFunction exp_product_closed(const SliceFunction& f, const SliceFunction& g);

/// Grid residuals of the exponential identities.
struct IdentityReport {
    double symmetrized = 0.0;      ///< (exp_* f)^s = exp(2 f0)
    double even_part = 0.0;        ///< (exp_* f + exp_* f^c)/2 = exp(f0) mu(f)
    double odd_part = 0.0;         ///< (exp_* f - exp_* f^c)/2 = exp(f0) nu(f) f_v
    double inverse = 0.0;          ///< exp_*(f) * exp_*(-f) = 1
    double conjugation = 0.0;      ///< exp_*(f^c) = (exp_* f)^c
    double real_axis_modulus = 0.0;///< | |exp_* f(x)|^2 - exp(2 f0(x)) | on real nodes
    double min_modulus = 0.0;      ///< grid min of |exp_* f| over sample imaginary units
    double scale = 0.0;            ///< grid sup of |exp_* f|

    double max_residual() const;
    bool passed(double tol) const;
};

IdentityReport verify_exp_identities(const SliceFunction& f, const GridSpec& grid, double tol);

/// Constant value of a slice-preserving function on the grid, if its variance
/// is at most tol^2.
std::optional<Complex> constant_value(const SliceFunction& h, const GridSpec& grid, double tol);

/// n >= 1 with s = n^2 pi^2 within tol, if any.
std::optional<int> pythagorean_index(Complex s, double tol);

enum class SumRuleCase { LinearDependent, Pythagorean, Fails };

struct SumRuleReport {
    SumRuleCase rule_case = SumRuleCase::Fails;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> p;
    std::optional<double> inner;        ///< constant value of <f_v, g_v>_*
    std::optional<bool> parity_ok;
    double numeric_residual = 0.0;      ///< grid sup |exp_*(f+g) - exp_*(f) * exp_*(g)|
    double scale = 1.0;                 ///< max(1, grid sup |exp_*(f) * exp_*(g)|)
    bool predicted_equal = false;
    bool measured_equal = false;
    /// The domain has real points, so the characterization is two-sided.
    bool necessity_applies = true;
    bool consistent = true;
    CommutationResult commutation;
};

/// Decides whether exp_*(f+g) = exp_*(f) * exp_*(g) and measures it.
SumRuleReport sum_rule(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol);

const char* to_string(SumRuleCase c);
const char* to_string(ExpClassification::Kind k);

}  // namespace slicereg
