#pragma once

#include <optional>
#include <utility>

#include "slicereg/real_polynomial.hpp"
#include "slicereg/slice_function.hpp"

namespace slicereg {

/// f = f0 + f1 I + f2 J + f3 K with slice-preserving components.
struct Decomposition {
    SliceFunction f0;
    SliceFunction f1;
    SliceFunction f2;
    SliceFunction f3;
    OrthonormalBasis basis;

    SliceFunction reconstruct() const;
};

/// f^c: stem components conjugated pointwise.
SliceFunction conjugate_fn(const SliceFunction& f);
/// f0 = (f + f^c)/2.
SliceFunction scalar_part(const SliceFunction& f);
/// f_v = (f - f^c)/2.
SliceFunction vector_part(const SliceFunction& f);
/// f^s = f * f^c.
SliceFunction symmetrized(const SliceFunction& f);
/// <f, g>_* = (f * g^c)_0.
SliceFunction star_scalar(const SliceFunction& f, const SliceFunction& g);
/// f ∧_* g = (f * g - g * f)/2.
SliceFunction star_wedge(const SliceFunction& f, const SliceFunction& g);

/// Coordinate function along the unit direction u (slice-preserving).
SliceFunction component_fn(const SliceFunction& f, const Quaternion& u);

Decomposition decompose(const SliceFunction& f, const OrthonormalBasis& basis);

/// f0 g0 - <f_v, g_v>_* + f0 g_v + g0 f_v + f_v ∧_* g_v, evaluated through the
/// scalar components of f and g.  Independent of the stem-level product.
SliceFunction star_product_sv(const SliceFunction& f, const SliceFunction& g);

enum class WitnessStatus {
    Provided,        ///< witness (alpha, beta) is set
    NotApplicable,   ///< evaluator inputs: only the boolean is decided
    Indeterminate,   ///< R-free domain with f_v^s = 0 but f_v != 0
};

/// alpha f_v + beta g_v = 0 with slice-preserving polynomial coefficients.
struct DependenceWitness {
    RealPolynomial alpha;
    RealPolynomial beta;
};

struct CommutationResult {
    bool commutes = false;
    double wedge_sup = 0.0;
    WitnessStatus status = WitnessStatus::NotApplicable;
    std::optional<DependenceWitness> witness;
};

/// Decides f ∧_* g = 0 and, for polynomials, extracts a linear-dependence witness.
CommutationResult commutes(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol);

/// Stem values real within `tol` (coefficientwise for polynomials).
bool is_slice_preserving(const SliceFunction& f, const GridSpec& grid, double tol);
/// Stem values in R + R J within `tol`.
bool is_cj_preserving(const SliceFunction& f, const ImaginaryUnit& J, const GridSpec& grid, double tol);

}  // namespace slicereg
