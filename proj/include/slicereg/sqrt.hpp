#pragma once

#include <string>
#include <vector>

#include "slicereg/domain.hpp"
#include "slicereg/real_polynomial.hpp"
#include "slicereg/slice_function.hpp"

namespace slicereg {

struct ComplexRoot {
    Complex value;
    int multiplicity = 1;
};

/// All complex roots of p (degree >= 1) with multiplicities.
///
/// The polynomial is first split into square-free factors (Yun), each factor
/// is solved by Aberth-Ehrlich iteration, conjugate pairs are symmetrized and
/// roots closer than tol.cluster * (1 + |r|) are merged.
/// Throws ConvergenceError if a factor does not reach tol.root.
std::vector<ComplexRoot> find_roots(const RealPolynomial& p, const Tolerances& tol = {});

struct RealRoot {
    double r;
    int k;  ///< isolated multiplicity
};

/// Sphere S_{a+bJ}: factor (q^2 - 2aq + a^2 + b^2)^m, spherical multiplicity 2m.
struct SphereZero {
    double a;
    double b;
    int m;

    int spherical_multiplicity() const { return 2 * m; }
};

struct ZeroStructure {
    double leading = 0.0;
    std::vector<RealRoot> real_roots;
    std::vector<SphereZero> spheres;

    /// leading * prod (q - r)^k * prod (sphere factor)^m
    RealPolynomial reconstruct() const;
};

/// Throws DomainError for h = 0.
ZeroStructure zero_structure(const RealPolynomial& h, const Tolerances& tol = {});

struct SqrtCheck {
    bool ok = false;
    /// Failing condition, or a confirmation when ok.
    std::string reason;
    ZeroStructure structure;
};

/// Existence of a slice-preserving f with f^2 = h: even real multiplicities,
/// spherical multiplicities divisible by 4, and h >= 0 on the real axis.
SqrtCheck has_sqrt(const RealPolynomial& h, const Tolerances& tol = {});

/// The square root with positive leading coefficient; throws DomainError when
/// has_sqrt(h) fails.
RealPolynomial sqrt(const RealPolynomial& h, const Tolerances& tol = {});

/// g^s of a polynomial slice function as a real polynomial.
RealPolynomial symmetrized_real(const SliceFunction& g, const Tolerances& tol = {});

/// has_sqrt(g^s) for polynomial g; g^s = 0 counts as a square (of 0).
SqrtCheck symmetrized_has_sqrt(const SliceFunction& g, const Tolerances& tol = {});

}  // namespace slicereg
