#pragma once

#include <functional>
#include <memory>
#include <string>

#include "slicereg/domain.hpp"
#include "slicereg/polynomial.hpp"
#include "slicereg/stem.hpp"

namespace slicereg {

/// Slice function f(alpha + beta I) = F1(alpha + ı beta) + I F2(alpha + ı beta)
/// induced by a stem function F on a conjugation-symmetric planar domain.
///
/// Values are immutable: the stem evaluator is shared and must be pure.
/// The stem is evaluated for beta >= 0 and extended to beta < 0 through
/// F(z̄) = conj_ı F(z).
class SliceFunction {
public:
    using StemFn = std::function<StemValue(double alpha, double beta)>;

    enum class Tag { Polynomial, Elementary, Composite };

    /// Polynomial on the whole plane (closed under sums and *-products).
    static SliceFunction polynomial(QuaternionPolynomial p);
    static SliceFunction constant(const Quaternion& a) {
        return polynomial(QuaternionPolynomial::constant(a));
    }
    static SliceFunction identity() { return polynomial(QuaternionPolynomial::identity()); }
    static SliceFunction from_stem(PlanarDomain domain, StemFn stem, Tag tag = Tag::Composite);

    const PlanarDomain& domain() const { return domain_; }
    Tag tag() const { return tag_; }
    /// Coefficients when tag() == Polynomial, nullptr otherwise.
    const QuaternionPolynomial* polynomial() const { return poly_ ? poly_.get() : nullptr; }

    /// Throws PointOutsideDomain when (alpha, beta) is not in the domain.
    StemValue stem(double alpha, double beta) const;
    /// The raw evaluator without the symmetric extension (used to spot-check it).
    StemValue stem_raw(double alpha, double beta) const;

    /// Same function, domain intersected with `d`.
    SliceFunction restricted_to(const PlanarDomain& d) const;

    Quaternion operator()(const Quaternion& a) const;

private:
    SliceFunction(PlanarDomain domain, std::shared_ptr<const StemFn> stem, Tag tag,
                  std::shared_ptr<const QuaternionPolynomial> poly)
        : domain_(std::move(domain)), stem_(std::move(stem)), tag_(tag), poly_(std::move(poly)) {}

    PlanarDomain domain_;
    std::shared_ptr<const StemFn> stem_;
    Tag tag_;
    std::shared_ptr<const QuaternionPolynomial> poly_;
};

/// f(a) = F1 + I F2 at a = alpha + beta I; F1(alpha, 0) at real points.
Quaternion evaluate(const SliceFunction& f, const Quaternion& a);

SliceFunction operator+(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator-(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator-(const SliceFunction& f);
/// Right multiplication by a constant: q -> f(q) a.
SliceFunction operator*(const SliceFunction& f, const Quaternion& a);
SliceFunction operator*(const SliceFunction& f, double s);

/// f * g = I(FG), the stem-level product; coefficient convolution for polynomials.
SliceFunction star_product(const SliceFunction& f, const SliceFunction& g);

/// Elementary slice-preserving function name(q) * premul, name in {exp, sin, cos}.
SliceFunction builtin(const std::string& name, const Quaternion& premul = 1.0);

/// name(h(q)) * premul for slice-preserving h; throws DomainError at points
/// where h takes non-real stem values.
SliceFunction compose_builtin(const std::string& name, const SliceFunction& h, const Quaternion& premul = 1.0);

/// tau(alpha + beta I) = sign(beta) I on H minus R.
SliceFunction tau();

/// Residual of the representation formula
///   |f(a + bJ) - [(1 - JI)/2 f(a + bI) + (1 + JI)/2 f(a - bI)]|.
double representation_check(const SliceFunction& f, double alpha, double beta, const ImaginaryUnit& I,
                            const ImaginaryUnit& J);

/// Sup over the grid nodes of stem_norm(F), which bounds |f| on the circularization.
double sup_norm(const SliceFunction& f, const GridSpec& grid);
/// Sup over the grid of stem_norm(F - G) on the common domain.
double sup_distance(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid);
/// Coefficientwise for polynomials, grid surrogate otherwise.
bool is_identically_zero(const SliceFunction& f, const GridSpec& grid, double tol);

}  // namespace slicereg
