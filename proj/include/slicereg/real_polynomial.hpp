#pragma once

#include <utility>
#include <vector>

#include "slicereg/polynomial.hpp"
#include "slicereg/stem.hpp"

namespace slicereg {

/// Real-coefficient polynomial h(q) = sum q^n c_n, a slice-preserving function on H.
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> coeffs);

    static RealPolynomial constant(double c) { return RealPolynomial({c}); }
    /// (q - r)
    static RealPolynomial linear_factor(double r) { return RealPolynomial({-r, 1.0}); }
    /// q^2 - 2 a q + a^2 + b^2, vanishing on the sphere through a + b i.
    static RealPolynomial sphere_factor(double a, double b) { return RealPolynomial({a * a + b * b, -2.0 * a, 1.0}); }

    /// Real parts of the coefficients; imaginary parts are discarded.
    static RealPolynomial real_part_of(const QuaternionPolynomial& p);
    /// Coordinate of each coefficient along the unit direction u.
    static RealPolynomial component_of(const QuaternionPolynomial& p, const Quaternion& u);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    double operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0.0; }

    double evaluate(double x) const;
    Complex evaluate(Complex z) const;
    RealPolynomial derivative() const;
    double max_abs_coeff() const;
    RealPolynomial trimmed(double tol) const;
    RealPolynomial monic() const;

    QuaternionPolynomial to_quaternion() const;

    friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

private:
    std::vector<double> coeffs_;
};

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b);
RealPolynomial operator-(const RealPolynomial& a);
RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
RealPolynomial operator*(const RealPolynomial& a, double s);
RealPolynomial pow(const RealPolynomial& a, int n);

/// Quotient and remainder; throws DomainError for a zero divisor.
std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& a, const RealPolynomial& b);

/// Monic greatest common divisor by the Euclidean algorithm; remainders whose
/// coefficients fall below `rel_tol` times the running scale count as zero.
RealPolynomial gcd(const RealPolynomial& a, const RealPolynomial& b, double rel_tol = 1e-9);

}  // namespace slicereg
