#pragma once

#include <vector>

#include "slicereg/quaternion.hpp"
#include "slicereg/stem.hpp"

namespace slicereg {

/// f(q) = sum_n q^n a_n with quaternion coefficients on the right.
/// Exact trailing zeros are stripped, so degree() is canonical.
class QuaternionPolynomial {
public:
    QuaternionPolynomial() = default;
    explicit QuaternionPolynomial(std::vector<Quaternion> coeffs);

    static QuaternionPolynomial constant(const Quaternion& a) { return QuaternionPolynomial({a}); }
    static QuaternionPolynomial identity() { return QuaternionPolynomial({0.0, 1.0}); }

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Quaternion operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }

    /// Direct quaternionic evaluation by Horner's rule in q.
    Quaternion evaluate(const Quaternion& q) const;
    /// Stem value at alpha + ı beta: real and imaginary parts of z^n paired with a_n.
    StemValue stem(double alpha, double beta) const;

    double max_coeff_norm() const;
    /// Drops trailing coefficients with norm below `tol`.
    QuaternionPolynomial trimmed(double tol) const;

    QuaternionPolynomial& operator+=(const QuaternionPolynomial& o);
    QuaternionPolynomial& operator-=(const QuaternionPolynomial& o);

    friend bool operator==(const QuaternionPolynomial&, const QuaternionPolynomial&) = default;

private:
    std::vector<Quaternion> coeffs_;
};

QuaternionPolynomial operator+(QuaternionPolynomial a, const QuaternionPolynomial& b);
QuaternionPolynomial operator-(QuaternionPolynomial a, const QuaternionPolynomial& b);
QuaternionPolynomial operator-(const QuaternionPolynomial& a);
/// Right multiplication of every coefficient: the polynomial f(q) a.
QuaternionPolynomial operator*(const QuaternionPolynomial& f, const Quaternion& a);
QuaternionPolynomial operator*(const QuaternionPolynomial& f, double s);

/// *-product: c_n = sum_{m<=n} a_m b_{n-m}, quaternion products in that order.
QuaternionPolynomial star(const QuaternionPolynomial& f, const QuaternionPolynomial& g);
/// n-fold *-product; f^{*0} = 1.
QuaternionPolynomial poly_star_power(const QuaternionPolynomial& f, int n);
/// Coefficientwise conjugate (the polynomial f^c).
QuaternionPolynomial conj(const QuaternionPolynomial& f);

}  // namespace slicereg
