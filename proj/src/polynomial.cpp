#include "slicereg/polynomial.hpp"

#include <algorithm>

namespace slicereg {

namespace {

void strip(std::vector<Quaternion>& c, double tol) {
    while (!c.empty() && norm(c.back()) <= tol) {
        c.pop_back();
    }
}

}  // namespace

QuaternionPolynomial::QuaternionPolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    strip(coeffs_, 0.0);
}

Quaternion QuaternionPolynomial::evaluate(const Quaternion& q) const {
    Quaternion r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = q * r + *it;
    }
    return r;
}

StemValue QuaternionPolynomial::stem(double alpha, double beta) const {
    const Complex z(alpha, beta);
    StemValue r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = z * r;
        r.p += *it;
    }
    return r;
}

double QuaternionPolynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, norm(c));
    return m;
}

QuaternionPolynomial QuaternionPolynomial::trimmed(double tol) const {
    QuaternionPolynomial r = *this;
    strip(r.coeffs_, tol);
    return r;
}

QuaternionPolynomial& QuaternionPolynomial::operator+=(const QuaternionPolynomial& o) {
    coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    strip(coeffs_, 0.0);
    return *this;
}

QuaternionPolynomial& QuaternionPolynomial::operator-=(const QuaternionPolynomial& o) {
    coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    strip(coeffs_, 0.0);
    return *this;
}

QuaternionPolynomial operator+(QuaternionPolynomial a, const QuaternionPolynomial& b) { return a += b; }
QuaternionPolynomial operator-(QuaternionPolynomial a, const QuaternionPolynomial& b) { return a -= b; }
QuaternionPolynomial operator-(const QuaternionPolynomial& a) { return a * -1.0; }

QuaternionPolynomial operator*(const QuaternionPolynomial& f, const Quaternion& a) {
    std::vector<Quaternion> c(f.coeffs());
    for (auto& x : c) x = x * a;
    return QuaternionPolynomial(std::move(c));
}

QuaternionPolynomial operator*(const QuaternionPolynomial& f, double s) { return f * Quaternion(s); }

QuaternionPolynomial star(const QuaternionPolynomial& f, const QuaternionPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        return {};
    }
    std::vector<Quaternion> c(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
        for (std::size_t l = 0; l < g.coeffs().size(); ++l) {
            c[m + l] += f.coeffs()[m] * g.coeffs()[l];
        }
    }
    return QuaternionPolynomial(std::move(c));
}

QuaternionPolynomial poly_star_power(const QuaternionPolynomial& f, int n) {
    if (n < 0) {
        throw DomainError("negative star power");
    }
    QuaternionPolynomial r = QuaternionPolynomial::constant(1.0);
    for (int t = 0; t < n; ++t) r = star(r, f);
    return r;
}

QuaternionPolynomial conj(const QuaternionPolynomial& f) {
    std::vector<Quaternion> c(f.coeffs());
    for (auto& x : c) x = conj(x);
    return QuaternionPolynomial(std::move(c));
}

}  // namespace slicereg
