#include "slicereg/real_polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace slicereg {

namespace {

void strip(std::vector<double>& c, double tol) {
    while (!c.empty() && std::abs(c.back()) <= tol) {
        c.pop_back();
    }
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_, 0.0); }

RealPolynomial RealPolynomial::real_part_of(const QuaternionPolynomial& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.w);
    return RealPolynomial(std::move(c));
}

RealPolynomial RealPolynomial::component_of(const QuaternionPolynomial& p, const Quaternion& u) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(dot(a, u));
    return RealPolynomial(std::move(c));
}

double RealPolynomial::evaluate(double x) const {
    double r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Complex RealPolynomial::evaluate(Complex z) const {
    Complex r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
    return r;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
    return RealPolynomial(std::move(d));
}

double RealPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

RealPolynomial RealPolynomial::trimmed(double tol) const {
    RealPolynomial r = *this;
    strip(r.coeffs_, tol);
    return r;
}

RealPolynomial RealPolynomial::monic() const {
    if (is_zero()) return {};
    return *this * (1.0 / leading());
}

QuaternionPolynomial RealPolynomial::to_quaternion() const {
    return QuaternionPolynomial(std::vector<Quaternion>(coeffs_.begin(), coeffs_.end()));
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
    return RealPolynomial(std::move(c));
}

RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) { return a + (-b); }
RealPolynomial operator-(const RealPolynomial& a) { return a * -1.0; }

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (std::size_t m = 0; m < a.coeffs().size(); ++m)
        for (std::size_t l = 0; l < b.coeffs().size(); ++l) c[m + l] += a.coeffs()[m] * b.coeffs()[l];
    return RealPolynomial(std::move(c));
}

RealPolynomial operator*(const RealPolynomial& a, double s) {
    std::vector<double> c(a.coeffs());
    for (double& x : c) x *= s;
    return RealPolynomial(std::move(c));
}

RealPolynomial pow(const RealPolynomial& a, int n) {
    RealPolynomial r = RealPolynomial::constant(1.0);
    for (int t = 0; t < n; ++t) r = r * a;
    return r;
}

std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& a, const RealPolynomial& b) {
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<double> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {RealPolynomial{}, a};
    std::vector<double> quot(static_cast<std::size_t>(a.degree() - db + 1), 0.0);
    for (int k = a.degree(); k >= db; --k) {
        const double t = rem[static_cast<std::size_t>(k)] / b.leading();
        quot[static_cast<std::size_t>(k - db)] = t;
        for (int l = 0; l <= db; ++l) rem[static_cast<std::size_t>(k - db + l)] -= t * b[static_cast<std::size_t>(l)];
        rem[static_cast<std::size_t>(k)] = 0.0;
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

RealPolynomial gcd(const RealPolynomial& a, const RealPolynomial& b, double rel_tol) {
    RealPolynomial x = a.monic();
    RealPolynomial y = b.monic();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    const double scale = std::max({1.0, x.max_abs_coeff(), y.max_abs_coeff()});
    while (!y.is_zero()) {
        RealPolynomial r = divmod(x, y).second.trimmed(rel_tol * scale);
        // a remainder that is numerically zero in every coefficient ends the chain
        if (r.max_abs_coeff() <= rel_tol * scale) r = RealPolynomial{};
        x = y;
        y = r.monic();
    }
    return x.monic();
}

}  // namespace slicereg
