#pragma once

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Absolute tolerance for algebraic membership tests (unit sphere, real points).
inline constexpr double kAlgebraicTol = 1e-10;

/// Element of the real quaternion algebra, q = w + x i + y j + z k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }
constexpr Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }
constexpr double re(const Quaternion& a) { return a.w; }
constexpr Quaternion vec(const Quaternion& a) { return {0.0, a.x, a.y, a.z}; }
constexpr double norm2(const Quaternion& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }
inline double norm(const Quaternion& a) { return std::sqrt(norm2(a)); }

/// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Throws DomainError for a == 0.
Quaternion inv(const Quaternion& a);

/// Unit imaginary quaternion: re(u) = 0, |u| = 1, hence u^2 = -1.
class ImaginaryUnit {
public:
    /// Validates membership in the sphere within `tol`; throws DomainError otherwise.
    explicit ImaginaryUnit(const Quaternion& u, double tol = kAlgebraicTol);

    /// Normalizes the imaginary part of `v`; throws DomainError if it vanishes.
    static ImaginaryUnit normalized(const Quaternion& v);

    static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i()); }
    static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
    static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }

    const Quaternion& value() const { return u_; }
    operator const Quaternion&() const { return u_; }  // NOLINT
    ImaginaryUnit operator-() const { return ImaginaryUnit(-u_); }

private:
    Quaternion u_;
};

/// a = alpha + beta I with beta >= 0; `unit` is empty iff a is real (beta < tol).
struct SphereCoords {
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<ImaginaryUnit> unit;
};

SphereCoords sphere_coords(const Quaternion& a, double tol = kAlgebraicTol);

/// Alternating orthonormal triple (I, J, K) of Im(H) with K = IJ.
struct OrthonormalBasis {
    ImaginaryUnit I;
    ImaginaryUnit J;
    ImaginaryUnit K;
};

/// Completes I by Gram-Schmidt against the canonical axis least aligned with I
/// (ties broken in the order i, j, k).
OrthonormalBasis orthonormal_basis(const ImaginaryUnit& I);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::string to_string(const Quaternion& q);

}  // namespace slicereg
