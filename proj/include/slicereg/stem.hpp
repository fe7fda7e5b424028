#pragma once

#include <complex>
#include <utility>

#include "slicereg/quaternion.hpp"

namespace slicereg {

using Complex = std::complex<double>;

/// Element p + ı q of H ⊗_R C, the value of a stem function F = F1 + ı F2 at a point.
struct StemValue {
    Quaternion p;
    Quaternion q;

    constexpr StemValue() = default;
    constexpr StemValue(const Quaternion& p_, const Quaternion& q_) : p(p_), q(q_) {}

    /// Real-valued stem value a + ı b (both components real quaternions).
    static constexpr StemValue scalar(Complex c) { return {Quaternion(c.real()), Quaternion(c.imag())}; }

    StemValue& operator+=(const StemValue& o) {
        p += o.p;
        q += o.q;
        return *this;
    }
    StemValue& operator-=(const StemValue& o) {
        p -= o.p;
        q -= o.q;
        return *this;
    }
    StemValue& operator*=(double s) {
        p *= s;
        q *= s;
        return *this;
    }

    friend bool operator==(const StemValue&, const StemValue&) = default;
};

inline StemValue operator+(StemValue a, const StemValue& b) { return a += b; }
inline StemValue operator-(StemValue a, const StemValue& b) { return a -= b; }
inline StemValue operator-(const StemValue& a) { return {-a.p, -a.q}; }
inline StemValue operator*(StemValue a, double s) { return a *= s; }
inline StemValue operator*(double s, StemValue a) { return a *= s; }

/// Product in H ⊗ C: (p + ı q)(p' + ı q') = pp' - qq' + ı(pq' + qp').
inline StemValue stem_mul(const StemValue& u, const StemValue& v) {
    return {u.p * v.p - u.q * v.q, u.p * v.q + u.q * v.p};
}
inline StemValue operator*(const StemValue& u, const StemValue& v) { return stem_mul(u, v); }

/// Central complex scalar times a stem value.
inline StemValue operator*(Complex c, const StemValue& v) {
    return {c.real() * v.p - c.imag() * v.q, c.real() * v.q + c.imag() * v.p};
}

/// Right multiplication by a quaternion constant (stem of f(q) * a).
inline StemValue operator*(const StemValue& v, const Quaternion& a) { return {v.p * a, v.q * a}; }

/// Componentwise quaternion conjugation (stem of f^c).
inline StemValue conj(const StemValue& v) { return {conj(v.p), conj(v.q)}; }

/// Conjugation of the ı factor: the value F(z̄) of a stem function.
inline StemValue stem_bar(const StemValue& v) { return {v.p, -v.q}; }

/// Scalar part (stem of f0) as a complex number.
inline Complex scalar_part(const StemValue& v) { return {v.p.w, v.q.w}; }

/// Vector part (stem of f_v).
inline StemValue vector_part(const StemValue& v) { return {vec(v.p), vec(v.q)}; }

/// Coordinate of v along the real direction u, as a complex number (p·u + ı q·u).
inline Complex component(const StemValue& v, const Quaternion& u) { return {dot(v.p, u), dot(v.q, u)}; }

/// Sum of squares of the three imaginary coordinates: the stem of f_v^s.
inline Complex vector_square(const StemValue& v) {
    const Complex a{v.p.x, v.q.x};
    const Complex b{v.p.y, v.q.y};
    const Complex c{v.p.z, v.q.z};
    return a * a + b * b + c * c;
}

/// |p| + |q|; submultiplicative on H ⊗ C.
inline double stem_norm(const StemValue& v) { return norm(v.p) + norm(v.q); }

/// Value of the induced slice function at alpha + beta I.
inline Quaternion induce(const StemValue& v, const Quaternion& I) { return v.p + I * v.q; }

/// Values of the cosine-type and sinc-type entire series
///   mu(s) = sum (-s)^m / (2m)!,   nu(s) = sum (-s)^m / (2m+1)!
/// i.e. cos(w) and sin(w)/w for any w with w^2 = s.
std::pair<Complex, Complex> mu_nu(Complex s);

/// Closed forms of exp, cos and sin on H ⊗ C through the scalar/vector split
/// F = c + V with V^2 = -s.
StemValue stem_exp(const StemValue& F);
StemValue stem_cos(const StemValue& F);
StemValue stem_sin(const StemValue& F);

}  // namespace slicereg
