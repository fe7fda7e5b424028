#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "slicereg/intrinsic.hpp"
#include "slicereg/slice_function.hpp"

namespace slicereg::testing {

inline constexpr double kPi = std::numbers::pi;

inline Quaternion random_quaternion(std::mt19937_64& rng, double max_norm) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Quaternion q(n(rng), n(rng), n(rng), n(rng));
    return q * (max_norm * u(rng) / norm(q));
}

inline ImaginaryUnit random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return ImaginaryUnit::normalized(Quaternion(0.0, n(rng), n(rng), n(rng)));
}

/// Degree <= max_degree, coefficient norms <= max_norm, exact degree drawn uniformly.
inline QuaternionPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, double max_norm) {
    const int deg = std::uniform_int_distribution<int>(0, max_degree)(rng);
    std::vector<Quaternion> c;
    for (int n = 0; n <= deg; ++n) c.push_back(random_quaternion(rng, max_norm));
    return QuaternionPolynomial(std::move(c));
}

inline QuaternionPolynomial random_real_polynomial(std::mt19937_64& rng, int max_degree, double max_abs) {
    const int deg = std::uniform_int_distribution<int>(0, max_degree)(rng);
    std::uniform_real_distribution<double> u(-max_abs, max_abs);
    std::vector<Quaternion> c;
    for (int n = 0; n <= deg; ++n) c.emplace_back(u(rng));
    return QuaternionPolynomial(std::move(c));
}

inline SliceFunction constant_vector_fn(double scalar, const Quaternion& vector) {
    return SliceFunction::constant(Quaternion(scalar) + vec(vector));
}

/// f = pi cos(q) i + pi sin(q) j.
inline SliceFunction constant_exponential_example() {
    return builtin("cos", Quaternion(0.0, kPi, 0.0, 0.0)) + builtin("sin", Quaternion(0.0, 0.0, kPi, 0.0));
}

/// f_v = 3 pi i, g_v = 4 pi j with scalar parts 0.3 and -0.2.
inline std::pair<SliceFunction, SliceFunction> constant_orthogonal_pair() {
    return {constant_vector_fn(0.3, Quaternion(0.0, 3.0 * kPi, 0.0, 0.0)),
            constant_vector_fn(-0.2, Quaternion(0.0, 0.0, 4.0 * kPi, 0.0))};
}

/// f_v = 2 pi I, g_v = 5 pi J with <I, J> = cos_angle.
inline std::pair<SliceFunction, SliceFunction> constant_pair(double cos_angle, double f0 = 0.1, double g0 = 0.25) {
    const double s = std::sqrt(1.0 - cos_angle * cos_angle);
    return {constant_vector_fn(f0, Quaternion(0.0, 2.0 * kPi, 0.0, 0.0)),
            constant_vector_fn(g0, Quaternion(0.0, 5.0 * kPi * cos_angle, 5.0 * kPi * s, 0.0))};
}

/// The trigonometric pair built from a Pythagorean triple m^2 = n^2 + p^2 and
/// slice-preserving a(q) = q, b(q) = q^2.
inline std::pair<SliceFunction, SliceFunction> pythagorean_pair(int n, int p, const PlanarDomain& domain) {
    const SliceFunction a = SliceFunction::identity().restricted_to(domain);
    const SliceFunction b = star_product(SliceFunction::identity(), SliceFunction::identity()).restricted_to(domain);
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const SliceFunction ca_cb = star_product(compose_builtin("cos", a), compose_builtin("cos", b));
    const SliceFunction ca_sb = star_product(compose_builtin("cos", a), compose_builtin("sin", b));
    const SliceFunction sa_cb = star_product(compose_builtin("sin", a), compose_builtin("cos", b));
    const SliceFunction sa_sb = star_product(compose_builtin("sin", a), compose_builtin("sin", b));
    const SliceFunction sa = compose_builtin("sin", a);
    const SliceFunction ca = compose_builtin("cos", a);

    const double np = n * kPi;
    const double pp = p * kPi;
    const SliceFunction f = (ca_cb * i + ca_sb * j + sa * k) * (-np);
    const SliceFunction g = (ca_cb * (np * i) + sa_cb * (pp * i)) + (ca_sb * (np * j) + sa_sb * (pp * j)) +
                            (sa * (np * k) - ca * (pp * k));
    return {f, g};
}

/// f = 2 pi (i - j - tau k), g = tau i + pi j + k on the slit plane.
inline std::pair<SliceFunction, SliceFunction> constant_non_real_pair() {
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const SliceFunction t = tau();
    const SliceFunction f = SliceFunction::constant(2.0 * kPi * (i - j)) - t * (2.0 * kPi * k);
    const SliceFunction g = t * i + SliceFunction::constant(kPi * j + k);
    return {f.restricted_to(t.domain()), g};
}

}  // namespace slicereg::testing
