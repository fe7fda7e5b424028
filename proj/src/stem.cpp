#include "slicereg/stem.hpp"

#include <algorithm>
#include <cmath>

namespace slicereg {

namespace {

using ComplexL = std::complex<long double>;

// Beyond |w| = 16 the alternating series loses too many digits even in
// extended precision; switch to cos(w), sin(w)/w on the principal root.
constexpr double kSeriesRadius = 256.0;
constexpr int kMaxTerms = 400;

std::pair<Complex, Complex> mu_nu_series(Complex s) {
    const ComplexL x(-s.real(), -s.imag());
    const long double ax = std::abs(x);
    ComplexL mu_term(1.0L);
    ComplexL nu_term(1.0L);
    ComplexL mu(1.0L);
    ComplexL nu(1.0L);
    for (int m = 1; m < kMaxTerms; ++m) {
        mu_term *= x / static_cast<long double>((2 * m - 1) * (2 * m));
        nu_term *= x / static_cast<long double>((2 * m) * (2 * m + 1));
        mu += mu_term;
        nu += nu_term;
        // tail of a series whose term ratio is bounded by r < 1
        const long double r = ax / static_cast<long double>((2 * m + 1) * (2 * m + 2));
        if (r < 0.5L) {
            const long double tail = std::abs(mu_term) * r / (1.0L - r);
            if (tail < 1e-19L * std::max(1.0L, std::abs(mu))) {
                break;
            }
        }
    }
    return {Complex(static_cast<double>(mu.real()), static_cast<double>(mu.imag())),
            Complex(static_cast<double>(nu.real()), static_cast<double>(nu.imag()))};
}

}  // namespace

std::pair<Complex, Complex> mu_nu(Complex s) {
    if (std::abs(s) <= kSeriesRadius) {
        return mu_nu_series(s);
    }
    const Complex w = std::sqrt(s);
    return {std::cos(w), std::sin(w) / w};
}

StemValue stem_exp(const StemValue& F) {
    const StemValue V = vector_part(F);
    const auto [mu, nu] = mu_nu(vector_square(V));
    return std::exp(scalar_part(F)) * (StemValue::scalar(mu) + nu * V);
}

StemValue stem_cos(const StemValue& F) {
    // cos(c + V) = cos c cos V - sin c sin V, cos V = mu(-s), sin V = nu(-s) V
    const StemValue V = vector_part(F);
    const Complex c = scalar_part(F);
    const auto [mu, nu] = mu_nu(-vector_square(V));
    return StemValue::scalar(std::cos(c) * mu) - (std::sin(c) * nu) * V;
}

StemValue stem_sin(const StemValue& F) {
    const StemValue V = vector_part(F);
    const Complex c = scalar_part(F);
    const auto [mu, nu] = mu_nu(-vector_square(V));
    return StemValue::scalar(std::sin(c) * mu) + (std::cos(c) * nu) * V;
}

}  // namespace slicereg
