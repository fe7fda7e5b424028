#include "slicereg/sqrt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "slicereg/intrinsic.hpp"

namespace slicereg {

namespace {

using ComplexL = std::complex<long double>;

constexpr int kMaxAberthIterations = 1000;
constexpr double kReconstructionSlack = 1e3;

struct Factor {
    RealPolynomial poly;
    int multiplicity;
};

double scale_of(const RealPolynomial& p) { return std::max(1.0, p.max_abs_coeff()); }

// p = prod a_i^i up to a constant; empty result when the numeric split is inconsistent.
std::vector<Factor> squarefree_factors(const RealPolynomial& p) {
    const RealPolynomial f = p.monic();
    const double tol = 1e-9;
    const RealPolynomial fp = f.derivative();
    const RealPolynomial a0 = gcd(f, fp, tol);
    RealPolynomial b = divmod(f, a0).first;
    RealPolynomial c = divmod(fp, a0).first;
    RealPolynomial d = (c - b.derivative()).trimmed(tol * scale_of(c));

    std::vector<Factor> out;
    int total = 0;
    for (int i = 1; b.degree() > 0 && i <= p.degree(); ++i) {
        const RealPolynomial a = gcd(b, d, tol);
        if (a.degree() > 0) {
            out.push_back({a, i});
            total += i * a.degree();
        }
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = (c - b.derivative()).trimmed(tol * scale_of(c));
    }
    if (total != p.degree()) {
        return {};
    }
    return out;
}

ComplexL horner(const std::vector<long double>& c, ComplexL z, ComplexL& deriv) {
    ComplexL v = 0.0L;
    deriv = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        deriv = deriv * z + v;
        v = v * z + *it;
    }
    return v;
}

// Simultaneous Aberth-Ehrlich iteration on a square-free factor.
std::vector<Complex> aberth(const RealPolynomial& p, double root_tol) {
    const RealPolynomial m = p.monic();
    const int n = m.degree();
    if (n == 1) {
        return {Complex(-m[0], 0.0)};
    }
    std::vector<long double> c(m.coeffs().begin(), m.coeffs().end());

    // Fujiwara bound on the root moduli
    long double bound = 0.0L;
    for (int k = 1; k <= n; ++k) {
        bound = std::max(bound, std::pow(std::abs(c[static_cast<std::size_t>(n - k)]), 1.0L / k));
    }
    const long double radius = std::max(0.5L, bound);
    std::vector<ComplexL> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const long double theta = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }

    for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
        long double worst = 0.0L;
        for (std::size_t k = 0; k < z.size(); ++k) {
            ComplexL dp;
            const ComplexL pz = horner(c, z[k], dp);
            if (pz == 0.0L) continue;
            const ComplexL ratio = pz / dp;
            ComplexL repulsion = 0.0L;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) repulsion += 1.0L / (z[k] - z[j]);
            }
            const ComplexL w = ratio / (1.0L - ratio * repulsion);
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }

    std::vector<Complex> out;
    out.reserve(z.size());
    for (const auto& r : z) {
        ComplexL dp;
        const ComplexL pz = horner(c, r, dp);
        long double scale = 0.0L;
        for (auto it = c.rbegin(); it != c.rend(); ++it) scale = scale * std::abs(r) + std::abs(*it);
        const bool small_residual = std::abs(pz) <= root_tol * scale;
        const bool small_step = std::abs(pz) <= root_tol * (1.0L + std::abs(r)) * std::abs(dp);
        if (!small_residual && !small_step) {
            throw ConvergenceError("Aberth iteration did not converge");
        }
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return out;
}

// Roots of a real polynomial come in conjugate pairs; make that exact.
std::vector<Complex> pair_conjugates(std::vector<Complex> roots, double cluster_tol) {
    std::vector<Complex> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (used[k]) continue;
        used[k] = true;
        const Complex z = roots[k];
        if (std::abs(z.imag()) <= cluster_tol * (1.0 + std::abs(z))) {
            out.emplace_back(z.real(), 0.0);
            continue;
        }
        std::size_t best = roots.size();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (best == roots.size() || std::abs(roots[j] - std::conj(z)) < std::abs(roots[best] - std::conj(z)))
                best = j;
        }
        if (best == roots.size()) {
            throw ConvergenceError("unpaired non-real root of a real polynomial");
        }
        used[best] = true;
        const Complex avg = 0.5 * (z + std::conj(roots[best]));
        out.emplace_back(avg.real(), std::abs(avg.imag()));
        out.emplace_back(avg.real(), -std::abs(avg.imag()));
    }
    return out;
}

}  // namespace

std::vector<ComplexRoot> find_roots(const RealPolynomial& p, const Tolerances& tol) {
    if (p.degree() < 1) {
        throw DomainError("find_roots needs a polynomial of degree >= 1");
    }
    auto factors = squarefree_factors(p);
    if (factors.empty()) {
        factors.push_back({p, 1});
    }

    std::vector<ComplexRoot> roots;
    for (const auto& f : factors) {
        for (const Complex& z : pair_conjugates(aberth(f.poly, tol.root), tol.cluster)) {
            roots.push_back({z, f.multiplicity});
        }
    }

    // merge clusters (weighted centroid)
    std::vector<ComplexRoot> merged;
    for (const auto& r : roots) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const ComplexRoot& m) {
            return std::abs(m.value - r.value) <= tol.cluster * (1.0 + std::abs(r.value));
        });
        if (it == merged.end()) {
            merged.push_back(r);
        } else {
            const int total = it->multiplicity + r.multiplicity;
            it->value = (it->value * static_cast<double>(it->multiplicity) +
                         r.value * static_cast<double>(r.multiplicity)) /
                        static_cast<double>(total);
            it->multiplicity = total;
        }
    }
    std::sort(merged.begin(), merged.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        return a.value.real() != b.value.real() ? a.value.real() < b.value.real() : a.value.imag() < b.value.imag();
    });
    return merged;
}

RealPolynomial ZeroStructure::reconstruct() const {
    RealPolynomial r = RealPolynomial::constant(leading);
    for (const auto& rr : real_roots) r = r * pow(RealPolynomial::linear_factor(rr.r), rr.k);
    for (const auto& s : spheres) r = r * pow(RealPolynomial::sphere_factor(s.a, s.b), s.m);
    return r;
}

ZeroStructure zero_structure(const RealPolynomial& h, const Tolerances& tol) {
    if (h.is_zero()) {
        throw DomainError("zero structure of the zero polynomial");
    }
    ZeroStructure zs;
    zs.leading = h.leading();
    if (h.degree() == 0) {
        return zs;
    }
    for (const auto& root : find_roots(h, tol)) {
        if (root.value.imag() == 0.0) {
            zs.real_roots.push_back({root.value.real(), root.multiplicity});
        } else if (root.value.imag() > 0.0) {
            zs.spheres.push_back({root.value.real(), root.value.imag(), root.multiplicity});
        }
    }
    const RealPolynomial diff = zs.reconstruct() - h;
    if (diff.max_abs_coeff() > tol.root * kReconstructionSlack * scale_of(h)) {
        throw ConvergenceError("factored form does not reproduce the polynomial");
    }
    return zs;
}

SqrtCheck has_sqrt(const RealPolynomial& h, const Tolerances& tol) {
    SqrtCheck out;
    out.structure = zero_structure(h, tol);
    std::ostringstream why;
    for (const auto& rr : out.structure.real_roots) {
        if (rr.k % 2 != 0) {
            why << "real zero " << rr.r << " has odd isolated multiplicity " << rr.k;
            out.reason = why.str();
            return out;
        }
    }
    for (const auto& s : out.structure.spheres) {
        if (s.m % 2 != 0) {
            why << "sphere with center " << s.a << " and radius " << s.b << " has spherical multiplicity "
                << s.spherical_multiplicity() << ", not a multiple of 4";
            out.reason = why.str();
            return out;
        }
    }
    if (out.structure.leading < 0.0) {
        out.reason = "negative on the real axis (leading coefficient < 0)";
        return out;
    }

    double reach = 1.0;
    for (const auto& rr : out.structure.real_roots) reach = std::max(reach, 1.0 + std::abs(rr.r));
    for (const auto& s : out.structure.spheres) reach = std::max(reach, 1.0 + std::abs(s.a) + s.b);
    for (int t = 0; t < 100; ++t) {
        const double x = -reach + 2.0 * reach * t / 99.0;
        double mag = 0.0;
        for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) mag = mag * std::abs(x) + std::abs(*it);
        if (h.evaluate(x) < -tol.root * mag) {
            why << "negative on the real axis at " << x;
            out.reason = why.str();
            return out;
        }
    }
    out.ok = true;
    out.reason = "even real multiplicities, spherical multiplicities divisible by 4, nonnegative on R";
    return out;
}

RealPolynomial sqrt(const RealPolynomial& h, const Tolerances& tol) {
    const SqrtCheck check = has_sqrt(h, tol);
    if (!check.ok) {
        throw DomainError("no slice-preserving square root: " + check.reason);
    }
    const ZeroStructure& zs = check.structure;
    RealPolynomial f = RealPolynomial::constant(std::sqrt(zs.leading));
    for (const auto& rr : zs.real_roots) f = f * pow(RealPolynomial::linear_factor(rr.r), rr.k / 2);
    for (const auto& s : zs.spheres) f = f * pow(RealPolynomial::sphere_factor(s.a, s.b), s.m / 2);

    if ((f * f - h).max_abs_coeff() > tol.root * kReconstructionSlack * scale_of(h)) {
        throw ConvergenceError("square root does not reproduce the polynomial");
    }
    return f;
}

RealPolynomial symmetrized_real(const SliceFunction& g, const Tolerances& tol) {
    if (!g.polynomial()) {
        throw DomainError("symmetrized square roots are supported for polynomials only");
    }
    const SliceFunction gs = symmetrized(g);
    const RealPolynomial h = RealPolynomial::real_part_of(*gs.polynomial());
    return h.trimmed(tol.eval * scale_of(h));
}

SqrtCheck symmetrized_has_sqrt(const SliceFunction& g, const Tolerances& tol) {
    const RealPolynomial h = symmetrized_real(g, tol);
    if (h.is_zero()) {
        return {true, "g^s vanishes identically (square of 0)", {}};
    }
    return has_sqrt(h, tol);
}

}  // namespace slicereg
