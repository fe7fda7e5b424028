#include "slicereg/starexp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "slicereg/sqrt.hpp"

namespace slicereg {

namespace {

using std::numbers::pi;

enum class SeriesKind { Exp, Cos, Sin };

SliceFunction series_fn(const SliceFunction& f, int depth, SeriesKind kind) {
    return SliceFunction::from_stem(f.domain(), [f, depth, kind](double a, double b) {
        const StemValue F = f.stem(a, b);
        StemValue term(1.0, 0.0);  // F^n / n!
        StemValue sum;
        for (int n = 0; n <= depth; ++n) {
            if (n > 0) term = stem_mul(term, F) * (1.0 / n);
            switch (kind) {
                case SeriesKind::Exp: sum += term; break;
                case SeriesKind::Cos:
                    if (n % 2 == 0) sum += (n % 4 == 0) ? term : -term;
                    break;
                case SeriesKind::Sin:
                    if (n % 2 == 1) sum += (n % 4 == 1) ? term : -term;
                    break;
            }
        }
        return sum;
    });
}

SliceFunction map_closed(const SliceFunction& f, StemValue (*fn)(const StemValue&)) {
    return SliceFunction::from_stem(f.domain(), [f, fn](double a, double b) { return fn(f.stem(a, b)); });
}

Complex sinc(Complex z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

Quaternion in_slice(Complex c, const Quaternion& I) { return c.real() + I * c.imag(); }
Complex from_slice(const Quaternion& x, const Quaternion& I) { return {x.w, dot(x, I)}; }

// Unit vector spanning the vector parts of f, sign-normalized; nullopt if f_v vanishes.
std::optional<ImaginaryUnit> dominant_direction(const SliceFunction& fv, const GridSpec& grid, double tol) {
    Quaternion best;
    auto consider = [&](const Quaternion& v) {
        if (norm(vec(v)) > norm(best)) best = vec(v);
    };
    if (const auto* p = fv.polynomial()) {
        for (const auto& c : p->coeffs()) consider(c);
    } else {
        for (const auto& pt : grid_points(fv.domain(), grid)) {
            const StemValue F = fv.stem(pt.alpha, pt.beta);
            consider(F.p);
            consider(F.q);
        }
    }
    if (norm(best) <= tol) return std::nullopt;
    Quaternion u = best / norm(best);
    for (double c : {u.x, u.y, u.z}) {
        if (std::abs(c) > kAlgebraicTol) {
            if (c < 0) u = -u;
            break;
        }
    }
    return ImaginaryUnit(u);
}

}  // namespace

int series_truncation(double sup_bound, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("series tolerance must be positive");
    }
    if (sup_bound <= 0.0) {
        return 0;
    }
    const double log_m = std::log(sup_bound);
    const double log_tol = std::log(tol);
    for (int n = 0; n <= kMaxSeriesDepth; ++n) {
        const double log_rem = (n + 1) * log_m - std::lgamma(n + 2.0) + sup_bound;
        if (log_rem < log_tol) return n;
    }
    throw ConvergenceError("star series needs more than " + std::to_string(kMaxSeriesDepth) +
                           " terms for sup |f| = " + std::to_string(sup_bound));
}

int series_depth(const SliceFunction& f, double tol, const GridSpec& grid) {
    return series_truncation(sup_norm(f, grid), tol);
}

SliceFunction exp_star_series(const SliceFunction& f, double tol, const GridSpec& grid) {
    return series_fn(f, series_depth(f, tol, grid), SeriesKind::Exp);
}

SliceFunction cos_star_series(const SliceFunction& f, double tol, const GridSpec& grid) {
    return series_fn(f, series_depth(f, tol, grid), SeriesKind::Cos);
}

SliceFunction sin_star_series(const SliceFunction& f, double tol, const GridSpec& grid) {
    return series_fn(f, series_depth(f, tol, grid), SeriesKind::Sin);
}

SliceFunction exp_star_closed(const SliceFunction& f) { return map_closed(f, stem_exp); }
SliceFunction cos_star_closed(const SliceFunction& f) { return map_closed(f, stem_cos); }
SliceFunction sin_star_closed(const SliceFunction& f) { return map_closed(f, stem_sin); }

SliceFunction exp_star_factored(const SliceFunction& f) {
    return star_product(exp_star_closed(scalar_part(f)), exp_star_closed(vector_part(f)));
}

SliceFunction mu_fn(const SliceFunction& f) {
    return SliceFunction::from_stem(f.domain(), [f](double a, double b) {
        return StemValue::scalar(mu_nu(vector_square(vector_part(f.stem(a, b)))).first);
    });
}

SliceFunction nu_fn(const SliceFunction& f) {
    return SliceFunction::from_stem(f.domain(), [f](double a, double b) {
        return StemValue::scalar(mu_nu(vector_square(vector_part(f.stem(a, b)))).second);
    });
}

MuNuValue mu_nu(const SliceFunction& f, const Quaternion& point) {
    const SphereCoords sc = sphere_coords(point);
    if (!f.domain().contains(sc.alpha, sc.beta)) {
        throw PointOutsideDomain("point " + to_string(point) + " outside " + f.domain().describe());
    }
    const Quaternion I = sc.unit ? sc.unit->value() : Quaternion::i();
    const Complex s = vector_square(vector_part(f.stem(sc.alpha, sc.beta)));
    const auto [mu, nu] = mu_nu(s);
    return {in_slice(mu, I), in_slice(nu, I), in_slice(s, I)};
}

Quaternion exp_star_four_case(const SliceFunction& f, const Quaternion& point, double tol) {
    const SphereCoords sc = sphere_coords(point);
    const Quaternion I = sc.unit ? sc.unit->value() : Quaternion::i();
    const SliceFunction fv = vector_part(f);
    const Complex f0 = from_slice(evaluate(scalar_part(f), point), I);
    const Quaternion v = evaluate(fv, point);
    const Complex s = from_slice(evaluate(symmetrized(fv), point), I);

    Quaternion bracket;
    if (std::abs(s) <= tol) {
        bracket = 1.0 + v;
    } else if (std::abs(s.imag()) <= tol && s.real() > 0.0) {
        const double x0 = std::sqrt(s.real());
        bracket = std::cos(x0) + (std::sin(x0) / x0) * v;
    } else if (std::abs(s.imag()) <= tol) {
        const double x0 = std::sqrt(-s.real());
        bracket = std::cosh(x0) + (std::sinh(x0) / x0) * v;
    } else {
        const Complex w = std::sqrt(s);
        bracket = in_slice(std::cos(w), I) + in_slice(std::sin(w) / w, I) * v;
    }
    return in_slice(std::exp(f0), I) * bracket;
}

SliceFunction exp_star_sqrtform(const SliceFunction& f, const Tolerances& tol) {
    if (!f.polynomial()) {
        throw DomainError("the square-root form is available for polynomials only");
    }
    const SliceFunction fv = vector_part(f);
    const RealPolynomial h = symmetrized_real(fv, tol);
    if (h.is_zero()) {
        throw NoGlobalSquareRoot("f_v^s vanishes identically");
    }
    const SqrtCheck check = has_sqrt(h, tol);
    if (!check.ok) {
        throw NoGlobalSquareRoot("no global square root of f_v^s: " + check.reason);
    }
    const RealPolynomial root = sqrt(h, tol);
    return SliceFunction::from_stem(f.domain(), [f, root](double a, double b) {
        const StemValue F = f.stem(a, b);
        const Complex r = root.evaluate(Complex(a, b));
        return std::exp(scalar_part(F)) * (StemValue::scalar(std::cos(r)) + sinc(r) * vector_part(F));
    });
}

std::optional<Complex> constant_value(const SliceFunction& h, const GridSpec& grid, double tol) {
    if (const auto* p = h.polynomial()) {
        for (std::size_t n = 1; n < p->coeffs().size(); ++n)
            if (norm(p->coeffs()[n]) > tol) return std::nullopt;
        return Complex((*p)[0].w, 0.0);
    }
    std::vector<Complex> values;
    for (const auto& pt : grid_points(h.domain(), grid)) {
        values.push_back(scalar_part(h.stem(pt.alpha, pt.beta)));
    }
    if (values.empty()) return std::nullopt;
    Complex mean = 0.0;
    for (const auto& v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const auto& v : values) var += std::norm(v - mean);
    var /= static_cast<double>(values.size());
    if (var > tol * tol) return std::nullopt;
    return mean;
}

std::optional<int> pythagorean_index(Complex s, double tol) {
    if (std::abs(s.imag()) > tol || s.real() <= 0.0) return std::nullopt;
    const int n = static_cast<int>(std::lround(std::sqrt(s.real()) / pi));
    if (n == 0 || std::abs(s.real() - n * n * pi * pi) > tol) return std::nullopt;
    return n;
}

ExpClassification classify_exp(const SliceFunction& f, const GridSpec& grid, double tol) {
    ExpClassification out;
    const SliceFunction fv = vector_part(f);
    if (is_identically_zero(fv, grid, tol)) {
        out.kind = ExpClassification::Kind::SlicePreserving;
        return out;
    }
    if (const auto s = constant_value(symmetrized(fv), grid, tol)) {
        if (const auto n = pythagorean_index(*s, tol)) {
            out.kind = ExpClassification::Kind::SlicePreserving;
            out.n = n;
            return out;
        }
    }
    if (const auto J = dominant_direction(fv, grid, tol); J && is_cj_preserving(fv, *J, grid, tol)) {
        out.kind = ExpClassification::Kind::CJPreserving;
        out.J = J;
        return out;
    }
    out.kind = ExpClassification::Kind::Generic;
    return out;
}

SliceFunction exp_product_closed(const SliceFunction& f, const SliceFunction& g) {
    return SliceFunction::from_stem(f.domain().intersect(g.domain()), [f, g](double a, double b) {
        const StemValue F = f.stem(a, b);
        const StemValue G = g.stem(a, b);
        const StemValue Fv = vector_part(F);
        const StemValue Gv = vector_part(G);
        const auto [mf, nf] = mu_nu(vector_square(Fv));
        const auto [mg, ng] = mu_nu(vector_square(Gv));
        const StemValue FG = stem_mul(Fv, Gv);
        const Complex inner = -scalar_part(FG);
        const StemValue wedge = (FG - stem_mul(Gv, Fv)) * 0.5;
        const StemValue bracket =
            StemValue::scalar(mf * mg - nf * ng * inner) + (nf * ng) * wedge + (mf * ng) * Gv + (mg * nf) * Fv;
        return std::exp(scalar_part(F) + scalar_part(G)) * bracket;
    });
}

double IdentityReport::max_residual() const {
    return std::max({symmetrized, even_part, odd_part, inverse, conjugation, real_axis_modulus});
}

bool IdentityReport::passed(double tol) const {
    return max_residual() <= tol * std::max(1.0, scale) && min_modulus > 0.0;
}

IdentityReport verify_exp_identities(const SliceFunction& f, const GridSpec& grid, double tol) {
    (void)tol;
    IdentityReport r;
    const SliceFunction E = exp_star_closed(f);
    const SliceFunction Ec = exp_star_closed(conjugate_fn(f));
    const SliceFunction f0 = scalar_part(f);
    const SliceFunction fv = vector_part(f);
    const SliceFunction e0 = exp_star_closed(f0);

    r.symmetrized = sup_distance(symmetrized(E), exp_star_closed(f0 * 2.0), grid);
    r.even_part = sup_distance((E + Ec) * 0.5, star_product(e0, mu_fn(f)), grid);
    r.odd_part = sup_distance((E - Ec) * 0.5, star_product(star_product(e0, nu_fn(f)), fv), grid);
    r.inverse = sup_distance(star_product(E, exp_star_closed(-f)), SliceFunction::constant(1.0), grid);
    r.conjugation = sup_distance(Ec, conjugate_fn(E), grid);
    r.scale = sup_norm(E, grid);

    const double s3 = 1.0 / std::sqrt(3.0);
    const std::array<Quaternion, 7> units{Quaternion::i(), Quaternion::j(), Quaternion::k(), -Quaternion::i(),
                                          -Quaternion::j(), -Quaternion::k(), Quaternion(0.0, s3, s3, s3)};
    r.min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& pt : grid_points(f.domain(), grid)) {
        const StemValue F = E.stem(pt.alpha, pt.beta);
        for (const auto& I : units) r.min_modulus = std::min(r.min_modulus, norm(induce(F, I)));
        if (pt.beta == 0.0) {
            const double lhs = norm2(F.p);
            const double rhs = std::exp(2.0 * f0.stem(pt.alpha, 0.0).p.w);
            r.real_axis_modulus = std::max(r.real_axis_modulus, std::abs(lhs - rhs));
        }
    }
    return r;
}

SumRuleReport sum_rule(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol) {
    SumRuleReport r;
    r.necessity_applies = f.domain().intersect(g.domain()).contains_real();
    r.commutation = commutes(f, g, grid, tol);

    const SliceFunction fv = vector_part(f);
    const SliceFunction gv = vector_part(g);
    const auto sf = constant_value(symmetrized(fv), grid, tol);
    const auto sg = constant_value(symmetrized(gv), grid, tol);
    const auto sfg = constant_value(symmetrized(fv + gv), grid, tol);
    if (const auto inner = constant_value(star_scalar(fv, gv), grid, tol)) {
        r.inner = inner->real();
    }
    if (sf) r.n = pythagorean_index(*sf, tol);
    if (sg) r.m = pythagorean_index(*sg, tol);
    if (sfg) r.p = pythagorean_index(*sfg, tol);

    if (r.commutation.commutes) {
        r.rule_case = SumRuleCase::LinearDependent;
        r.predicted_equal = true;
    } else if (r.n && r.m && r.p) {
        r.parity_ok = (*r.n + *r.m - *r.p) % 2 == 0;
        r.rule_case = *r.parity_ok ? SumRuleCase::Pythagorean : SumRuleCase::Fails;
        r.predicted_equal = *r.parity_ok;
    } else {
        r.rule_case = SumRuleCase::Fails;
        r.predicted_equal = false;
    }

    const SliceFunction lhs = exp_star_closed(f + g);
    const SliceFunction rhs = star_product(exp_star_closed(f), exp_star_closed(g));
    r.numeric_residual = sup_distance(lhs, rhs, grid);
    r.scale = std::max(1.0, sup_norm(rhs, grid));
    r.measured_equal = r.numeric_residual <= tol * r.scale;
    // without real points a failed prediction is only "not guaranteed"
    r.consistent = r.predicted_equal == r.measured_equal || (!r.necessity_applies && !r.predicted_equal);
    return r;
}

const char* to_string(SumRuleCase c) {
    switch (c) {
        case SumRuleCase::LinearDependent: return "linear-dependent";
        case SumRuleCase::Pythagorean: return "pythagorean";
        case SumRuleCase::Fails: return "fails";
    }
    return "?";
}

const char* to_string(ExpClassification::Kind k) {
    switch (k) {
        case ExpClassification::Kind::SlicePreserving: return "slice-preserving";
        case ExpClassification::Kind::CJPreserving: return "CJ-preserving";
        case ExpClassification::Kind::Generic: return "generic";
    }
    return "?";
}

}  // namespace slicereg
