#include "slicereg/slice_function.hpp"

#include <algorithm>
#include <cmath>

namespace slicereg {

namespace {

bool both_polynomial(const SliceFunction& f, const SliceFunction& g) {
    return f.polynomial() && g.polynomial();
}

SliceFunction combine(const SliceFunction& f, const SliceFunction& g,
                      StemValue (*op)(const StemValue&, const StemValue&)) {
    return SliceFunction::from_stem(f.domain().intersect(g.domain()),
                                    [f, g, op](double a, double b) { return op(f.stem(a, b), g.stem(a, b)); });
}

StemValue add(const StemValue& u, const StemValue& v) { return u + v; }
StemValue sub(const StemValue& u, const StemValue& v) { return u - v; }

}  // namespace

SliceFunction SliceFunction::polynomial(QuaternionPolynomial p) {
    auto poly = std::make_shared<const QuaternionPolynomial>(std::move(p));
    auto fn = std::make_shared<const StemFn>([poly](double a, double b) { return poly->stem(a, b); });
    return SliceFunction(PlanarDomain::whole_plane(), std::move(fn), Tag::Polynomial, std::move(poly));
}

SliceFunction SliceFunction::from_stem(PlanarDomain domain, StemFn stem, Tag tag) {
    if (tag == Tag::Polynomial) {
        throw DomainError("polynomial slice functions are built from coefficients");
    }
    return SliceFunction(std::move(domain), std::make_shared<const StemFn>(std::move(stem)), tag, nullptr);
}

StemValue SliceFunction::stem(double alpha, double beta) const {
    if (!domain_.contains(alpha, beta)) {
        throw PointOutsideDomain("point " + std::to_string(alpha) + (beta < 0 ? "-" : "+") +
                                 std::to_string(std::abs(beta)) + "ı outside " + domain_.describe());
    }
    if (beta < 0.0) {
        return stem_bar((*stem_)(alpha, -beta));
    }
    return (*stem_)(alpha, beta);
}

StemValue SliceFunction::stem_raw(double alpha, double beta) const { return (*stem_)(alpha, beta); }

SliceFunction SliceFunction::restricted_to(const PlanarDomain& d) const {
    SliceFunction r = *this;
    r.domain_ = domain_.intersect(d);
    return r;
}

Quaternion SliceFunction::operator()(const Quaternion& a) const { return evaluate(*this, a); }

Quaternion evaluate(const SliceFunction& f, const Quaternion& a) {
    const SphereCoords sc = sphere_coords(a);
    if (!f.domain().contains(sc.alpha, sc.beta)) {
        throw PointOutsideDomain("point " + to_string(a) + " outside " + f.domain().describe());
    }
    if (const auto* p = f.polynomial()) {
        return p->evaluate(a);
    }
    const StemValue F = f.stem(sc.alpha, sc.beta);
    if (!sc.unit) {
        return F.p;
    }
    return induce(F, *sc.unit);
}

SliceFunction operator+(const SliceFunction& f, const SliceFunction& g) {
    if (both_polynomial(f, g)) {
        return SliceFunction::polynomial(*f.polynomial() + *g.polynomial())
            .restricted_to(f.domain().intersect(g.domain()));
    }
    return combine(f, g, add);
}

SliceFunction operator-(const SliceFunction& f, const SliceFunction& g) {
    if (both_polynomial(f, g)) {
        return SliceFunction::polynomial(*f.polynomial() - *g.polynomial())
            .restricted_to(f.domain().intersect(g.domain()));
    }
    return combine(f, g, sub);
}

SliceFunction operator-(const SliceFunction& f) { return f * -1.0; }

SliceFunction operator*(const SliceFunction& f, const Quaternion& a) {
    if (const auto* p = f.polynomial()) {
        return SliceFunction::polynomial(*p * a).restricted_to(f.domain());
    }
    return SliceFunction::from_stem(f.domain(), [f, a](double x, double y) { return f.stem(x, y) * a; },
                                    f.tag());
}

SliceFunction operator*(const SliceFunction& f, double s) { return f * Quaternion(s); }

SliceFunction star_product(const SliceFunction& f, const SliceFunction& g) {
    if (both_polynomial(f, g)) {
        return SliceFunction::polynomial(star(*f.polynomial(), *g.polynomial()))
            .restricted_to(f.domain().intersect(g.domain()));
    }
    return combine(f, g, stem_mul);
}

namespace {

using ComplexFn = Complex (*)(const Complex&);

ComplexFn builtin_fn(const std::string& name) {
    if (name == "exp") return [](const Complex& z) { return std::exp(z); };
    if (name == "sin") return [](const Complex& z) { return std::sin(z); };
    if (name == "cos") return [](const Complex& z) { return std::cos(z); };
    throw DomainError("unknown builtin function '" + name + "'");
}

}  // namespace

SliceFunction builtin(const std::string& name, const Quaternion& premul) {
    const ComplexFn fn = builtin_fn(name);
    return SliceFunction::from_stem(
        PlanarDomain::whole_plane(),
        [fn, premul](double a, double b) {
            const Complex v = fn(Complex(a, b));
            return StemValue(v.real() * premul, v.imag() * premul);
        },
        SliceFunction::Tag::Elementary);
}

SliceFunction compose_builtin(const std::string& name, const SliceFunction& h, const Quaternion& premul) {
    const ComplexFn fn = builtin_fn(name);
    return SliceFunction::from_stem(h.domain(), [fn, h, premul](double a, double b) {
        const StemValue H = h.stem(a, b);
        if (norm(vec(H.p)) + norm(vec(H.q)) > kAlgebraicTol * (1.0 + stem_norm(H))) {
            throw DomainError("builtin composition needs a slice-preserving inner function");
        }
        const Complex v = fn(Complex(H.p.w, H.q.w));
        return StemValue(v.real() * premul, v.imag() * premul);
    });
}

SliceFunction tau() {
    return SliceFunction::from_stem(
        PlanarDomain::plane_minus_real_axis(),
        [](double, double b) { return StemValue(0.0, b > 0.0 ? 1.0 : -1.0); }, SliceFunction::Tag::Elementary);
}

double representation_check(const SliceFunction& f, double alpha, double beta, const ImaginaryUnit& I,
                            const ImaginaryUnit& J) {
    const Quaternion& i = I.value();
    const Quaternion& j = J.value();
    const Quaternion lhs = evaluate(f, alpha + beta * j);
    const Quaternion JI = j * i;
    const Quaternion rhs = (1.0 - JI) * 0.5 * evaluate(f, alpha + beta * i) +
                           (1.0 + JI) * 0.5 * evaluate(f, alpha - beta * i);
    return norm(lhs - rhs);
}

double sup_norm(const SliceFunction& f, const GridSpec& grid) {
    double m = 0.0;
    for (const auto& pt : grid_points(f.domain(), grid)) {
        m = std::max(m, stem_norm(f.stem(pt.alpha, pt.beta)));
    }
    return m;
}

double sup_distance(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid) {
    double m = 0.0;
    for (const auto& pt : grid_points(f.domain().intersect(g.domain()), grid)) {
        m = std::max(m, stem_norm(f.stem(pt.alpha, pt.beta) - g.stem(pt.alpha, pt.beta)));
    }
    return m;
}

bool is_identically_zero(const SliceFunction& f, const GridSpec& grid, double tol) {
    if (const auto* p = f.polynomial()) {
        return std::all_of(p->coeffs().begin(), p->coeffs().end(),
                           [tol](const Quaternion& c) { return norm(c) < tol; });
    }
    return sup_norm(f, grid) < tol;
}

}  // namespace slicereg
