#include "slicereg/intrinsic.hpp"

#include <array>

namespace slicereg {

namespace {

QuaternionPolynomial map_coeffs(const QuaternionPolynomial& p, Quaternion (*fn)(const Quaternion&)) {
    std::vector<Quaternion> c(p.coeffs());
    for (auto& a : c) a = fn(a);
    return QuaternionPolynomial(std::move(c));
}

SliceFunction map_stem(const SliceFunction& f, StemValue (*fn)(const StemValue&)) {
    return SliceFunction::from_stem(f.domain(), [f, fn](double a, double b) { return fn(f.stem(a, b)); });
}

Quaternion real_only(const Quaternion& a) { return {a.w, 0.0, 0.0, 0.0}; }
Quaternion vec_only(const Quaternion& a) { return vec(a); }
StemValue stem_conj(const StemValue& v) { return conj(v); }
StemValue stem_scalar(const StemValue& v) { return StemValue::scalar(scalar_part(v)); }
StemValue stem_vector(const StemValue& v) { return vector_part(v); }

double off_axis(const Quaternion& v, const Quaternion& J) { return norm(vec(v) - J * dot(v, J)); }

constexpr std::array<Quaternion, 3> kAxes{Quaternion::i(), Quaternion::j(), Quaternion::k()};

}  // namespace

SliceFunction Decomposition::reconstruct() const {
    return f0 + f1 * basis.I.value() + f2 * basis.J.value() + f3 * basis.K.value();
}

SliceFunction conjugate_fn(const SliceFunction& f) {
    if (const auto* p = f.polynomial()) {
        return SliceFunction::polynomial(conj(*p)).restricted_to(f.domain());
    }
    return map_stem(f, stem_conj);
}

SliceFunction scalar_part(const SliceFunction& f) {
    if (const auto* p = f.polynomial()) {
        return SliceFunction::polynomial(map_coeffs(*p, real_only)).restricted_to(f.domain());
    }
    return map_stem(f, stem_scalar);
}

SliceFunction vector_part(const SliceFunction& f) {
    if (const auto* p = f.polynomial()) {
        return SliceFunction::polynomial(map_coeffs(*p, vec_only)).restricted_to(f.domain());
    }
    return map_stem(f, stem_vector);
}

SliceFunction symmetrized(const SliceFunction& f) { return star_product(f, conjugate_fn(f)); }

SliceFunction star_scalar(const SliceFunction& f, const SliceFunction& g) {
    return scalar_part(star_product(f, conjugate_fn(g)));
}

SliceFunction star_wedge(const SliceFunction& f, const SliceFunction& g) {
    return (star_product(f, g) - star_product(g, f)) * 0.5;
}

SliceFunction component_fn(const SliceFunction& f, const Quaternion& u) {
    if (const auto* p = f.polynomial()) {
        return SliceFunction::polynomial(RealPolynomial::component_of(*p, u).to_quaternion())
            .restricted_to(f.domain());
    }
    return SliceFunction::from_stem(f.domain(),
                                    [f, u](double a, double b) { return StemValue::scalar(component(f.stem(a, b), u)); });
}

Decomposition decompose(const SliceFunction& f, const OrthonormalBasis& basis) {
    return {component_fn(f, 1.0), component_fn(f, basis.I.value()), component_fn(f, basis.J.value()),
            component_fn(f, basis.K.value()), basis};
}

SliceFunction star_product_sv(const SliceFunction& f, const SliceFunction& g) {
    return SliceFunction::from_stem(f.domain().intersect(g.domain()), [f, g](double a, double b) {
        const StemValue F = f.stem(a, b);
        const StemValue G = g.stem(a, b);
        const Complex f0 = scalar_part(F);
        const Complex g0 = scalar_part(G);
        std::array<Complex, 3> fv{};
        std::array<Complex, 3> gv{};
        for (std::size_t l = 0; l < 3; ++l) {
            fv[l] = component(F, kAxes[l]);
            gv[l] = component(G, kAxes[l]);
        }
        const Complex inner = fv[0] * gv[0] + fv[1] * gv[1] + fv[2] * gv[2];
        const std::array<Complex, 3> wedge{fv[1] * gv[2] - fv[2] * gv[1], fv[2] * gv[0] - fv[0] * gv[2],
                                           fv[0] * gv[1] - fv[1] * gv[0]};
        const Complex s = f0 * g0 - inner;
        std::array<Complex, 3> v{};
        for (std::size_t l = 0; l < 3; ++l) v[l] = f0 * gv[l] + g0 * fv[l] + wedge[l];
        return StemValue({s.real(), v[0].real(), v[1].real(), v[2].real()},
                         {s.imag(), v[0].imag(), v[1].imag(), v[2].imag()});
    });
}

CommutationResult commutes(const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol) {
    CommutationResult out;
    const SliceFunction wedge = star_wedge(f, g);
    out.wedge_sup = wedge.polynomial() ? wedge.polynomial()->max_coeff_norm() : sup_norm(wedge, grid);
    out.commutes = is_identically_zero(wedge, grid, tol);
    if (!out.commutes) {
        return out;
    }

    const SliceFunction fv = vector_part(f);
    if (is_identically_zero(fv, grid, tol)) {
        out.status = WitnessStatus::Provided;
        out.witness = DependenceWitness{RealPolynomial::constant(1.0), RealPolynomial{}};
        return out;
    }

    if (f.polynomial() && g.polynomial()) {
        // f_l g_v - g_l f_v = 0 for a component f_l that does not vanish
        std::size_t best = 0;
        std::array<RealPolynomial, 3> fl;
        std::array<RealPolynomial, 3> gl;
        for (std::size_t l = 0; l < 3; ++l) {
            fl[l] = RealPolynomial::component_of(*f.polynomial(), kAxes[l]).trimmed(tol);
            gl[l] = RealPolynomial::component_of(*g.polynomial(), kAxes[l]).trimmed(tol);
            if (fl[l].max_abs_coeff() > fl[best].max_abs_coeff()) best = l;
        }
        RealPolynomial alpha = -gl[best];
        RealPolynomial beta = fl[best];
        if (!alpha.is_zero()) {
            const RealPolynomial d = gcd(alpha, beta);
            if (d.degree() > 0) {
                alpha = divmod(alpha, d).first;
                beta = divmod(beta, d).first;
            }
        }
        out.status = WitnessStatus::Provided;
        out.witness = DependenceWitness{alpha, beta};
        return out;
    }

    if (!f.domain().intersect(g.domain()).contains_real() &&
        is_identically_zero(symmetrized(fv), grid, tol)) {
        out.status = WitnessStatus::Indeterminate;
        return out;
    }
    out.status = WitnessStatus::NotApplicable;
    return out;
}

bool is_slice_preserving(const SliceFunction& f, const GridSpec& grid, double tol) {
    if (const auto* p = f.polynomial()) {
        for (const auto& c : p->coeffs())
            if (norm(vec(c)) > tol) return false;
        return true;
    }
    for (const auto& pt : grid_points(f.domain(), grid)) {
        const StemValue F = f.stem(pt.alpha, pt.beta);
        if (norm(vec(F.p)) > tol || norm(vec(F.q)) > tol) return false;
    }
    return true;
}

bool is_cj_preserving(const SliceFunction& f, const ImaginaryUnit& J, const GridSpec& grid, double tol) {
    const Quaternion& u = J.value();
    if (const auto* p = f.polynomial()) {
        for (const auto& c : p->coeffs())
            if (off_axis(c, u) > tol) return false;
        return true;
    }
    for (const auto& pt : grid_points(f.domain(), grid)) {
        const StemValue F = f.stem(pt.alpha, pt.beta);
        if (off_axis(F.p, u) > tol || off_axis(F.q, u) > tol) return false;
    }
    return true;
}

}  // namespace slicereg
