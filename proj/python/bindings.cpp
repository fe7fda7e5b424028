#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slicereg/cli.hpp"
#include "slicereg/expr.hpp"
#include "slicereg/intrinsic.hpp"
#include "slicereg/sqrt.hpp"
#include "slicereg/starexp.hpp"

namespace py = pybind11;
using namespace slicereg;

namespace {

py::dict structure_dict(const ZeroStructure& zs) {
    py::list roots;
    for (const auto& r : zs.real_roots) roots.append(py::make_tuple(r.r, r.k));
    py::list spheres;
    for (const auto& s : zs.spheres) spheres.append(py::make_tuple(s.a, s.b, s.m));
    py::dict d;
    d["leading"] = zs.leading;
    d["real_roots"] = roots;
    d["spheres"] = spheres;
    return d;
}

py::dict identity_dict(const IdentityReport& r, double tol) {
    py::dict d;
    d["symmetrized"] = r.symmetrized;
    d["even_part"] = r.even_part;
    d["odd_part"] = r.odd_part;
    d["inverse"] = r.inverse;
    d["conjugation"] = r.conjugation;
    d["real_axis_modulus"] = r.real_axis_modulus;
    d["min_modulus"] = r.min_modulus;
    d["scale"] = r.scale;
    d["passed"] = r.passed(tol);
    return d;
}

py::dict sum_rule_dict(const SumRuleReport& r) {
    py::dict d;
    d["case"] = to_string(r.rule_case);
    d["n"] = r.n;
    d["m"] = r.m;
    d["p"] = r.p;
    d["inner"] = r.inner;
    d["parity_ok"] = r.parity_ok;
    d["commutes"] = r.commutation.commutes;
    d["predicted_equal"] = r.predicted_equal;
    d["measured_equal"] = r.measured_equal;
    d["numeric_residual"] = r.numeric_residual;
    d["necessity_applies"] = r.necessity_applies;
    d["consistent"] = r.consistent;
    return d;
}

GridSpec make_grid(int n_alpha, int n_beta, std::optional<std::uint64_t> seed) {
    GridSpec g{n_alpha, n_beta, seed};
    g.validate();
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Slice functions over the quaternions: star products, star exponentials, square roots";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<PointOutsideDomain>(m, "PointOutsideDomain", error.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
    py::register_exception<NoGlobalSquareRoot>(m, "NoGlobalSquareRoot", error.ptr());
    py::register_exception<InputError>(m, "InputError", error.ptr());

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double>())
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def_static("i", &Quaternion::i)
        .def_static("j", &Quaternion::j)
        .def_static("k", &Quaternion::k)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("conj", [](const Quaternion& q) { return conj(q); })
        .def("norm", [](const Quaternion& q) { return norm(q); })
        .def("inv", [](const Quaternion& q) { return inv(q); })
        .def("tuple", [](const Quaternion& q) { return py::make_tuple(q.w, q.x, q.y, q.z); })
        .def("__repr__", [](const Quaternion& q) { return "Quaternion(" + to_string(q) + ")"; });
    py::implicitly_convertible<double, Quaternion>();
    py::implicitly_convertible<int, Quaternion>();

    py::class_<PlanarDomain>(m, "PlanarDomain")
        .def_static("whole_plane", &PlanarDomain::whole_plane)
        .def_static("rectangle", &PlanarDomain::rectangle, py::arg("alpha_min"), py::arg("alpha_max"), py::arg("beta_max"))
        .def_static("slit", [] { return PlanarDomain::plane_minus_real_axis(); })
        .def_static("parse", &parse_domain)
        .def("contains", &PlanarDomain::contains)
        .def_property_readonly("contains_real", &PlanarDomain::contains_real)
        .def("__repr__", &PlanarDomain::describe);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init(&make_grid), py::arg("n_alpha") = 21, py::arg("n_beta") = 21, py::arg("seed") = std::nullopt)
        .def_readonly("n_alpha", &GridSpec::n_alpha)
        .def_readonly("n_beta", &GridSpec::n_beta);

    py::class_<SliceFunction>(m, "SliceFunction")
        .def_static("polynomial",
                    [](const std::vector<Quaternion>& c) { return SliceFunction::polynomial(QuaternionPolynomial(c)); })
        .def_static("constant", &SliceFunction::constant)
        .def_static("identity", &SliceFunction::identity)
        .def_static("parse", [](const std::string& text) { return parse_expression(nlohmann::json::parse(text)); })
        .def_property_readonly("is_polynomial", [](const SliceFunction& f) { return f.polynomial() != nullptr; })
        .def_property_readonly("coeffs",
                               [](const SliceFunction& f) -> std::optional<std::vector<Quaternion>> {
                                   if (!f.polynomial()) return std::nullopt;
                                   return f.polynomial()->coeffs();
                               })
        .def_property_readonly("domain", &SliceFunction::domain)
        .def("restricted_to", &SliceFunction::restricted_to)
        .def("stem",
             [](const SliceFunction& f, double a, double b) {
                 const StemValue v = f.stem(a, b);
                 return py::make_tuple(v.p, v.q);
             })
        .def("__call__", [](const SliceFunction& f, const Quaternion& q) { return evaluate(f, q); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const SliceFunction& f, const Quaternion& a) { return f * a; })
        .def("star", &star_product)
        .def("conj", &conjugate_fn)
        .def("scalar_part", [](const SliceFunction& f) { return scalar_part(f); })
        .def("vector_part", [](const SliceFunction& f) { return vector_part(f); })
        .def("symmetrized", &symmetrized);

    m.def("builtin", &builtin, py::arg("name"), py::arg("premul") = Quaternion(1.0));
    m.def("tau", &tau);
    m.def("star_product", &star_product);
    m.def("star_product_sv", &star_product_sv);
    m.def("sup_norm", &sup_norm, py::arg("f"), py::arg("grid") = GridSpec{});
    m.def("sup_distance", &sup_distance, py::arg("f"), py::arg("g"), py::arg("grid") = GridSpec{});
    m.def(
        "representation_check",
        [](const SliceFunction& f, double a, double b, const Quaternion& I, const Quaternion& J) {
            return representation_check(f, a, b, ImaginaryUnit(I), ImaginaryUnit(J));
        },
        py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("I"), py::arg("J"));
    m.def(
        "commutes",
        [](const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol) {
            return commutes(f, g, grid, tol).commutes;
        },
        py::arg("f"), py::arg("g"), py::arg("grid") = GridSpec{}, py::arg("tol") = 1e-9);

    m.def("exp_star", &exp_star_closed);
    m.def("cos_star", &cos_star_closed);
    m.def("sin_star", &sin_star_closed);
    m.def("exp_star_series", &exp_star_series, py::arg("f"), py::arg("tol") = 1e-12, py::arg("grid") = GridSpec{});
    m.def("series_truncation", &series_truncation, py::arg("sup_bound"), py::arg("tol"));
    m.def(
        "classify_exp",
        [](const SliceFunction& f, const GridSpec& grid, double tol) {
            const ExpClassification c = classify_exp(f, grid, tol);
            py::dict d;
            d["kind"] = to_string(c.kind);
            d["J"] = c.J ? std::optional<Quaternion>(c.J->value()) : std::nullopt;
            d["n"] = c.n;
            return d;
        },
        py::arg("f"), py::arg("grid") = GridSpec{}, py::arg("tol") = 1e-9);
    m.def(
        "verify_exp_identities",
        [](const SliceFunction& f, const GridSpec& grid, double tol) {
            return identity_dict(verify_exp_identities(f, grid, tol), tol);
        },
        py::arg("f"), py::arg("grid") = GridSpec{}, py::arg("tol") = 1e-9);
    m.def(
        "sum_rule",
        [](const SliceFunction& f, const SliceFunction& g, const GridSpec& grid, double tol) {
            return sum_rule_dict(sum_rule(f, g, grid, tol));
        },
        py::arg("f"), py::arg("g"), py::arg("grid") = GridSpec{}, py::arg("tol") = 1e-9);

    m.def("find_roots", [](const std::vector<double>& c) {
        std::vector<std::pair<Complex, int>> out;
        for (const auto& r : find_roots(RealPolynomial(c))) out.emplace_back(r.value, r.multiplicity);
        return out;
    });
    m.def("zero_structure", [](const std::vector<double>& c) { return structure_dict(zero_structure(RealPolynomial(c))); });
    m.def("has_sqrt", [](const std::vector<double>& c) {
        const SqrtCheck s = has_sqrt(RealPolynomial(c));
        return py::make_tuple(s.ok, s.reason);
    });
    m.def("sqrt", [](const std::vector<double>& c) { return sqrt(RealPolynomial(c)).coeffs(); });

    m.def("run_job", [](const std::string& text) {
        const JobResult r = run_json(text);
        return py::make_tuple(r.exit_code, r.report.dump());
    });
}
