#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "slicereg/intrinsic.hpp"
#include "slicereg/sqrt.hpp"
#include "slicereg/starexp.hpp"
#include "support.hpp"

using namespace slicereg;
using namespace slicereg::testing;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  %d. %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const GridSpec kGrid21{21, 21, std::nullopt};
const PlanarDomain kRandomDomain = PlanarDomain::rectangle(-0.5, 0.5, 0.5);

std::vector<SliceFunction> random_family(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SliceFunction> out;
    for (int t = 0; t < 50; ++t) out.push_back(SliceFunction::polynomial(random_polynomial(rng, 5, 2.0)).restricted_to(kRandomDomain));
    return out;
}

SliceFunction opaque(const SliceFunction& f) {
    return SliceFunction::from_stem(f.domain(), [f](double a, double b) { return f.stem(a, b); });
}

void criterion1() {
    const auto t0 = Clock::now();
    const SliceFunction e = exp_star_closed(constant_exponential_example().restricted_to(PlanarDomain::rectangle(-2, 2, 2)));
    double worst = 0.0;
    std::mt19937_64 rng(1);
    for (const auto& pt : grid_points(e.domain(), kGrid21)) {
        worst = std::max(worst, stem_norm(e.stem(pt.alpha, pt.beta) - StemValue::scalar(-1.0)));
        // boundary nodes can leave the rectangle after normalizing a random unit
        if (std::abs(pt.beta) < 2.0 && std::abs(pt.alpha) < 2.0) {
            const Quaternion q = pt.alpha + pt.beta * random_unit(rng).value();
            worst = std::max(worst, norm(evaluate(e, q) + 1.0));
        }
    }
    const double t = seconds_since(t0);
    report(1, "constant exponential exp_*(pi cos(q) i + pi sin(q) j) = -1", worst <= 1e-8 && t < 1.0,
           fmt("max |exp_*(f) + 1| = %.3g (tol 1e-8) over 21x21 grid on [-2,2]^2, %.3f s (limit 1 s)", worst, t));
}

void criterion2() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    int max_depth = 0;
    for (const auto& f : random_family(2)) {
        max_depth = std::max(max_depth, series_depth(f, 1e-12, kGrid21));
        worst = std::max(worst, sup_distance(exp_star_series(f, 1e-12, kGrid21), exp_star_closed(f), kGrid21));
    }
    const double t = seconds_since(t0);
    report(2, "dual-path agreement series vs closed form", worst <= 1e-8 && t < 30.0,
           fmt("50 polynomials deg<=5 |a_n|<=2 on [-0.5,0.5]^2: max sup residual %.3g (tol 1e-8), max depth N=%d, %.2f s",
               worst, max_depth, t));
}

void criterion3() {
    double worst = 0.0;
    double min_modulus = std::numeric_limits<double>::infinity();
    const char* worst_name = "none";
    for (const auto& f : random_family(2)) {
        const IdentityReport r = verify_exp_identities(f, kGrid21, 1e-8);
        const std::pair<const char*, double> parts[] = {{"eq1", r.symmetrized},     {"eq2", r.even_part},
                                                        {"eq3", r.odd_part},        {"eq4", r.inverse},
                                                        {"conjugation", r.conjugation}, {"real-axis modulus", r.real_axis_modulus}};
        for (const auto& [name, v] : parts) {
            if (v > worst) {
                worst = v;
                worst_name = name;
            }
        }
        min_modulus = std::min(min_modulus, r.min_modulus);
    }
    report(3, "exponential identities eq1-eq4, conjugation, never-vanishing", worst <= 1e-8 && min_modulus > 0.0,
           fmt("max residual %.3g (%s, tol 1e-8), grid min |exp_*(f)| = %.3g", worst, worst_name, min_modulus));
}

void criterion4() {
    const GridSpec grid = kGrid21;
    bool ok = true;
    std::ostringstream detail;

    {
        const auto [f, g] = constant_orthogonal_pair();
        const SumRuleReport r = sum_rule(f, g, grid, 1e-9);
        const SliceFunction target = -exp_star_closed(scalar_part(f) + scalar_part(g));
        const double lhs = sup_distance(exp_star_closed(f + g), target, grid);
        const double rhs = sup_distance(star_product(exp_star_closed(f), exp_star_closed(g)), target, grid);
        const bool pass = r.rule_case == SumRuleCase::Pythagorean && r.n == 3 && r.m == 4 && r.p == 5 &&
                          r.parity_ok == true && r.measured_equal && lhs <= 1e-8 && rhs <= 1e-8;
        ok = ok && pass;
        detail << fmt("orthogonal: case=%s n,m,p=%d,%d,%d |lhs+e|=%.2g |rhs+e|=%.2g; ", to_string(r.rule_case),
                      r.n.value_or(0), r.m.value_or(0), r.p.value_or(0), lhs, rhs);
    }
    {
        const auto [f, g] = constant_pair(-13.0 / 20.0);
        const SumRuleReport r = sum_rule(f, g, grid, 1e-9);
        const double expected = 2.0 * std::exp(0.1 + 0.25);
        const bool pass = r.rule_case == SumRuleCase::Fails && r.n == 2 && r.m == 5 && r.p == 4 &&
                          r.parity_ok == false && !r.measured_equal && std::abs(r.numeric_residual - expected) <= 1e-6;
        ok = ok && pass;
        detail << fmt("non-orthogonal: case=%s n,m,p=%d,%d,%d residual=%.9g vs 2|exp(f0+g0)|=%.9g; ",
                      to_string(r.rule_case), r.n.value_or(0), r.m.value_or(0), r.p.value_or(0), r.numeric_residual,
                      expected);
    }
    {
        const auto [f, g] = pythagorean_pair(3, 4, PlanarDomain::rectangle(-1.0, 1.0, 1.0));
        const SumRuleReport r = sum_rule(f, g, grid, 1e-9);
        const bool pass = r.rule_case == SumRuleCase::Pythagorean && !r.commutation.commutes && r.measured_equal &&
                          r.predicted_equal;
        ok = ok && pass;
        detail << fmt("non-constant (3,4,5) on [-1,1]^2: case=%s commutes=%s residual=%.2g; ", to_string(r.rule_case),
                      r.commutation.commutes ? "true" : "false", r.numeric_residual);
    }
    {
        const auto [f, g] = constant_non_real_pair();
        const SumRuleReport r = sum_rule(f, g, grid, 1e-9);
        const SliceFunction minus_one = SliceFunction::constant(-1.0);
        const double lhs = sup_distance(exp_star_closed(f + g), minus_one, grid);
        const double rhs = sup_distance(star_product(exp_star_closed(f), exp_star_closed(g)), minus_one, grid);
        const bool pass = lhs <= 1e-8 && rhs <= 1e-8 && r.measured_equal;
        ok = ok && pass;
        detail << fmt("non-real: |lhs+1|=%.2g |rhs+1|=%.2g", lhs, rhs);
    }
    report(4, "sum-rule examples", ok, detail.str());
}

void criterion5() {
    std::mt19937_64 rng(5);
    double worst = 0.0;
    bool all_commute = true;
    for (int t = 0; t < 25; ++t) {
        const SliceFunction h = SliceFunction::polynomial(random_polynomial(rng, 3, 2.0)).restricted_to(kRandomDomain);
        SliceFunction a = SliceFunction::polynomial(random_real_polynomial(rng, 3, 2.0));
        SliceFunction b = SliceFunction::polynomial(random_real_polynomial(rng, 3, 2.0));
        if (t % 2 == 1) a = star_product(a, builtin("sin"));
        if (t % 3 == 1) b = star_product(b, builtin("exp"));
        const SliceFunction f = star_product(a, vector_part(h)) + SliceFunction::constant(random_quaternion(rng, 1.0).w);
        const SliceFunction g = star_product(b, vector_part(h)) + SliceFunction::constant(random_quaternion(rng, 1.0).w);
        const SumRuleReport r = sum_rule(f, g, kGrid21, 1e-9);
        all_commute = all_commute && r.commutation.commutes;
        worst = std::max(worst, r.numeric_residual);
    }
    report(5, "linear dependence implies the sum rule", worst <= 1e-8 && all_commute,
           fmt("25 pairs on [-0.5,0.5]^2: max residual %.3g (tol 1e-8), all commute: %s", worst,
               all_commute ? "yes" : "no"));
}

void criterion6() {
    std::mt19937_64 rng(6);
    const GridSpec grid = kGrid21;
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const SliceFunction f = SliceFunction::polynomial(random_polynomial(rng, 5, 2.0));
        const SliceFunction g = SliceFunction::polynomial(random_polynomial(rng, 5, 2.0));
        const SliceFunction conv = star_product(f, g);
        const SliceFunction stem = star_product(opaque(f), opaque(g));
        const SliceFunction sv = star_product_sv(f, g);
        const double scale = std::max(1.0, sup_norm(conv, grid));
        worst = std::max({worst, sup_distance(sv, stem, grid) / scale, sup_distance(sv, conv, grid) / scale,
                          sup_distance(stem, conv, grid) / scale});
    }
    const QuaternionPolynomial p = star(QuaternionPolynomial({Quaternion::i(), 1.0}), QuaternionPolynomial({-Quaternion::i(), 1.0}));
    double exact = std::abs(p.degree() - 2) * 1.0;
    const Quaternion expected[] = {1.0, 0.0, 1.0};
    for (int n = 0; n <= 2; ++n) exact = std::max(exact, norm(p[static_cast<std::size_t>(n)] - expected[n]));
    report(6, "star-product cross-validation", worst <= 1e-10 && exact <= 1e-12,
           fmt("50 pairs deg<=5 on [-2,2]^2: max relative disagreement %.3g (tol 1e-10); (q+i)*(q-i) - (q^2+1) = %.3g "
               "(tol 1e-12)",
               worst, exact));
}

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;

RPoly rmul(const RPoly& a, const RPoly& b) {
    RPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

bool exact_square(const RPoly& h) {
    const int deg = static_cast<int>(h.size()) - 1;
    if (deg % 2 != 0 || h.back() < 0) return false;
    const std::size_t d = static_cast<std::size_t>(deg / 2);
    RPoly monic(h.size());
    for (std::size_t n = 0; n < h.size(); ++n) monic[n] = h[n] / h.back();
    RPoly f(d + 1, Rational(0));
    f[d] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        Rational known = 0;
        for (std::size_t i = d - k + 1; i <= d; ++i) {
            const std::size_t j = 2 * d - k - i;
            if (j > d - k && j <= d) known += f[i] * f[j];
        }
        f[d - k] = (monic[2 * d - k] - known) / 2;
    }
    return rmul(f, f) == monic;
}

void criterion7() {
    const auto t0 = Clock::now();
    const SqrtCheck a = has_sqrt(RealPolynomial({1, 0, 1}));
    const bool reason_ok = !a.ok && a.reason.find("spherical multiplicity 2") != std::string::npos;

    const RealPolynomial s = sqrt(pow(RealPolynomial({1, 0, 1}), 2));
    const double sq_err = (s - RealPolynomial({1, 0, 1})).max_abs_coeff();

    std::vector<RPoly> factors;
    for (int r : {-1, 0, 1, 2}) factors.push_back({Rational(-r), Rational(1)});
    factors.push_back({Rational(1), Rational(0), Rational(1)});
    factors.push_back({Rational(2), Rational(-2), Rational(1)});
    std::vector<RPoly> family;
    auto rec = [&](auto&& self, std::size_t start, const RPoly& acc, int deg) -> void {
        if (deg > 0) {
            family.push_back(acc);
            RPoly neg = acc;
            for (auto& c : neg) c = -c;
            family.push_back(neg);
        }
        for (std::size_t i = start; i < factors.size(); ++i) {
            const int d = static_cast<int>(factors[i].size()) - 1;
            if (deg + d <= 4) self(self, i, rmul(acc, factors[i]), deg + d);
        }
    };
    rec(rec, 0, RPoly{Rational(1)}, 0);

    int agree = 0;
    int squares = 0;
    for (const auto& p : family) {
        std::vector<double> c;
        for (const auto& x : p) c.push_back(static_cast<double>(x));
        const bool expected = exact_square(p);
        squares += expected;
        try {
            if (has_sqrt(RealPolynomial(c)).ok == expected) ++agree;
        } catch (const Error&) {
        }
    }
    const double t = seconds_since(t0);
    const bool pass = reason_ok && sq_err <= 1e-8 && agree == static_cast<int>(family.size()) && family.size() >= 200 && t < 10.0;
    report(7, "square-root suite", pass,
           fmt("has_sqrt(q^2+1)=%s reason \"%s\"; |sqrt((q^2+1)^2) - (q^2+1)| = %.2g; exact oracle agrees on %d/%zu "
               "(%d squares); %.2f s",
               a.ok ? "true" : "false", a.reason.c_str(), sq_err, agree, family.size(), squares, t));
}

void criterion8() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        SliceFunction f = SliceFunction::polynomial(random_polynomial(rng, 5, 2.0));
        if (t % 4 == 1) f = star_product(builtin("cos", random_quaternion(rng, 1.0)), f);
        if (t % 4 == 2) f = exp_star_closed(f.restricted_to(kRandomDomain)) ;
        const Bounds b = f.domain().bounding_box();
        std::uniform_real_distribution<double> ua(b.alpha_min, b.alpha_max);
        std::uniform_real_distribution<double> ub(-b.beta_max, b.beta_max);
        const double alpha = t % 4 == 2 ? ua(rng) : u(rng);
        const double beta = t % 4 == 2 ? ub(rng) : u(rng);
        worst = std::max(worst, representation_check(f, alpha, beta, random_unit(rng), random_unit(rng)));
    }
    report(8, "representation formula", worst <= 1e-9, fmt("100 random (f, point, I, J): max residual %.3g (tol 1e-9)", worst));
}

void criterion9() {
    const GridSpec grid = kGrid21;
    const ExpClassification a = classify_exp(constant_exponential_example(), grid, 1e-9);
    const ExpClassification b = classify_exp(SliceFunction::polynomial(QuaternionPolynomial({0.0, Quaternion::j()})), grid, 1e-9);
    const ExpClassification c =
        classify_exp(SliceFunction::polynomial(QuaternionPolynomial({Quaternion::i(), Quaternion::j()})), grid, 1e-9);
    const bool b_ok = b.kind == ExpClassification::Kind::CJPreserving && b.J && norm(b.J->value() - Quaternion::j()) < 1e-12;
    const bool pass = a.kind == ExpClassification::Kind::SlicePreserving && b_ok && c.kind == ExpClassification::Kind::Generic;
    report(9, "classification", pass,
           fmt("pi cos(q) i + pi sin(q) j -> %s; q j -> %s(%s); i + q j -> %s", to_string(a.kind), to_string(b.kind),
               b.J ? to_string(b.J->value()).c_str() : "-", to_string(c.kind)));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
