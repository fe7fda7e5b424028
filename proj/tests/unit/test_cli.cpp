#include <gtest/gtest.h>

#include "slicereg/cli.hpp"
#include "slicereg/expr.hpp"
#include "support.hpp"

using namespace slicereg;
using nlohmann::json;

namespace {

JobResult run_doc(const json& j) { return run_json(j.dump()); }

json pi_vec(double i, double j, double k) {
    using slicereg::testing::kPi;
    return json::array({0.0, i * kPi, j * kPi, k * kPi});
}

}  // namespace

TEST(Expression, Grammar) {
    const SliceFunction f = parse_expression(json::parse(R"({"op": "poly", "coeffs": [[0,1,0,0], 1]})"));
    ASSERT_NE(f.polynomial(), nullptr);
    EXPECT_EQ(*f.polynomial(), QuaternionPolynomial({Quaternion::i(), 1.0}));

    const SliceFunction g = parse_expression(json::parse(
        R"({"op": "sum", "args": [{"op": "builtin", "name": "cos", "premul": [0,1,0,0]},
                                  {"op": "scale", "arg": {"op": "id"}, "by": [0,0,0,2]}]})"));
    const Quaternion q(0.5);
    EXPECT_LE(norm(evaluate(g, q) - (std::cos(0.5) * Quaternion::i() + Quaternion(0, 0, 0, 1))), 1e-15);

    const SliceFunction s = parse_expression(json::parse(R"({"op": "sym", "arg": {"op": "poly", "coeffs": [[0,1,0,0], 1]}})"));
    EXPECT_EQ(*s.polynomial(), QuaternionPolynomial({1.0, 0.0, 1.0}));

    const SliceFunction e = parse_expression(json::parse(R"({"op": "exp", "arg": [0, 3.141592653589793, 0, 0], "method": "series"})"));
    EXPECT_LE(norm(evaluate(e, 0.0) + 1.0), 1e-11);
    EXPECT_EQ(parse_expression(json(2.5)).polynomial()->degree(), 0);
}

TEST(Expression, Errors) {
    EXPECT_THROW(parse_expression(json::parse(R"({"op": "frobnicate"})")), InputError);
    EXPECT_THROW(parse_expression(json::parse(R"({"op": "poly"})")), InputError);
    EXPECT_THROW(parse_expression(json::parse(R"({"op": "builtin", "name": "tan"})")), InputError);
    EXPECT_THROW(parse_expression(json::parse(R"([1, 2])")), InputError);
    EXPECT_THROW(parse_expression(json::parse(R"({"op": "exp", "arg": 1, "method": "magic"})")), InputError);
    EXPECT_THROW(parse_domain("rect:1,0"), InputError);
    EXPECT_THROW(parse_domain("disk"), InputError);
    EXPECT_FALSE(parse_domain("slit").contains_real());
    EXPECT_TRUE(parse_domain("rect:-1,1,0.5").contains(0.9, -0.5));
}

TEST(Job, IdentitiesOnZero) {
    const JobResult r = run_doc({{"command", "identities"}, {"functions", {0}}});
    EXPECT_EQ(r.exit_code, 0);
    const auto& res = r.report["results"][0]["residuals"];
    for (const auto& [k, v] : res.items()) EXPECT_EQ(v.get<double>(), 0.0) << k;
}

TEST(Job, SumRuleParityFailure) {
    const double c = -13.0 / 20.0;
    const double s = std::sqrt(1.0 - c * c);
    const JobResult r = run_doc({{"command", "sum-rule"}, {"functions", {pi_vec(2, 0, 0), pi_vec(5 * c, 5 * s, 0)}}});
    EXPECT_EQ(r.exit_code, 0);
    const auto& res = r.report["results"][0];
    EXPECT_EQ(res["case"], "fails");
    EXPECT_EQ(res["measured_equal"], false);
    EXPECT_EQ(res["parity_ok"], false);
    EXPECT_EQ(res["p"], 4);
}

TEST(Job, SqrtWithoutRoot) {
    const JobResult r = run_doc({{"command", "sqrt"}, {"coeffs", {1, 0, 1}}});
    EXPECT_EQ(r.exit_code, 1);
    const auto& res = r.report["results"][0];
    EXPECT_EQ(res["has_sqrt"], false);
    EXPECT_NE(res["reason"].get<std::string>().find("spherical multiplicity 2"), std::string::npos);
}

TEST(Job, SqrtWithRoot) {
    const JobResult r = run_doc({{"command", "sqrt"}, {"coeffs", {1, 0, 2, 0, 1}}});
    EXPECT_EQ(r.exit_code, 0);
    const auto root = r.report["results"][0]["sqrt"].get<std::vector<double>>();
    ASSERT_EQ(root.size(), 3u);
    EXPECT_NEAR(root[0], 1.0, 1e-8);
    EXPECT_NEAR(root[2], 1.0, 1e-8);
}

TEST(Job, InputErrors) {
    EXPECT_EQ(run_json("{not json").exit_code, 2);
    EXPECT_EQ(run_doc({{"command", "launch"}, {"functions", {1}}}).exit_code, 2);
    EXPECT_EQ(run_doc({{"command", "eval"}, {"functions", {{{"op", "nope"}}}}}).exit_code, 2);
    EXPECT_EQ(run_doc({{"command", "eval"}, {"functions", {1}}, {"grid", {1, 5}}}).exit_code, 2);
    EXPECT_EQ(run_doc({{"command", "eval"}, {"functions", {1}}, {"tol", -1.0}}).exit_code, 2);
    const JobResult outside =
        run_doc({{"command", "eval"}, {"functions", {{{"op", "tau"}}}}, {"points", {1.0}}, {"domain", "slit"}});
    EXPECT_EQ(outside.exit_code, 2);
    EXPECT_TRUE(outside.report.contains("error"));
}

TEST(Job, EvalAndClassify) {
    const JobResult e = run_doc({{"command", "eval"}, {"functions", {{{"op", "id"}}}}, {"points", {{0, 1, 0, 0}}}});
    EXPECT_EQ(e.exit_code, 0);
    EXPECT_EQ(e.report["results"][0]["values"][0]["value"], json::array({0.0, 1.0, 0.0, 0.0}));
    const JobResult c = run_doc(
        {{"command", "classify"}, {"functions", {{{"op", "poly"}, {"coeffs", {0, {0, 0, 1, 0}}}}}}});
    EXPECT_EQ(c.report["results"][0]["kind"], "CJ-preserving");
}

TEST(Job, DeterministicWithSeed) {
    const json job{{"command", "identities"},
                   {"functions", {{{"op", "poly"}, {"coeffs", {{0.1, 0.2, 0, 0}, {0, 0, 0.3, 0.1}}}}}},
                   {"seed", 9},
                   {"grid", {5, 5}}};
    EXPECT_EQ(run_doc(job).report.dump(), run_doc(job).report.dump());
}

TEST(Report, RoundTrip) {
    for (const json& job : {json{{"command", "sqrt"}, {"coeffs", {1, 0, 1}}},
                            json{{"command", "exp"}, {"functions", {{{"op", "id"}}}}, {"points", {0.5}}},
                            json{{"command", "eval"}, {"functions", {{{"op", "bad"}}}}}}) {
        const JobResult r = run_doc(job);
        EXPECT_FALSE(check_report(r.report.dump()));
        EXPECT_FALSE(render_text(r.report).empty());
    }
    EXPECT_TRUE(check_report("[1, 2]"));
    EXPECT_TRUE(check_report(R"({"command": "x"})"));
    EXPECT_TRUE(check_report("{"));
}
