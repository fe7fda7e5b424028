import math

import pytest

import slicereg as sr


def test_quaternion_arithmetic():
    i, j, k = sr.Quaternion.i(), sr.Quaternion.j(), sr.Quaternion.k()
    assert i * j == k
    assert (i * i).tuple() == (-1.0, 0.0, 0.0, 0.0)
    assert sr.Quaternion(1, 2, 3, 4).conj().tuple() == (1.0, -2.0, -3.0, -4.0)


def test_star_product_of_linear_factors():
    f = sr.SliceFunction.polynomial([sr.Quaternion.i(), 1.0])
    g = sr.SliceFunction.polynomial([-sr.Quaternion.i(), 1.0])
    coeffs = [c.tuple() for c in f.star(g).coeffs]
    assert coeffs == [(1.0, 0.0, 0.0, 0.0), (0.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0)]


def test_constant_exponential_example():
    f = sr.builtin("cos", sr.Quaternion(0, math.pi, 0, 0)) + sr.builtin("sin", sr.Quaternion(0, 0, math.pi, 0))
    e = sr.exp_star(f)
    value = e(sr.Quaternion(0.3, 0.2, -0.5, 0.4))
    assert (value - sr.Quaternion(-1.0)).norm() < 1e-12
    assert sr.classify_exp(f)["kind"] == "slice-preserving"


def test_expression_and_identities():
    f = sr.parse({"op": "poly", "coeffs": [[0.1, 0.2, 0, 0], [0, 0, 0.3, 0.1]]})
    report = sr.verify_exp_identities(f, sr.GridSpec(9, 9))
    assert report["passed"]
    assert report["min_modulus"] > 0


def test_sum_rule_parity_failure():
    c = -13 / 20
    s = math.sqrt(1 - c * c)
    f = sr.SliceFunction.constant(sr.Quaternion(0.0, 2 * math.pi, 0, 0))
    g = sr.SliceFunction.constant(sr.Quaternion(0.0, 5 * math.pi * c, 5 * math.pi * s, 0))
    r = sr.sum_rule(f, g)
    assert r["case"] == "fails"
    assert (r["n"], r["m"], r["p"]) == (2, 5, 4)
    assert abs(r["numeric_residual"] - 2.0) < 1e-6


def test_square_roots():
    ok, reason = sr.has_sqrt([1, 0, 1])
    assert not ok and "spherical multiplicity 2" in reason
    root = sr.sqrt([1, 0, 2, 0, 1])
    assert root == pytest.approx([1, 0, 1], abs=1e-8)
    zs = sr.zero_structure([1, 0, 2, 0, 1])
    assert zs["spheres"][0][2] == 2


def test_errors_are_typed():
    with pytest.raises(sr.PointOutsideDomain):
        sr.tau()(sr.Quaternion(1.0))
    with pytest.raises(sr.DomainError):
        sr.sqrt([1, 0, 1])
    with pytest.raises(sr.InputError):
        sr.parse({"op": "nope"})


def test_run_job():
    code, report = sr.run({"command": "sqrt", "coeffs": [1, 0, 1]})
    assert code == 1
    assert report["results"][0]["has_sqrt"] is False
