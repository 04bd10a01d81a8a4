import cmath
import math

import pytest

import pentablock as pb


def test_reference_classifications():
    assert pb.classify((0, 0, 0))["verdict"] == "Interior"
    assert pb.classify((1, 0, 0))["verdict"] == "SmoothBoundary"
    flat = pb.classify((0.3, 1, 0))
    assert flat["verdict"] == "LeviFlatBoundary"
    assert flat["base"]["verdict"] == "Boundary"
    assert pb.g2_classify((2, 1))["verdict"] == "RoyalBoundary"


def test_fibre_radius_two_ways():
    for l1, l2 in [(0.5, 0), (0.3 + 0.4j, -0.2j), (0.9, -0.9)]:
        s, p = pb.sigma(l1, l2)
        expected = 0.5 * abs(1 - l1 * l2.conjugate()) + 0.5 * math.sqrt(
            (1 - abs(l1) ** 2) * (1 - abs(l2) ** 2)
        )
        assert pb.radius_via_parametrization(l1, l2) == pytest.approx(expected, abs=1e-15)
        assert math.exp(-pb.u_potential((s, p)) / 2) == pytest.approx(expected, abs=1e-12)


def test_automorphism_round_trip():
    f = pb.Automorphism(omega=1j, eta=cmath.exp(0.3j), alpha=0.2 - 0.1j)
    x = (0.1 + 0.05j, 0.3, 0.02j)
    y = f.inverse()(f(x))
    assert all(abs(u - v) < 1e-12 for u, v in zip(x, y))
    assert pb.Automorphism(alpha=0.5)((0, 0, 0)) == pytest.approx((0, -1, 0.25))
    g = f.compose(pb.Automorphism.parse("alpha=0.5"))
    assert abs(g.omega) == pytest.approx(1.0)


def test_errors_carry_a_kind():
    with pytest.raises(pb.PentablockError) as info:
        pb.Automorphism(alpha=0.5)((2, 0, 0))
    assert info.value.kind == "ExteriorInput"
    with pytest.raises(pb.PentablockError) as info:
        pb.parse_point("1,2x")
    assert info.value.kind == "Parse"
    with pytest.raises(ValueError):
        pb.minkowski((0, 0, 0))


def test_witness_and_gauge():
    w = pb.matrix_witness((0.3, 0.2, 0.01))
    assert w["norm"] < 1 and w["residual"] < 1e-9
    x = (0.25, 0.5, 0)
    m = pb.minkowski(x)
    assert pb.minkowski(pb.scale(x, 2.0)) == pytest.approx(2 * m, rel=1e-10)


def test_samples_and_suites():
    assert pb.levi_rank((1, 0, 0)) == 1
    assert pb.levi_flat_check((0.3, 1, 0)) < 1e-8
    for a, s, p in pb.sample("penta-d1", 20, seed=3):
        assert abs(abs(a) ** 2 - pb.fibre_bound((s, p))) < 1e-8
    assert pb.sample("royal", 5, seed=1) == pb.sample("royal", 5, seed=1)
    reports = pb.verify("all", samples=20, seed=2)
    assert [r["suite"] for r in reports] == pb.suite_names()
    assert all(r["passed"] for r in reports)
