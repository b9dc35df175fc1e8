from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from quadra.arith import QuadFieldElement
from quadra.bessel import bessel_leading, bessel_y
from quadra.curves import (
    CurvePoint,
    cd_kernel,
    curve_cdk_r2,
    curve_mt2,
    f_poly,
    mt2_candidate_check,
    nodes_from_point,
    pairwise_compatible,
    point_to_json,
    search_points,
)
from quadra.poly import BivariatePolynomial, Polynomial, derivative
from quadra.quadrature import construct_degree_r, first_failure, verify

I = QuadFieldElement(0, 1, -1)
P_Y = F(-264, 743)
P_W = F(377866, 552049) * I

EX32_NODES = [
    QuadFieldElement(P_Y, 0, -1),
    QuadFieldElement(F(-253754, 863405), F(188933, 863405), -1),
    QuadFieldElement(F(-253754, 863405), F(-188933, 863405), -1),
]
EX32_WEIGHTS = [
    QuadFieldElement(F(304758098401, 73863713379), 0, -1),
    QuadFieldElement(F(-115447192511, 73863713379), F(28870417761487643, 27910585919669214), -1),
    QuadFieldElement(F(-115447192511, 73863713379), F(-28870417761487643, 27910585919669214), -1),
]


def displayed_f2():
    # 3((15y^2+15y+5)x^2 + (15y^2+14y+4)x + (5y^2+4y+1))
    return BivariatePolynomial(
        [Polynomial([1, 4, 5]), Polynomial([4, 14, 15]), Polynomial([5, 15, 15])]
    ) * BivariatePolynomial([Polynomial([3])])


def test_f_examples():
    assert f_poly(2) == displayed_f2()
    assert f_poly(0) == BivariatePolynomial([Polynomial([1])])


def test_f2_on_diagonal():
    a, b = bessel_y(3), bessel_y(2)
    expected = derivative(a) * b - derivative(b) * a
    assert f_poly(2).diagonal() == expected


@pytest.mark.parametrize("l", range(7))
def test_f_symmetric_and_reconstructs(l):
    f = f_poly(l)
    assert f.swap() == f
    a, b = bessel_y(l + 1), bessel_y(l)
    num = BivariatePolynomial.outer(a, b) - BivariatePolynomial.outer(b, a)
    assert f * BivariatePolynomial.x_minus_y() == num


@pytest.mark.parametrize("l", range(6))
def test_christoffel_darboux(l):
    # K_l = (k_l / k_{l+1}) f_l, with k the leading coefficients of y
    ratio = F(bessel_leading(l), bessel_leading(l + 1))
    assert cd_kernel(l) == f_poly(l) * BivariatePolynomial([Polynomial([ratio])])


def test_pairwise_compatible():
    assert pairwise_compatible(EX32_NODES, 2)
    assert not pairwise_compatible([0, 1, 2], 2)
    assert f_poly(2)(0, 1) == 30


def test_compatibility_is_necessary():
    # two node Gauss-type formula: roots of phi_2 = z^2 + z + 1/3 lie in Q(sqrt(-3))
    z = QuadFieldElement(F(-1, 2), F(1, 6), -3)
    f = construct_degree_r([z, z.conj()])
    assert verify(f) == 3 and pairwise_compatible(f.nodes, 1)


def test_curve_membership():
    mt2 = curve_mt2()
    assert mt2.contains(F(-1, 2), 3)
    assert mt2.contains(F(-9, 10), F(19, 25))
    assert mt2.contains(1, 0) and mt2.contains(-1, 0)
    assert curve_cdk_r2().contains(P_Y, P_W)
    assert not curve_cdk_r2().contains(P_Y, -P_W + 1)


def test_example_32_pipeline():
    f = nodes_from_point(CurvePoint(P_Y, P_W))
    assert list(f.nodes) == EX32_NODES
    assert list(f.weights) == EX32_WEIGHTS
    assert verify(f) == 4
    j, defect = first_failure(f)
    assert j == 5 and defect == F(36492551, 28867946175)


def test_point_sign_permutes_nodes():
    plus = nodes_from_point(CurvePoint(P_Y, P_W))
    minus = nodes_from_point(CurvePoint(P_Y, -P_W))
    assert set(plus.nodes) == set(minus.nodes) and plus.nodes != minus.nodes
    assert dict(zip(plus.nodes, plus.weights)) == dict(zip(minus.nodes, minus.weights))


def test_nodes_from_point_rejects():
    with pytest.raises(ValueError):
        nodes_from_point(CurvePoint(QuadFieldElement(0, 1, -1), P_W))
    with pytest.raises(ValueError):
        nodes_from_point(CurvePoint(P_Y, P_W + 1))


def test_mt2_search():
    pts = search_points(curve_mt2(), 10)
    pairs = [(p.y, p.w) for p in pts]
    assert pairs == [(-1, 0), (1, 0), (F(-1, 2), 3), (F(-1, 2), -3), (F(-9, 10), F(19, 25)), (F(-9, 10), F(-19, 25))]
    assert [(p.y, p.w) for p in search_points(curve_mt2(), 100)] == pairs


def test_cdk_search_finds_example_point():
    pts = search_points(curve_cdk_r2(), 743, "gaussian")
    assert CurvePoint(P_Y, P_W) in pts and CurvePoint(P_Y, -P_W) in pts
    curve = curve_cdk_r2()
    for p in pts:
        assert curve.contains(p.y, p.w)
        if p.w:
            f = nodes_from_point(p)
            assert verify(f) == 4


def test_search_membership_small():
    for curve in (curve_mt2(), curve_cdk_r2()):
        for mode in ("rational", "gaussian"):
            for p in search_points(curve, 30, mode):
                assert curve.contains(p.y, p.w)
    assert search_points(curve_cdk_r2(), 50, "rational") == []
    with pytest.raises(ValueError):
        search_points(curve_mt2(), 0)


@given(st.integers(-40, 40), st.integers(1, 40))
def test_homogeneous_form(p, q):
    c = curve_cdk_r2()
    assert c.homogeneous(p, q) == c.rhs(F(p, q)) * q**4


def test_point_to_json():
    assert point_to_json(CurvePoint(P_Y, P_W)) == {"y": "-264/743", "w": {"a": "0", "b": "377866/552049"}}
    assert point_to_json(CurvePoint(F(-9, 10), F(19, 25))) == {"y": "-9/10", "w": "19/25"}


def test_curve_format():
    assert curve_cdk_r2().format() == "w^2 = -75*y^4 - 120*y^3 - 84*y^2 - 28*y - 4"
    assert curve_mt2().format() == "w^2 = -44*y^4 - 84*y^3 + y^2 + 84*y + 43"


def test_mt2_candidates():
    rep = mt2_candidate_check(1)
    assert rep.t_squared == 0 and rep.all_fail
    assert {b.u for b in rep.branches} >= {F(-9, 10)}
    bad = [b for b in rep.branches if b.u == F(-9, 10)][0]
    assert bad.fails_at == "v" and 1 - bad.u**2 == F(19, 100)
    rep = mt2_candidate_check(-1)
    bad = [b for b in rep.branches if b.u == F(-1, 2)][0]
    assert bad.fails_at == "v" and rep.all_fail
    rep = mt2_candidate_check(F(-1, 2))
    assert rep.discriminant == 9 and rep.t_squared == F(3, 4)
    assert all(b.fails_at == "t" and b.u is not None for b in rep.branches)
    # 106 + 224s + 120s^2 has negative discriminant, so only bad text can fail
    assert 224**2 - 4 * 120 * 106 < 0
    with pytest.raises(ValueError):
        mt2_candidate_check("x")
