from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from quadra.arith import (
    INF,
    GaussianInt,
    QuadFieldElement,
    ValuationContext,
    format_rational,
    gcd_gaussian,
    is_square_in_field,
    is_square_rational,
    on_unit_circle,
    parse_gaussian,
    parse_rational,
    surd_text,
    valuation,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
small_ints = st.integers(-40, 40)
gaussians = st.builds(GaussianInt, small_ints, small_ints)
nonzero_gaussians = gaussians.filter(bool)


def quad(d):
    return st.builds(QuadFieldElement, rationals, rationals, st.just(d))


fields = st.sampled_from([-1, -3, -11])


# --- rationals -------------------------------------------------------------


def test_rational_examples():
    assert F(1, 2) + F(1, 3) == F(5, 6)
    zero = F(-2, 3) * 0
    assert (zero.numerator, zero.denominator) == (0, 1)
    # cross multiplication: (2/15) / (2/3) = (2*3)/(15*2)
    assert F(2, 15) / F(2, 3) == F(2 * 3, 15 * 2) == F(1, 5)
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)


@pytest.mark.parametrize(
    "text, value",
    [("5", F(5)), ("-264/743", F(-264, 743)), ("−9/10", F(-9, 10)), ("6/4", F(3, 2)), (" 0/7 ", F(0))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "1/-2", "--1", "a/b", "1e3", "+-1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q
    assert format_rational(parse_rational(format_rational(q))) == format_rational(q)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) - b == a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_is_square_rational():
    assert is_square_rational(F(9, 4)) == F(3, 2)
    assert is_square_rational(F(19, 100)) is None
    assert is_square_rational(F(361, 625)) == F(19, 25)
    assert is_square_rational(F(-4)) is None
    assert is_square_rational(0) == 0


@given(rationals)
def test_is_square_rational_on_squares(q):
    assert is_square_rational(q * q) == abs(q)


def test_surd_text():
    assert surd_text(F(11, 36)) == "sqrt(11)/6"
    assert surd_text(F(11, 108)) == "sqrt(33)/18"
    assert surd_text(F(12)) == "2*sqrt(3)"
    assert surd_text(F(9, 4)) == "3/2"


# --- quadratic fields ------------------------------------------------------


def test_is_square_in_field():
    assert is_square_in_field(-4, -1) == QuadFieldElement(0, 2, -1)
    assert is_square_in_field(3, -1) is None
    # R(-264/743) on the degree-4 compatibility curve; 743**4 = 304758098401
    q = F(-142782713956, 304758098401)
    assert 743**4 == 304758098401
    w = is_square_in_field(q, -1)
    assert w == QuadFieldElement(0, F(377866, 552049), -1)
    assert w * w == q
    assert is_square_in_field(F(-11, 36), -11) == QuadFieldElement(0, F(1, 6), -11)


@given(fields, rationals)
def test_is_square_in_field_squares(d, b):
    w = QuadFieldElement(0, b, d)
    root = is_square_in_field(w * w, d)
    assert root is not None and root * root == w * w


def test_on_unit_circle():
    assert on_unit_circle(QuadFieldElement(F(-5, 6), F(1, 6), -11))
    assert not on_unit_circle(QuadFieldElement(F(-264, 743), 0, -1))
    assert on_unit_circle(QuadFieldElement(-1, 0, -3))
    assert on_unit_circle(F(-1))


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        QuadFieldElement(1, 1, -1) + QuadFieldElement(1, 1, -3)
    with pytest.raises(ValueError):
        QuadFieldElement(1, 1, -4)
    with pytest.raises(ValueError):
        QuadFieldElement(1, 1, 5)


@given(fields.flatmap(lambda d: st.tuples(quad(d), quad(d))))
def test_conj_is_homomorphism(pair):
    x, y = pair
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.norm() >= 0
    assert (x.norm() == 0) == (not x)


@given(fields.flatmap(lambda d: st.tuples(quad(d), quad(d), quad(d))))
def test_quad_field_axioms(triple):
    x, y, z = triple
    assert (x + y) - y == x
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if y:
        assert (x / y) * y == x


def test_sqrt_d_squares_to_d():
    r = QuadFieldElement(0, 1, -11)
    assert r * r == -11
    assert QuadFieldElement(3, 0, -1) == 3 and hash(QuadFieldElement(3, 0, -1)) == hash(F(3))


# --- Gaussian integers -----------------------------------------------------


@given(gaussians, gaussians)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(gaussians, nonzero_gaussians)
def test_euclidean_division(x, y):
    q, r = x.divmod(y)
    assert x == q * y + r
    assert r.norm() < y.norm()


@pytest.mark.parametrize(
    "x, y, g",
    [
        (GaussianInt(5), GaussianInt(2, 1), GaussianInt(2, 1)),
        (GaussianInt(3), GaussianInt(7), GaussianInt(1)),
        (GaussianInt(4, 2), GaussianInt(2), GaussianInt(2)),
        (GaussianInt(0), GaussianInt(0, -3), GaussianInt(3)),
    ],
)
def test_gcd_gaussian(x, y, g):
    assert gcd_gaussian(x, y) == g


@given(gaussians, gaussians)
def test_gcd_divides_both(x, y):
    if not x and not y:
        return
    g = gcd_gaussian(x, y)
    assert g.re > 0 and g.im >= 0
    assert g.divides(x) and g.divides(y)


@pytest.mark.parametrize(
    "text, z",
    [("2+i", GaussianInt(2, 1)), ("-1-2i", GaussianInt(-1, -2)), ("i", GaussianInt(0, 1)),
     ("-i", GaussianInt(0, -1)), ("7", GaussianInt(7)), ("3i", GaussianInt(0, 3)), ("0", GaussianInt(0))],
)
def test_parse_gaussian(text, z):
    assert parse_gaussian(text) == z
    assert parse_gaussian(str(z)) == z


@pytest.mark.parametrize("text", ["", "2+", "i2", "1.5", "2+ii"])
def test_parse_gaussian_rejects(text):
    with pytest.raises(ValueError):
        parse_gaussian(text)


# --- valuations ------------------------------------------------------------


def test_valuation_examples():
    assert valuation(ValuationContext.rational(3), 945) == 3
    assert sympy.multiplicity(3, 945) == 3
    assert valuation(ValuationContext.gaussian(), 5) == 1
    assert valuation(ValuationContext.inert(7), GaussianInt(7, 7)) == 1
    assert valuation(ValuationContext.rational(3), 0) is INF
    assert valuation(ValuationContext.gaussian(), GaussianInt(2, -1)) == 0
    assert valuation(ValuationContext.gaussian(), GaussianInt(3, 4)) == 2  # (2+i)^2


def test_infinity_ordering():
    assert INF > 10**9 and not INF < 3 and INF + 2 is INF
    assert min(INF, 4) == 4
    assert sorted([INF, 2, 0]) == [0, 2, INF]


def test_valuation_context_checks():
    with pytest.raises(ValueError):
        ValuationContext.inert(5)
    with pytest.raises(ValueError):
        ValuationContext.rational(9)


contexts = st.sampled_from(
    [ValuationContext.inert(3), ValuationContext.inert(7), ValuationContext.gaussian(), ValuationContext.inert(11)]
)


@given(contexts, gaussians, gaussians)
def test_valuation_is_ultrametric(ctx, x, y):
    vx, vy, vs = valuation(ctx, x), valuation(ctx, y), valuation(ctx, x + y)
    assert vs >= min(vx, vy)
    if vx != vy:
        assert vs == min(vx, vy)
    assert valuation(ctx, x * y) == vx + vy


@given(st.sampled_from([3, 7, 11, 19]), nonzero_gaussians)
def test_inert_valuation_halves_norm_valuation(p, z):
    ctx = ValuationContext.inert(p)
    assert 2 * valuation(ctx, z) == sympy.multiplicity(p, z.norm())
