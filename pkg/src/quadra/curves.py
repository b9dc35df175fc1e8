"""Christoffel-Darboux numerators, the node-compatibility test for almost
tight formulas, and the two quartic curves ``w**2 = R(y)`` that the
existence questions reduce to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional, Sequence

from .arith import (
    QuadFieldElement,
    components,
    format_rational,
    is_square_rational,
)
from .bessel import bessel_y, h_value, bessel_leading
from .poly import BivariatePolynomial, divide_out_x_minus_y
from .quadrature import QuadratureFormula, construct_degree_r


@lru_cache(maxsize=None)
def f_poly(l: int) -> BivariatePolynomial:
    """``(y_{l+1}(x) y_l(y) - y_l(x) y_{l+1}(y)) / (x - y)``."""
    if l < 0:
        raise ValueError("l must be non-negative")
    a, b = bessel_y(l + 1), bessel_y(l)
    num = BivariatePolynomial.outer(a, b) - BivariatePolynomial.outer(b, a)
    return divide_out_x_minus_y(num)


def cd_kernel(l: int) -> BivariatePolynomial:
    """``K_l(x, y) = sum_k h_l / h_k * y_k(x) y_k(y)`` for the family ``y_k``.

    Built from the sum, not from ``f_poly``, so the two can be compared.
    """
    # h for y_k is lead_k**2 * h(phi_k)
    def h(k):
        return bessel_leading(k) ** 2 * h_value(k)

    out = BivariatePolynomial()
    for k in range(l + 1):
        out = out + BivariatePolynomial.outer(bessel_y(k), bessel_y(k)) * (h(l) / h(k))
    return out


def pairwise_compatible(nodes: Sequence, r: int) -> bool:
    """``f_r(z_i, z_j) == 0`` for all ``i != j``; necessary for exactness to degree ``2r``."""
    f = f_poly(r)
    for i, zi in enumerate(nodes):
        for j, zj in enumerate(nodes):
            if i != j and f(zi, zj) != 0:
                return False
    return True


@dataclass(frozen=True)
class QuarticCurve:
    """``w**2 = c4 y**4 + c3 y**3 + c2 y**2 + c1 y + c0`` with integer coefficients."""

    name: str
    coefficients: tuple  # (c4, c3, c2, c1, c0)

    def rhs(self, y):
        acc = 0
        for c in self.coefficients:
            acc = acc * y + c
        return acc

    def homogeneous(self, p: int, q: int) -> int:
        """``q**4 * R(p/q)``."""
        c4, c3, c2, c1, c0 = self.coefficients
        return c4 * p**4 + c3 * p**3 * q + c2 * p**2 * q**2 + c1 * p * q**3 + c0 * q**4

    def contains(self, y, w) -> bool:
        return w * w - self.rhs(y) == 0

    def format(self) -> str:
        c4, c3, c2, c1, c0 = self.coefficients
        terms = [(c4, "y^4"), (c3, "y^3"), (c2, "y^2"), (c1, "y"), (c0, "")]
        out = ""
        for c, m in terms:
            if not c:
                continue
            mag = abs(c)
            body = (m if mag == 1 and m else f"{mag}*{m}" if m else str(mag))
            sign = "-" if c < 0 else "+"
            out += (f"-{body}" if sign == "-" else body) if not out else f" {sign} {body}"
        return f"w^2 = {out}"


def curve_cdk_r2() -> QuarticCurve:
    return QuarticCurve("cdk", (-75, -120, -84, -28, -4))


def curve_mt2() -> QuarticCurve:
    return QuarticCurve("mt2", (-44, -84, 1, 84, 43))


CURVES = {"cdk": curve_cdk_r2, "mt2": curve_mt2}


@dataclass(frozen=True)
class CurvePoint:
    y: object
    w: object


def nodes_from_point(point: CurvePoint) -> QuadratureFormula:
    """Three-node formula over Q(i) from a point of the degree-4 compatibility curve.

    ``z1 = y`` and the other two nodes are the roots of ``f_2(x, y) = 0`` in x,
    i.e. ``x = (+-w - (15y^2+14y+4)) / (2(15y^2+15y+5))``.
    """
    y = point.y
    if isinstance(y, QuadFieldElement):
        if y.b:
            raise ValueError("y must be rational")
        y = y.a
    y = Fraction(y)
    w = point.w
    if not isinstance(w, QuadFieldElement):
        w = QuadFieldElement(w, 0, -1)
    if w.d != -1:
        raise ValueError("w must lie in Q(sqrt(-1))")
    if not curve_cdk_r2().contains(y, w):
        raise ValueError(f"({y}, {w}) is not on the curve")
    a = 15 * y * y + 15 * y + 5
    b = 15 * y * y + 14 * y + 4
    z1 = QuadFieldElement(y, 0, -1)
    z2 = (w - b) / (2 * a)
    z3 = (-w - b) / (2 * a)
    nodes = [z1, z2, z3]
    if len({z1, z2, z3}) < 3:
        raise ValueError("degenerate point: nodes coincide")
    return construct_degree_r(nodes, -1)


def _rationals_up_to(height: int):
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if gcd(p, q) == 1:
                yield p, q


def _sqrt_int(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def search_points(curve: QuarticCurve, height: int, square_mode: str = "rational") -> list[CurvePoint]:
    """All points with ``y = p/q``, ``|p|, q <= height``, and w in Q (or Q(i)).

    Ordered by ``(q, p)``; for each y the root with non-negative components
    comes before its negative.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    if square_mode not in ("rational", "gaussian"):
        raise ValueError(f"unknown square mode {square_mode!r}")
    out = []
    for p, q in _rationals_up_to(height):
        n = curve.homogeneous(p, q)
        # R(p/q) = n / q**4, so it is a square iff n (or -n in Q(i)) is a square
        root = _sqrt_int(n)
        imaginary = False
        if root is None and square_mode == "gaussian":
            root = _sqrt_int(-n)
            imaginary = True
        if root is None:
            continue
        y = Fraction(p, q)
        mag = Fraction(root, q * q)
        if square_mode == "rational":
            ws = [mag] if mag == 0 else [mag, -mag]
        else:
            w = QuadFieldElement(0, mag, -1) if imaginary else QuadFieldElement(mag, 0, -1)
            ws = [w] if not w else [w, -w]
        out.extend(CurvePoint(y, w) for w in ws)
    return out


def point_to_json(point: CurvePoint) -> dict:
    if isinstance(point.w, QuadFieldElement):
        wa, wb = components(point.w)
        return {"y": format_rational(point.y), "w": {"a": format_rational(wa), "b": format_rational(wb)}}
    return {"y": format_rational(point.y), "w": format_rational(point.w)}


@dataclass(frozen=True)
class Branch:
    sign: int
    t: Optional[Fraction]
    u: Optional[Fraction]
    v: Optional[Fraction]
    fails_at: Optional[str]


@dataclass(frozen=True)
class CandidateReport:
    s: Fraction
    t_squared: Fraction
    discriminant: Fraction
    branches: tuple

    @property
    def all_fail(self) -> bool:
        return all(b.fails_at is not None for b in self.branches)


def mt2_candidate_check(s) -> CandidateReport:
    """Test whether ``z1 = s + t i``, ``z2 = u + v i`` can all be rational.

    ``t**2 = 1 - s**2``; ``u = (-91 - 202s - 112s^2 +- 2 sqrt(D)) / (106 + 224s + 120s^2)``
    with ``D = 43 + 84s + s^2 - 84s^3 - 44s^4``; ``v**2 = 1 - u**2``.
    Components are checked in the order t, u, v.
    """
    s = Fraction(s)
    den = 106 + 224 * s + 120 * s * s
    if den == 0:
        raise ValueError("vanishing denominator")
    t_sq = 1 - s * s
    disc = 43 + 84 * s + s * s - 84 * s**3 - 44 * s**4
    t = is_square_rational(t_sq)
    root = is_square_rational(disc)
    branches = []
    for sign in (1, -1):
        u = v = None
        fails = None
        if root is not None:
            u = (-91 - 202 * s - 112 * s * s + sign * 2 * root) / den
            v = is_square_rational(1 - u * u)
        if t is None:
            fails = "t"
        elif u is None:
            fails = "u"
        elif v is None:
            fails = "v"
        branches.append(Branch(sign, t, u, v, fails))
    return CandidateReport(s, t_sq, disc, tuple(branches))
