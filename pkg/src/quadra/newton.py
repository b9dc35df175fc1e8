"""Newton polygons of quasi-Bessel polynomials and the integral-slope test.

Coefficients are indexed leading-first: point ``k`` is ``(k, v(a_k))`` where
``a_k`` multiplies ``x**(n-k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import INF, GaussianInt, ValuationContext, gcd_gaussian, is_prime, valuation
from .bessel import quasi_bessel


@dataclass(frozen=True)
class Edge:
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.end[1] - self.start[1], self.end[0] - self.start[0])

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple  # (k, v) with v possibly INF
    vertices: tuple
    edges: tuple

    @property
    def slopes(self) -> list[Fraction]:
        return [e.slope for e in self.edges]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, left to right, collinear points dropped."""
    pts = sorted(points)
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def polygon_from_points(points: Sequence) -> NewtonPolygon:
    finite = [(k, v) for k, v in points if v is not INF]
    if len(finite) < 2:
        raise ValueError("a Newton polygon needs at least two nonzero coefficients")
    vertices = lower_hull(finite)
    edges = tuple(Edge(a, b) for a, b in zip(vertices, vertices[1:]))
    return NewtonPolygon(tuple(points), tuple(vertices), edges)


def polygon_of(coeffs: Sequence, ctx: ValuationContext) -> NewtonPolygon:
    """Newton polygon of ``coeffs`` (leading coefficient first) under ``ctx``."""
    return polygon_from_points([(k, valuation(ctx, a)) for k, a in enumerate(coeffs)])


def slopes_integral(polygon: NewtonPolygon) -> bool:
    return all(s.denominator == 1 for s in polygon.slopes)


def bertrand_prime(l: int) -> int:
    """Smallest prime ``p = 3 (mod 4)`` with ``(l+1)/2 < p <= l``."""
    if l < 7:
        raise ValueError("only guaranteed for l >= 7")
    for p in range(l // 2 + 1, l + 1):
        if 2 * p > l + 1 and p % 4 == 3 and is_prime(p):
            return p
    raise AssertionError(f"no prime found for l={l}")


def prime_for_r(r: int) -> ValuationContext:
    """Valuation used to rule out degree-2r formulas with r+1 nodes in Q(i)."""
    if r < 3:
        raise ValueError("r must be at least 3")
    if r in (3, 4):
        return ValuationContext.inert(3)
    if r in (5, 6):
        return ValuationContext.gaussian()
    return ValuationContext.inert(bertrand_prime(r))


def parse_prime(text: str, r: int) -> ValuationContext:
    """``auto``, ``2+i`` or a rational prime (inert in Z[i] when it is 3 mod 4)."""
    text = text.strip().lower()
    if text == "auto":
        return prime_for_r(r)
    if text in ("2+i", "2+1i"):
        return ValuationContext.gaussian()
    p = int(text)
    return ValuationContext.inert(p) if p % 4 == 3 else ValuationContext.rational(p)


@dataclass(frozen=True)
class CertificateReport:
    r: int
    s: GaussianInt
    t: GaussianInt
    context: ValuationContext
    coefficients: tuple
    polygon: NewtonPolygon

    @property
    def non_integral_slopes(self) -> list[Fraction]:
        return [s for s in self.polygon.slopes if s.denominator != 1]

    @property
    def certified(self) -> bool:
        """A non-integral slope means ``t*y_{r+1} + s*y_r`` has a root outside Q(i)."""
        return bool(self.non_integral_slopes)


def nonexistence_certificate(r: int, s, t, ctx: ValuationContext | None = None) -> CertificateReport:
    s, t = GaussianInt.of(s), GaussianInt.of(t)
    if gcd_gaussian(s, t) != 1:
        raise ValueError(f"s={s} and t={t} are not coprime")
    if ctx is None:
        ctx = prime_for_r(r)
    coeffs = quasi_bessel(r, s, t).descending()
    return CertificateReport(r, s, t, ctx, coeffs, polygon_of(coeffs, ctx))


def prime_element(ctx: ValuationContext) -> GaussianInt:
    return GaussianInt(2, 1) if ctx.kind == "gaussian" else GaussianInt(ctx.p)


def sample_coprime_pairs(rng, count: int, ctx: ValuationContext, bound: int = 50):
    """``count`` random coprime ``(s, t)`` with ``t != 0``.

    About a third of the draws have s (or t) divisible by the prime of
    ``ctx``, so every branch of the valuation case split gets exercised.
    """
    pi = prime_element(ctx)
    out = []
    while len(out) < count:
        s = GaussianInt(rng.randint(-bound, bound), rng.randint(-bound, bound))
        t = GaussianInt(rng.randint(-bound, bound), rng.randint(-bound, bound))
        roll = rng.random()
        if roll < 1 / 6:
            s = s * pi
        elif roll < 1 / 3:
            t = t * pi
        if t and gcd_gaussian(s, t) == 1:
            out.append((s, t))
    return out
