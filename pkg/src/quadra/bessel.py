"""Bessel polynomials, their monic normalization and the moment functional of
the weight ``-exp(-2/z) / (4*pi*i)`` on the unit circle.

Integrals are never evaluated numerically: the functional is
``L[z**j] = (-2)**j / (j+1)!`` extended by linearity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .arith import GaussianInt, gcd_gaussian
from .poly import Polynomial


def double_factorial(n: int) -> int:
    """``n!!`` for odd ``n >= -1``; ``(-1)!! == 1``."""
    if n < -1:
        raise ValueError("double factorial defined here for n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# lru_cache is safe under concurrent use: a race can only compute an equal value twice.
@lru_cache(maxsize=None)
def moment(j: int) -> Fraction:
    if j < 0:
        raise ValueError("moment index must be non-negative")
    return Fraction((-2) ** j, factorial(j + 1))


def moments(count: int) -> list[Fraction]:
    return [moment(j) for j in range(count)]


@lru_cache(maxsize=None)
def bessel_y(n: int) -> Polynomial:
    """``y_n(x) = sum_k (n+k)! / ((n-k)! k!) (x/2)**k``, integer coefficients."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = []
    for k in range(n + 1):
        num = factorial(n + k)
        den = factorial(n - k) * factorial(k) * 2**k
        assert num % den == 0
        coeffs.append(num // den)
    return Polynomial(coeffs)


def bessel_leading(n: int) -> int:
    """Leading coefficient ``(2n)! / (2**n n!)`` of ``y_n``."""
    return factorial(2 * n) // (2**n * factorial(n))


@lru_cache(maxsize=None)
def monic_phi(n: int) -> Polynomial:
    return bessel_y(n) / Fraction(bessel_leading(n))


def moment_functional(f: Polynomial):
    """``integral of f(z) w(z) dz`` over the unit circle, exactly."""
    total = Fraction(0)
    for j, c in enumerate(f.coeffs):
        if c:
            total = c * moment(j) + total
    return total


@lru_cache(maxsize=None)
def h_value(n: int) -> Fraction:
    """``L[phi_n**2]``; nonzero for every n checked."""
    p = monic_phi(n)
    return moment_functional(p * p)


def quasi_bessel_closed_form(r: int, s, t) -> list:
    """Coefficients ``a_0..a_{r+1}`` of ``t*y_{r+1} + s*y_r`` (``a_k`` multiplies ``x**(r+1-k)``)."""
    out = [t * double_factorial(2 * r + 1), (t * (2 * r + 1) + s) * double_factorial(2 * r - 1)]
    for k in range(2, r + 2):
        m = r + 1 - k
        out.append(
            (t * comb(2 * (r + 1) - k, 2 * m) + s * comb(2 * r + 1 - k, 2 * m))
            * double_factorial(2 * m - 1)
        )
    return out


def quasi_bessel(r: int, s, t) -> Polynomial:
    """``t*y_{r+1}(x) + s*y_r(x)`` for coprime Gaussian integers ``s, t`` with ``t != 0``.

    The coefficients are built from the closed form and from the direct sum;
    the two must agree.  Use :meth:`Polynomial.descending` for the
    ``a_k`` ordering.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    s, t = GaussianInt.of(s), GaussianInt.of(t)
    if not t:
        raise ValueError("t must be nonzero")
    if gcd_gaussian(s, t) != 1:
        raise ValueError(f"s={s} and t={t} are not coprime")
    closed = quasi_bessel_closed_form(r, s, t)
    direct = bessel_y(r + 1) * t + bessel_y(r) * s
    poly = Polynomial.from_descending(closed)
    if poly != direct:
        raise AssertionError(f"closed form disagrees with direct expansion for r={r}")
    return poly
