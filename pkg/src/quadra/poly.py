"""Dense univariate and (x, y)-bivariate polynomials over exact coefficient types.

Coefficients may be ``int``, ``Fraction``, :class:`QuadFieldElement` or
:class:`GaussianInt`; anything with ring operators and a zero test works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .arith import GaussianInt, QuadFieldElement, format_rational

NEG_INF = float("-inf")


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _compound(c) -> bool:
    if isinstance(c, QuadFieldElement):
        return bool(c.a) and bool(c.b)
    if isinstance(c, GaussianInt):
        return c.re != 0 and c.im != 0
    return False


def _coeff_text(c) -> str:
    if isinstance(c, (QuadFieldElement, GaussianInt)):
        s = str(c)
    else:
        s = format_rational(c)
    return f"({s})" if _compound(c) else s


class Polynomial:
    """Ascending-coefficient polynomial; ``coeffs[k]`` multiplies ``z**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        """Index of the leading coefficient; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def descending(self) -> tuple:
        """Coefficients from the leading term down (``a_0`` is the leading one)."""
        return tuple(reversed(self.coeffs))

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "Polynomial":
        return cls(reversed(list(coeffs)))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _binop(self, other, op):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(op(self.coeff(k), other.coeff(k)) for k in range(n))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return Polynomial(other * c for c in self.coeffs)

    def __truediv__(self, scalar):
        return Polynomial(c / scalar for c in self.coeffs)

    def __pow__(self, n: int):
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return self == Polynomial.constant(other)

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def format(self, var: str = "z") -> str:
        """Descending-power display, e.g. ``z^3 + 2*z^2 + 2*z + 1``."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            text = _coeff_text(c)
            if not mono:
                terms.append(text)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{text}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


Z = Polynomial((0, 1))


def derivative(f: Polynomial) -> Polynomial:
    return f.derivative()


def expand_from_roots(roots: Iterable) -> Polynomial:
    """Monic polynomial with exactly the given multiset of roots."""
    result = Polynomial.constant(1)
    for r in roots:
        result = result * Polynomial((-r, 1))
    return result


def _check_distinct(nodes: Sequence) -> None:
    for i in range(len(nodes)):
        for j in range(i):
            if nodes[i] == nodes[j]:
                raise ValueError(f"repeated node {nodes[i]}")


def lagrange_basis(nodes: Sequence, i: int) -> Polynomial:
    """The polynomial of degree ``len(nodes) - 1`` that is 1 at ``nodes[i]`` and 0 at the others."""
    _check_distinct(nodes)
    zi = nodes[i]
    num = Polynomial.constant(1)
    den = Fraction(1)
    for j, zj in enumerate(nodes):
        if j == i:
            continue
        num = num * Polynomial((-zj, 1))
        den = den * (zi - zj)
    return num * (1 / den)


class BivariatePolynomial:
    """Polynomial in ``x`` whose coefficients are :class:`Polynomial` in ``y``.

    ``coeffs[i]`` is the coefficient of ``x**i``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Polynomial] = ()):
        c = [p if isinstance(p, Polynomial) else Polynomial.constant(p) for p in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def outer(cls, fx: Polynomial, gy: Polynomial) -> "BivariatePolynomial":
        """``f(x) * g(y)``."""
        return cls(gy * c for c in fx.coeffs)

    @classmethod
    def x_minus_y(cls) -> "BivariatePolynomial":
        return cls((Polynomial((0, -1)), Polynomial((1,))))

    @property
    def degree_x(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff_x(self, i: int) -> Polynomial:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Polynomial()

    def __add__(self, other: "BivariatePolynomial"):
        n = max(len(self.coeffs), len(other.coeffs))
        return BivariatePolynomial(self.coeff_x(i) + other.coeff_x(i) for i in range(n))

    def __sub__(self, other: "BivariatePolynomial"):
        n = max(len(self.coeffs), len(other.coeffs))
        return BivariatePolynomial(self.coeff_x(i) - other.coeff_x(i) for i in range(n))

    def __neg__(self):
        return BivariatePolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return BivariatePolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return BivariatePolynomial()
        out = [Polynomial()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BivariatePolynomial(out)

    def __rmul__(self, other):
        return BivariatePolynomial(other * c for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c(y)
        return acc

    def partial_x(self, x0) -> Polynomial:
        """Substitute ``x = x0``, leaving a polynomial in ``y``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def partial_y(self, y0) -> Polynomial:
        """Substitute ``y = y0``, leaving a polynomial in ``x``."""
        return Polynomial(c(y0) for c in self.coeffs)

    def swap(self) -> "BivariatePolynomial":
        """``g(x, y) = f(y, x)``."""
        width = max((len(c.coeffs) for c in self.coeffs), default=0)
        return BivariatePolynomial(
            Polynomial(self.coeffs[i].coeff(j) for i in range(len(self.coeffs)))
            for j in range(width)
        )

    def diagonal(self) -> Polynomial:
        """``f(x, x)`` as a univariate polynomial."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * Z + c
        return acc

    def format(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            inner = c.format("y")
            if not mono:
                terms.append(f"({inner})" if len(c.coeffs) > 1 and len(terms) else inner)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({inner})*{mono}")
        return " + ".join(terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BivariatePolynomial({self.format()!r})"


_Y = Polynomial((0, 1))


def divide_out_x_minus_y(num: BivariatePolynomial) -> BivariatePolynomial:
    """Exact quotient ``num / (x - y)``; raises ``ValueError`` on a nonzero remainder."""
    n = len(num.coeffs)
    if n == 0:
        return BivariatePolynomial()
    q = [Polynomial()] * (n - 1)
    carry = Polynomial()
    # synthetic division in x with root y, from the top coefficient down
    for k in range(n - 1, 0, -1):
        carry = num.coeffs[k] + _Y * carry
        q[k - 1] = carry
    remainder = num.coeffs[0] + _Y * carry
    if not remainder.is_zero():
        raise ValueError(f"not divisible by x - y: remainder {remainder}")
    return BivariatePolynomial(q)
