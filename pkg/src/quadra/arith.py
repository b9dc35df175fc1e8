"""Exact scalars: rationals, imaginary quadratic field elements, Gaussian
integers and the discrete valuations used on them.

Rationals are plain :class:`fractions.Fraction` values; this module adds a
strict text format for them plus the quadratic-field types that the
quadrature and Newton polygon code is built on.  Every value is immutable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Rational as _RationalABC
from typing import Optional, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([-−]?)(\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[-]N[/D]`` into lowest terms.

    Both ASCII ``-`` and U+2212 are accepted as the sign.  Whitespace around
    the value is ignored; anything else (decimals, exponents, a signed
    denominator) raises ``ValueError``.
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    sign, num, den = m.groups()
    d = int(den) if den is not None else 1
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    q = Fraction(int(num), d)
    return -q if sign else q


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_square_rational(q) -> Optional[Fraction]:
    """Return ``r >= 0`` with ``r*r == q`` if ``q`` is the square of a rational."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n > 0`` as ``s*s*f`` with ``f`` squarefree; returns ``(s, f)``.

    Trial division, so only meant for desk-sized inputs.
    """
    if n <= 0:
        raise ValueError("squarefree_part needs a positive integer")
    s, f = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1
    return s, f * n


@lru_cache(maxsize=None)
def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(abs(n))[0] == 1


def surd_text(q) -> str:
    """Render ``sqrt(q)`` for a non-negative rational as ``c*sqrt(f)/m``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("surd_text needs q >= 0")
    if q == 0:
        return "0"
    n, m = q.numerator, q.denominator
    s, f = squarefree_part(n * m)
    coeff = Fraction(s, m)
    if f == 1:
        return format_rational(coeff)
    head = "" if coeff.numerator == 1 else f"{coeff.numerator}*"
    tail = "" if coeff.denominator == 1 else f"/{coeff.denominator}"
    return f"{head}sqrt({f}){tail}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational scalar: {x!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True, eq=False)
class QuadFieldElement:
    """``a + b*sqrt(d)`` with ``a, b`` rational and ``d < 0`` squarefree.

    Rational scalars (``int``/``Fraction``) coerce into the field; mixing two
    different ``d`` is a ``ValueError``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.d >= 0 or not is_squarefree(self.d):
            raise ValueError(f"d must be a negative squarefree integer, got {self.d}")

    def _coerce(self, other) -> Optional["QuadFieldElement"]:
        if isinstance(other, QuadFieldElement):
            if other.d != self.d:
                raise ValueError(f"mixed fields: d={self.d} and d={other.d}")
            return other
        if _is_scalar(other):
            return QuadFieldElement(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        p = self * o.conj()
        return QuadFieldElement(p.a / n, p.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** (-n))
        result = QuadFieldElement(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadFieldElement":
        return QuadFieldElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadFieldElement):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if _is_scalar(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        root = f"sqrt({self.d})"
        bpart = root if self.b == 1 else f"-{root}" if self.b == -1 else f"{format_rational(self.b)}*{root}"
        if self.a == 0:
            return bpart
        if bpart.startswith("-"):
            return f"{format_rational(self.a)} - {bpart[1:]}"
        return f"{format_rational(self.a)} + {bpart}"

    def __repr__(self):
        return f"QuadFieldElement({format_rational(self.a)!r}, {format_rational(self.b)!r}, d={self.d})"


def field_element(a, b=0, d: Optional[int] = None):
    """Build ``a + b*sqrt(d)``; with ``d=None`` the value must be rational."""
    if d is None:
        if Fraction(b) != 0:
            raise ValueError("irrational part given for a rational value")
        return Fraction(a)
    return QuadFieldElement(a, b, d)


def components(x) -> tuple[Fraction, Fraction]:
    """``(a, b)`` of a field element; rationals have ``b = 0``."""
    if isinstance(x, QuadFieldElement):
        return x.a, x.b
    return _as_fraction(x), Fraction(0)


def conj(x):
    if isinstance(x, QuadFieldElement):
        return x.conj()
    return x


def is_square_in_field(q, d: int) -> Optional[QuadFieldElement]:
    """Return ``w`` in Q(sqrt(d)) with ``w*w == q`` for rational ``q``, if any.

    ``w*w`` is rational only when ``w`` is purely rational or purely a
    multiple of ``sqrt(d)``, so it is enough to test ``q`` and ``q/d``.
    The root with non-negative components is returned.
    """
    if isinstance(q, QuadFieldElement):
        if q.b:
            raise ValueError("is_square_in_field takes a rational value")
        q = q.a
    q = Fraction(q)
    r = is_square_rational(q)
    if r is not None:
        return QuadFieldElement(r, 0, d)
    r = is_square_rational(q / d)
    if r is not None:
        return QuadFieldElement(0, r, d)
    return None


def on_unit_circle(z) -> bool:
    """Exact test of ``|z| == 1`` (``a^2 + |d| b^2 == 1``)."""
    if isinstance(z, QuadFieldElement):
        return z.norm() == 1
    return _as_fraction(z) ** 2 == 1


@total_ordering
class Infinity:
    """The valuation of zero.  Compares above every integer; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("Infinity")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = Infinity()

ExtendedInt = Union[int, Infinity]


@dataclass(frozen=True, order=False)
class GaussianInt:
    """``re + im*i`` in Z[i]."""

    re: int
    im: int = 0

    def __post_init__(self):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (self.re, self.im)):
            raise TypeError("GaussianInt components must be ints")

    @staticmethod
    def of(x) -> "GaussianInt":
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return GaussianInt(x, 0)
        raise TypeError(f"cannot convert {x!r} to GaussianInt")

    def __add__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.of(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.of(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return GaussianInt.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.of(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def divmod(self, other) -> tuple["GaussianInt", "GaussianInt"]:
        """Euclidean division with the quotient rounded to the nearest lattice point."""
        o = GaussianInt.of(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * o.conj()
        q = GaussianInt(_round_div(p.re, n), _round_div(p.im, n))
        return q, self - q * o

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other) -> bool:
        """True if ``self`` divides ``other`` exactly."""
        return not GaussianInt.of(other).divmod(self)[1]

    def normalized(self) -> "GaussianInt":
        """The associate with ``re > 0, im >= 0`` (zero stays zero)."""
        z = self
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return z
            z = GaussianInt(-z.im, z.re)
        return z

    def to_field(self) -> QuadFieldElement:
        return QuadFieldElement(self.re, self.im, -1)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return im
        return f"{self.re}{'' if im.startswith('-') else '+'}{im}"

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"


def _round_div(a: int, n: int) -> int:
    # nearest integer to a/n for n > 0, halves rounded up
    return (2 * a + n) // (2 * n)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``A``, ``A+Bi``, ``A-Bi``, ``Bi``, ``i``, ``-i`` style literals."""
    s = text.strip().replace(" ", "").replace("−", "-").replace("j", "i")
    if not s:
        raise ValueError("empty Gaussian integer")
    if s.endswith("i"):
        body = s[:-1].rstrip("*")
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "", body
        if im_part in ("", "+"):
            im = 1
        elif im_part == "-":
            im = -1
        elif re.fullmatch(r"[+-]?\d+", im_part):
            im = int(im_part)
        else:
            raise ValueError(f"malformed Gaussian integer: {text!r}")
        if re_part and not re.fullmatch(r"[+-]?\d+", re_part):
            raise ValueError(f"malformed Gaussian integer: {text!r}")
        return GaussianInt(int(re_part) if re_part else 0, im)
    if not re.fullmatch(r"[+-]?\d+", s):
        raise ValueError(f"malformed Gaussian integer: {text!r}")
    return GaussianInt(int(s), 0)


def gcd_gaussian(x, y) -> GaussianInt:
    """Euclidean gcd in Z[i], normalized to the associate with ``re > 0, im >= 0``."""
    a, b = GaussianInt.of(x), GaussianInt.of(y)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.normalized()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


GAUSSIAN_PRIME_2_PLUS_I = GaussianInt(2, 1)


@dataclass(frozen=True)
class ValuationContext:
    """A discrete valuation on Z or Z[i].

    ``kind`` is ``"rational"`` (v_p on integers; on Gaussian integers the
    exponent of p dividing both components), ``"inert"`` (p = 3 mod 4, a
    genuine valuation on Z[i] with ``2*v(z) == v_p(norm z)``) or
    ``"gaussian"`` (the prime 2+i, ``p`` is then 5 = its norm).
    """

    kind: str
    p: int

    def __post_init__(self):
        if self.kind not in ("rational", "inert", "gaussian"):
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.kind == "gaussian":
            if self.p != 5:
                raise ValueError("the gaussian context is the prime 2+i (norm 5)")
        elif not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind == "inert" and self.p % 4 != 3:
            raise ValueError(f"{self.p} is not inert in Z[i]")

    @classmethod
    def rational(cls, p: int) -> "ValuationContext":
        return cls("rational", p)

    @classmethod
    def inert(cls, p: int) -> "ValuationContext":
        return cls("inert", p)

    @classmethod
    def gaussian(cls) -> "ValuationContext":
        return cls("gaussian", 5)

    def label(self) -> str:
        return "2+i" if self.kind == "gaussian" else str(self.p)


def _vp_int(p: int, n: int) -> ExtendedInt:
    if n == 0:
        return INF
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def valuation(ctx: ValuationContext, x) -> ExtendedInt:
    """Valuation of an integer or Gaussian integer; ``INF`` for zero."""
    if isinstance(x, bool):
        raise TypeError("bool is not a valuation argument")
    if ctx.kind == "gaussian":
        z = GaussianInt.of(x)
        if not z:
            return INF
        e = 0
        pi = GAUSSIAN_PRIME_2_PLUS_I
        while True:
            q, r = z.divmod(pi)
            if r:
                return e
            z = q
            e += 1
    if isinstance(x, GaussianInt):
        if not x:
            return INF
        return min(_vp_int(ctx.p, x.re), _vp_int(ctx.p, x.im))
    if isinstance(x, int):
        return _vp_int(ctx.p, x)
    raise TypeError(f"cannot take a valuation of {x!r}")
