"""Quadrature formulas for the Bessel weight: weights from nodes, exact degree
verification, quasi-orthogonal decomposition of the node polynomial and the
constructors built on it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import QuadFieldElement, components, is_square_rational, surd_text
from .bessel import moment, moment_functional, monic_phi
from .poly import Polynomial, _check_distinct, expand_from_roots, lagrange_basis


class DegenerateNodes(ValueError):
    """The chosen nodes do not determine a further node (or determine a repeated one)."""


def _field_of(values) -> Optional[int]:
    ds = {v.d for v in values if isinstance(v, QuadFieldElement)}
    if len(ds) > 1:
        raise ValueError(f"mixed fields {sorted(ds)}")
    return ds.pop() if ds else None


@dataclass(frozen=True)
class QuadratureFormula:
    """Nodes and weights in Q (``d is None``) or in Q(sqrt(d))."""

    d: Optional[int]
    nodes: tuple
    weights: tuple
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.nodes) != len(self.weights):
            raise ValueError("nodes and weights differ in length")
        if not self.nodes:
            raise ValueError("a formula needs at least one node")
        _check_distinct(self.nodes)
        found = _field_of(self.nodes + self.weights)
        if found is not None and self.d is not None and found != self.d:
            raise ValueError(f"formula declared over d={self.d} holds elements of d={found}")
        if self.d is None:
            for v in self.nodes + self.weights:
                if components(v)[1]:
                    raise ValueError("irrational entry in a rational formula")

    @property
    def size(self) -> int:
        return len(self.nodes)

    def apply(self, f: Polynomial):
        """``sum_i x_i f(z_i)``."""
        total = Fraction(0)
        for x, z in zip(self.weights, self.nodes):
            total = x * f(z) + total
        return total


def default_cap(m: int) -> int:
    env = os.environ.get("QUADRA_CAP")
    if env:
        return int(env)
    return 2 * m


def moment_defects(formula: QuadratureFormula, upto: int) -> list:
    """``sum_i x_i z_i**j - mu_j`` for ``j = 0..upto``."""
    out = []
    powers = [Fraction(1)] * formula.size
    for j in range(upto + 1):
        total = Fraction(0)
        for i, (x, z) in enumerate(zip(formula.weights, formula.nodes)):
            if j:
                powers[i] = powers[i] * z
            total = x * powers[i] + total
        out.append(total - moment(j))
    return out


def verify(formula: QuadratureFormula, cap: Optional[int] = None) -> int:
    """Largest ``D <= cap`` such that the formula is exact on ``1, z, ..., z**D``.

    Returns -1 when even the total mass is wrong.  ``cap`` defaults to ``2m``,
    where failure is guaranteed.
    """
    if cap is None:
        cap = 2 * formula.size
    for j, defect in enumerate(moment_defects(formula, cap)):
        if defect:
            return j - 1
    return cap


def first_failure(formula: QuadratureFormula, cap: Optional[int] = None):
    """``(j, defect)`` at the first failing moment, or ``None`` if none up to ``cap``."""
    if cap is None:
        cap = 2 * formula.size
    for j, defect in enumerate(moment_defects(formula, cap)):
        if defect:
            return j, defect
    return None


def weights_from_nodes(nodes: Sequence) -> list:
    """``x_i = L[l_i]`` with ``l_i`` the Lagrange basis polynomial of node ``i``."""
    nodes = list(nodes)
    if not nodes:
        raise ValueError("need at least one node")
    return [moment_functional(lagrange_basis(nodes, i)) for i in range(len(nodes))]


def basis_matrix(r: int) -> list[list[Fraction]]:
    """Lower-triangular ``(r+2)x(r+2)`` matrix; column ``j`` is ``phi_{r+1-j}``.

    Row ``i`` holds the coefficients of ``z**(r+1-i)``.
    """
    n = r + 2
    m = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        phi = monic_phi(r + 1 - j)
        for i in range(j, n):
            m[i][j] = Fraction(phi.coeff(r + 1 - i))
    return m


def _forward_substitute(matrix, rhs) -> list:
    # unit lower-triangular solve
    x = []
    for i, c in enumerate(rhs):
        acc = c
        for j in range(i):
            if matrix[i][j]:
                acc = acc - matrix[i][j] * x[j]
        x.append(acc)
    return x


@dataclass(frozen=True)
class QuasiOrthoDecomposition:
    """``theta = phi_{r+1} + b_1 phi_r + ... + b_{r+1} phi_0``."""

    r: int
    b: tuple

    @property
    def order(self) -> int:
        return max((i + 1 for i, v in enumerate(self.b) if v), default=0)

    @property
    def k(self) -> int:
        return self.order + 1

    @property
    def guaranteed_degree(self) -> int:
        return 2 * (self.r + 1) - self.k

    def reconstruct(self) -> Polynomial:
        out = monic_phi(self.r + 1)
        for i, bi in enumerate(self.b, start=1):
            if bi:
                out = out + monic_phi(self.r + 1 - i) * bi
        return out


def decompose(theta: Polynomial) -> QuasiOrthoDecomposition:
    if not theta.is_monic():
        raise ValueError("theta must be monic")
    r = theta.degree - 1
    if r < 0:
        raise ValueError("theta must have degree at least 1")
    x = _forward_substitute(basis_matrix(r), theta.descending())
    return QuasiOrthoDecomposition(r, tuple(x[1:]))


def compose(b: Sequence) -> Polynomial:
    """Inverse of :func:`decompose`: ``phi_{r+1} + sum b_i phi_{r+1-i}`` with ``r = len(b) - 1``."""
    return QuasiOrthoDecomposition(len(b) - 1, tuple(b)).reconstruct()


def construct_degree_r(nodes: Sequence, d: Optional[int] = None) -> QuadratureFormula:
    """Formula on arbitrary distinct nodes; exact to degree at least ``len(nodes) - 1``."""
    nodes = list(nodes)
    _check_distinct(nodes)
    if d is None:
        d = _field_of(nodes)
    return QuadratureFormula(d, nodes, weights_from_nodes(nodes))


def construct_degree_r_plus_1(partial_nodes: Sequence) -> QuadratureFormula:
    """Complete ``r`` distinct rationals with one more rational node so the
    resulting ``r+1`` node formula is exact to degree ``r+1``.

    The last quasi-orthogonal coefficient ``b_{r+1}`` is affine in the
    missing node ``u``; setting it to zero fixes ``u``.
    """
    partial = [Fraction(z) for z in partial_nodes]
    _check_distinct(partial)
    r = len(partial)
    p = expand_from_roots(partial)
    # theta(z) = (z - u) p(z) = z p(z) - u p(z)
    fixed = (Polynomial((0, 1)) * p).descending()
    slope = (0,) + (-p).descending()
    a = basis_matrix(r)
    beta = _forward_substitute(a, fixed)[-1]
    alpha = _forward_substitute(a, slope)[-1]
    if alpha == 0:
        raise DegenerateNodes(f"nodes {[str(z) for z in partial]} leave the last node undetermined")
    u = -beta / alpha
    if u in partial:
        raise DegenerateNodes(f"completing node {u} repeats a given node")
    return construct_degree_r(partial + [u])


@dataclass(frozen=True)
class NonExistence:
    """No formula of the requested kind; ``witness`` names the obstruction."""

    d: int
    reason: str
    witness: str


RE_TWO_NODE = Fraction(-5, 6)
IM_SQUARED_TWO_NODE = Fraction(11, 36)


def two_node_degree2(d: int):
    """The 2-node degree-2 formula with both nodes on the unit circle in Q(sqrt(d)).

    Eliminating the weights from the moment equations for ``j = 0, 1, 2``
    gives ``z_2 = -(z_1 + 2/3)/(z_1 + 1)``; ``|z_1| = |z_2| = 1`` then forces
    ``Re z = -5/6`` and ``Im(z)**2 = 11/36``.  With ``z = a + b sqrt(d)`` this
    needs ``b**2 = 11/(36|d|)`` to be a rational square.
    """
    if d >= 0:
        raise ValueError("d must be negative")
    b_sq = IM_SQUARED_TWO_NODE / abs(d)
    b = is_square_rational(b_sq)
    if b is None:
        return NonExistence(
            d,
            f"Re(z) = -5/6 and Im(z)^2 = 11/36 force b^2 = {b_sq.numerator}/{b_sq.denominator}",
            f"{surd_text(b_sq)} irrational",
        )
    z1 = QuadFieldElement(RE_TWO_NODE, b, d)
    z2 = z1.conj()
    return construct_degree_r([z1, z2], d)
