"""Integral closure of monomial ideals through the Newton polyhedron.

A monomial ``x^a`` is integral over a monomial ideal ``I`` exactly when ``a``
lies in ``conv(gens(I)) + R^d_{>=0}``. Single-point membership is decided by
an exact rational LP (:func:`newton_membership`). Whole closures are
enumerated from the facet inequalities ``<w, a> >= c`` of the polyhedron,
which are computed exactly from integer determinants.

Box bound for minimal lattice points: let ``M_i`` be the largest ``i``-th
exponent among the generators. If ``a`` is in the polyhedron with
``a_i > M_i``, write ``a >= sum lam_j v_j``; the ``i``-th coordinate of the
combination is at most ``M_i <= a_i - 1``, so ``a - e_i`` is in the
polyhedron as well and ``a`` is not minimal. Hence every minimal generator of
the closure lies in ``prod [0, M_i]``. The polyhedron of ``I^n`` is ``n``
times that of ``I``, so the facets of ``I`` serve every power.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations, product as cartesian
from math import gcd

import numpy as np

from .errors import DimensionMismatchError, IdealError
from .ideal import (
    _INF,
    MonomialIdeal,
    _check_box,
    contains,
    ideal_from_profile,
    minimalize,
    power,
    product,
)
from .lp import convex_dominance_weights


def _det(M):
    # Bareiss fraction-free elimination; exact on integer matrices
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _normal(rows, d):
    # generalized cross product of d-1 integer rows
    return [(-1) ** i * _det([r[:i] + r[i + 1:] for r in rows]) for i in range(d)]


@dataclass(frozen=True)
class NewtonPolyhedron:
    """``conv(vertices) + R^d_{>=0}`` for the exponent vectors of a monomial ideal."""

    dim: int
    vertices: tuple

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a Newton polyhedron needs at least one vertex")
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatchError(f"vertex {v} does not have length {self.dim}")

    @classmethod
    def of(cls, I: MonomialIdeal) -> "NewtonPolyhedron":
        if I.is_zero:
            raise IdealError("the zero ideal has no Newton polyhedron")
        return cls(I.dim, I.gens)

    @cached_property
    def essential_vertices(self) -> tuple:
        """Generators that are not in the polyhedron spanned by the others."""
        verts = sorted(set(self.vertices))
        keep = []
        for i, v in enumerate(verts):
            others = verts[:i] + verts[i + 1:]
            if not others or convex_dominance_weights(others, v) is None:
                keep.append(v)
        return tuple(keep)

    @cached_property
    def facets(self) -> tuple:
        """Integer inequalities ``(w, c)`` with ``w >= 0`` cutting out the polyhedron.

        Every facet is spanned by ``k`` vertices and ``d - k`` coordinate rays,
        so enumerating those spans and keeping the valid ones finds them all;
        the returned list may also contain redundant valid inequalities.
        """
        d = self.dim
        V = [list(v) for v in self.essential_vertices]
        Varr = np.array(V, dtype=object)
        found = set()
        for k in range(1, min(d, len(V)) + 1):
            for pts in combinations(range(len(V)), k):
                base = V[pts[0]]
                diffs = [[a - b for a, b in zip(V[j], base)] for j in pts[1:]]
                for rays in combinations(range(d), d - k):
                    rows = diffs + [[int(i == r) for i in range(d)] for r in rays]
                    w = _normal(rows, d)
                    if all(x <= 0 for x in w):
                        w = [-x for x in w]
                    if not any(w) or any(x < 0 for x in w):
                        continue
                    g = reduce(gcd, w)
                    w = [x // g for x in w]
                    c = sum(a * b for a, b in zip(w, base))
                    if all(v >= c for v in Varr.dot(w)):
                        found.add((tuple(w), c))
        return tuple(sorted(found))

    def contains_lattice(self, a, scale: int = 1) -> bool:
        """Facet test for ``a`` in ``scale`` times the polyhedron."""
        return all(sum(x * y for x, y in zip(w, a)) >= scale * c for w, c in self.facets)


def newton_membership(P: NewtonPolyhedron, a) -> bool:
    """Decide ``a in conv(vertices) + R^d_{>=0}`` by exact rational LP.

    ``a`` may hold ints or Fractions.
    """
    if len(a) != P.dim:
        raise DimensionMismatchError(f"point {tuple(a)} does not have length {P.dim}")
    a = [Fraction(x) for x in a]
    if any(x < 0 for x in a):
        return False
    return convex_dominance_weights(P.essential_vertices, a) is not None


def _closure_by_facets(P: NewtonPolyhedron, n: int) -> MonomialIdeal:
    d = P.dim
    if d == 1:
        return MonomialIdeal._trusted(1, ((n * min(v[0] for v in P.vertices),),))
    maxes = [n * max(v[i] for v in P.vertices) for i in range(d)]
    shape = tuple(m + 1 for m in maxes[1:])
    _check_box(shape)
    grids = np.meshgrid(*[np.arange(s, dtype=np.int64) for s in shape], indexing="ij")
    h = np.zeros(shape, dtype=np.int64)
    empty = np.zeros(shape, dtype=bool)
    for w, c in P.facets:
        rest = sum((wi * g for wi, g in zip(w[1:], grids)), np.zeros(shape, dtype=np.int64))
        need = n * c - rest
        if w[0] == 0:
            empty |= need > 0
        else:
            h = np.maximum(h, -(-need // w[0]))
    h[empty] = _INF
    return ideal_from_profile(h)


def _closure_by_lp(P: NewtonPolyhedron, n: int) -> MonomialIdeal:
    d = P.dim
    scaled = NewtonPolyhedron(d, tuple(tuple(n * x for x in v) for v in P.essential_vertices))
    base = minimalize(scaled.vertices, d)
    maxes = base.max_exponents()
    members = []
    for a in cartesian(*[range(m + 1) for m in maxes]):
        if contains(base, a) or newton_membership(scaled, a):
            members.append(a)
    return minimalize(members, d)


def integral_closure(I: MonomialIdeal, method: str = "facets") -> MonomialIdeal:
    """Integral closure of a proper nonzero monomial ideal.

    ``method="facets"`` reads the closure off the facet inequalities;
    ``method="lp"`` enumerates the bounding box and runs the LP on each point.
    """
    return integral_closure_power(I, 1, method=method)


def integral_closure_power(I: MonomialIdeal, n: int, method: str = "facets") -> MonomialIdeal:
    """Integral closure of ``I^n``, using that the polyhedron of ``I^n`` is ``n`` times that of ``I``."""
    if I.is_zero or I.is_unit:
        raise IdealError("integral closure requires a proper nonzero ideal")
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(I.gens) == 1:
        return power(I, n)
    P = NewtonPolyhedron.of(I)
    if method == "facets":
        return _closure_by_facets(P, n)
    if method == "lp":
        return _closure_by_lp(P, n)
    raise ValueError(f"unknown closure method {method!r}")


def power_membership_oracle(I: MonomialIdeal, a, L: int):
    """Least ``l <= L`` with ``x^(l a)`` in ``I^l``, or ``None`` if there is none up to ``L``.

    ``None`` is inconclusive: it never certifies non-membership.
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    J = MonomialIdeal.unit(I.dim)
    for l in range(1, L + 1):
        J = product(J, I)
        if contains(J, tuple(l * x for x in a)):
            return l
    return None
