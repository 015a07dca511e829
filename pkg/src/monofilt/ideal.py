"""Monomial ideals in k[x_1, ..., x_d] represented by exponent vectors.

Every ideal is stored as the lexicographically sorted antichain of its minimal
generators. The coefficient field never appears: all operations are exponent
combinatorics, and results agree with the localization at the homogeneous
maximal ideal.

Internally most operations go through a *height profile*: for a column
``c = (a_2, ..., a_d)`` the profile stores the least ``a_1`` with
``x^(a_1, c)`` in the ideal. The profile over the box spanned by the
generators determines the ideal completely, because membership in a column
beyond the box equals membership in the clipped column.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import ComputationLimitError, DimensionMismatchError, IdealError

ExponentVector = tuple[int, ...]

_INF = np.iinfo(np.int64).max // 4
MAX_EXPONENT = 1 << 40
MAX_BOX_CELLS = 20_000_000


def as_exponent(v: Iterable[int], d: int) -> ExponentVector:
    """Validate ``v`` as an exponent vector of length ``d``."""
    t = tuple(int(e) for e in v)
    if len(t) != d:
        raise DimensionMismatchError(f"exponent vector {t} has length {len(t)}, expected {d}")
    for e in t:
        if e < 0:
            raise ValueError(f"negative exponent in {t}")
        if e >= MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds the supported range")
    return t


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by the variables with the given 0-based indices."""

    vars: frozenset

    def __post_init__(self):
        if not self.vars:
            raise ValueError("a prime support needs at least one variable")

    def __lt__(self, other):
        return self.key() < other.key()

    def key(self):
        return (len(self.vars), tuple(sorted(self.vars)))

    def __repr__(self):
        return f"PrimeSupport({sorted(self.vars)})"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Use :func:`minimalize` (or :meth:`from_gens`) to build one from an
    arbitrary generating set; the constructor itself only accepts an
    already-minimal, sorted antichain and checks that it is one.
    """

    dim: int
    gens: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        gens = tuple(as_exponent(g, self.dim) for g in self.gens)
        if list(gens) != sorted(set(gens)):
            raise ValueError("generators must be sorted and distinct; use minimalize()")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def _trusted(cls, dim: int, gens) -> "MonomialIdeal":
        obj = object.__new__(cls)
        object.__setattr__(obj, "dim", dim)
        object.__setattr__(obj, "gens", tuple(gens))
        return obj

    @classmethod
    def from_gens(cls, gens, dim: int) -> "MonomialIdeal":
        return minimalize(gens, dim)

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, ())

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, ((0,) * dim,))

    @classmethod
    def maximal(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, tuple(sorted(_unit_vec(dim, i) for i in range(dim))))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    def array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.dim)

    def max_exponents(self) -> ExponentVector:
        if not self.gens:
            return (0,) * self.dim
        return tuple(max(col) for col in zip(*self.gens))

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, n):
        return power(self, n)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def issubset(self, other: "MonomialIdeal") -> bool:
        _check_dims(self, other)
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        if self.dim == 1:
            return self.gens[0] >= other.gens[0]
        A = self.array()
        return bool(np.all(A[:, 0] >= _lookup(profile_of(other), A[:, 1:])))

    def __repr__(self):
        return f"MonomialIdeal(dim={self.dim}, gens={list(self.gens)})"


def _unit_vec(d: int, i: int, k: int = 1) -> ExponentVector:
    return tuple(k if j == i else 0 for j in range(d))


def _check_dims(*ideals: MonomialIdeal) -> int:
    d = ideals[0].dim
    for other in ideals[1:]:
        if other.dim != d:
            raise DimensionMismatchError(f"ambient dimensions differ: {d} vs {other.dim}")
    return d


def _check_box(shape) -> None:
    if prod(shape) > MAX_BOX_CELLS:
        raise ComputationLimitError(f"profile box {tuple(shape)} exceeds {MAX_BOX_CELLS} cells")


# -- height profiles -------------------------------------------------------

def _profile(arr: np.ndarray, shape) -> np.ndarray:
    # arr: (k, d) generators with arr[:, 1:] inside shape; returns min first
    # exponent over generators whose tail is <= each column.
    _check_box(shape)
    h = np.full(shape, _INF, dtype=np.int64)
    if len(arr):
        np.minimum.at(h, tuple(arr[:, 1:].T), arr[:, 0])
        for ax in range(h.ndim):
            h = np.minimum.accumulate(h, axis=ax)
    return h


def _gens_from_profile(h: np.ndarray) -> list:
    mask = h < _INF
    for ax in range(h.ndim):
        prev = np.full_like(h, _INF)
        dst = [slice(None)] * h.ndim
        src = [slice(None)] * h.ndim
        dst[ax] = slice(1, None)
        src[ax] = slice(None, -1)
        prev[tuple(dst)] = h[tuple(src)]
        mask &= h < prev
    cols = np.nonzero(mask)
    out = np.column_stack([h[mask], *cols]) if cols[0].size else np.zeros((0, h.ndim + 1), np.int64)
    return sorted(tuple(int(e) for e in row) for row in out)


def _lookup(h: np.ndarray, cols: np.ndarray) -> np.ndarray:
    # profile values at arbitrary columns (n, d-1), clipping into the box
    clipped = np.minimum(cols, np.array(h.shape) - 1)
    return h[tuple(clipped.T)]


def profile_of(I: MonomialIdeal, shape=None) -> np.ndarray:
    """Height profile of ``I`` (requires ``dim >= 2``) over ``shape``."""
    if I.dim < 2:
        raise ValueError("height profiles need at least two variables")
    arr = I.array()
    if shape is None:
        shape = tuple(int(m) + 1 for m in I.max_exponents()[1:])
    return _profile(arr, shape)


def ideal_from_profile(h: np.ndarray) -> MonomialIdeal:
    return MonomialIdeal._trusted(h.ndim + 1, _gens_from_profile(h))


# -- basic operations --------------------------------------------------------

def minimalize(raw_gens, d: int) -> MonomialIdeal:
    """Reduce a generating set to its antichain of minimal elements."""
    vecs = {as_exponent(v, d) for v in raw_gens}
    if not vecs:
        return MonomialIdeal.zero(d)
    if d == 1:
        return MonomialIdeal._trusted(1, (min(vecs),))
    return _minimalize_array(np.array(sorted(vecs), dtype=np.int64), d)


def _minimalize_array(arr: np.ndarray, d: int) -> MonomialIdeal:
    # unchecked fast path for internally produced non-negative arrays
    if len(arr) == 0:
        return MonomialIdeal.zero(d)
    if d == 1:
        return MonomialIdeal._trusted(1, ((int(arr[:, 0].min()),),))
    if arr.max() >= MAX_EXPONENT:
        raise OverflowError("exponent exceeds the supported range")
    shape = tuple(int(m) + 1 for m in arr[:, 1:].max(axis=0))
    return ideal_from_profile(_profile(arr, shape))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _check_dims(I, J)
    return minimalize(I.gens + J.gens, d)


def contains(I: MonomialIdeal, a) -> bool:
    """True iff the monomial ``x^a`` lies in ``I``."""
    a = as_exponent(a, I.dim)
    return any(all(gi <= ai for gi, ai in zip(g, a)) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _check_dims(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(d)
    A, B = I.array(), J.array()
    return _minimalize_array((A[:, None, :] + B[None, :, :]).reshape(-1, d), d)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power exponent must be non-negative")
    result = MonomialIdeal.unit(I.dim)
    for _ in range(n):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _check_dims(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(d)
    if d == 1:
        return MonomialIdeal._trusted(1, (max(I.gens[0], J.gens[0]),))
    shape = tuple(max(a, b) + 1 for a, b in zip(I.max_exponents()[1:], J.max_exponents()[1:]))
    return ideal_from_profile(np.maximum(profile_of(I, shape), profile_of(J, shape)))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal ``I : J``, intersecting ``I : g`` over generators ``g`` of ``J``."""
    d = _check_dims(I, J)
    if J.is_zero:
        raise IdealError("colon by the zero ideal is not defined here")
    if I.is_zero:
        return I
    if d == 1:
        return MonomialIdeal._trusted(1, ((max(I.gens[0][0] - J.gens[0][0], 0),),))
    h = profile_of(I)
    res = None
    axes = [np.arange(s) for s in h.shape]
    for g in J.gens:
        idx = np.ix_(*[np.minimum(ax + gi, s - 1) for ax, gi, s in zip(axes, g[1:], h.shape)])
        shifted = h[idx]
        vals = np.where(shifted >= _INF, _INF, np.maximum(shifted - g[0], 0))
        res = vals if res is None else np.maximum(res, vals)
    return ideal_from_profile(res)


def saturation_colon(I: MonomialIdeal, J: MonomialIdeal):
    """Fixpoint of ``K -> K : J`` starting from ``I``.

    Returns ``(K, i)`` where ``i`` is the first index with ``K_i == K_{i+1}``.
    The chain is ascending, so one repeated term certifies the fixpoint.
    """
    K = I
    i = 0
    while True:
        nxt = colon(K, J)
        if nxt == K:
            return K, i
        K = nxt
        i += 1


def radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero:
        raise IdealError("radical of the zero ideal is not supported")
    return minimalize((tuple(min(e, 1) for e in g) for g in I.gens), I.dim)


def support(g) -> frozenset:
    return frozenset(i for i, e in enumerate(g) if e)


def _require_proper_nonzero(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise IdealError(f"{what} requires a nonzero ideal")
    if I.is_unit:
        raise IdealError(f"{what} requires a proper ideal")


# -- decomposition -----------------------------------------------------------

def _is_irreducible(I: MonomialIdeal) -> bool:
    return all(len(support(g)) == 1 for g in I.gens)


def _irredundant(components) -> list:
    comps = sorted(set(components), key=lambda Q: (len(Q.gens), Q.gens))
    keep = []
    for Q in comps:
        # in the distributive lattice of monomial ideals an irreducible
        # component is redundant iff it contains another component
        if not any(P != Q and P.issubset(Q) for P in comps):
            keep.append(Q)
    return sorted(keep, key=lambda Q: Q.gens)


def _decompose_split(I: MonomialIdeal) -> list:
    comps = set()
    seen = set()
    stack = [I]
    while stack:
        J = stack.pop()
        if J in seen:
            continue
        seen.add(J)
        g = next((g for g in J.gens if len(support(g)) > 1), None)
        if g is None:
            comps.add(J)
            continue
        i = min(support(g))
        u = _unit_vec(J.dim, i, g[i])
        v = tuple(0 if j == i else e for j, e in enumerate(g))
        stack.append(ideal_sum(J, MonomialIdeal._trusted(J.dim, (u,))))
        stack.append(ideal_sum(J, MonomialIdeal._trusted(J.dim, (v,))))
    return list(comps)


def _decompose_socle(I: MonomialIdeal) -> list:
    # Artinian completion: add x_i^N_i with N_i beyond every exponent, read
    # the irreducible components off the socle monomials of A/I', then drop
    # the auxiliary powers again.
    d = I.dim
    big = tuple(m + 1 for m in I.max_exponents())
    completed = ideal_sum(I, minimalize([_unit_vec(d, i, big[i]) for i in range(d)], d))
    if d == 1:
        b = (completed.gens[0][0] - 1,)
        socle = [b]
    else:
        shape = tuple(N + 1 for N in big[1:])
        h = profile_of(completed, shape)
        ok = (h >= 1) & (h < _INF)
        for ax in range(h.ndim):
            nxt = np.zeros_like(h)  # columns past N_i lie in the ideal
            dst = [slice(None)] * h.ndim
            src = [slice(None)] * h.ndim
            dst[ax] = slice(None, -1)
            src[ax] = slice(1, None)
            nxt[tuple(dst)] = h[tuple(src)]
            ok &= nxt < h
        cols = np.nonzero(ok)
        socle = [(int(h[c]) - 1, *map(int, c)) for c in zip(*cols)]
    comps = []
    for b in socle:
        gens = [_unit_vec(d, i, b[i] + 1) for i in range(d) if b[i] + 1 < big[i]]
        comps.append(MonomialIdeal._trusted(d, sorted(gens)))
    return comps


def irreducible_decomposition(I: MonomialIdeal, method: str = "socle") -> list:
    """Irredundant decomposition of ``I`` into ideals generated by pure powers.

    ``method="socle"`` reads components from the socle of an Artinian
    completion; ``method="split"`` uses recursive splitting of mixed
    generators. Both give the same (unique) irredundant decomposition.
    """
    _require_proper_nonzero(I, "irreducible decomposition")
    if method == "socle":
        comps = _decompose_socle(I)
    elif method == "split":
        comps = _decompose_split(I)
    else:
        raise ValueError(f"unknown decomposition method {method!r}")
    return _irredundant(comps)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    result = ideals[0]
    for J in ideals[1:]:
        result = intersect(result, J)
    return result


def assoc_primes(I: MonomialIdeal) -> set:
    """Associated primes of ``A/I`` as supports of the irreducible components."""
    return {PrimeSupport(frozenset().union(*(support(g) for g in Q.gens)))
            for Q in irreducible_decomposition(I)}


@dataclass(frozen=True)
class StableAssociatedPrimes:
    primes: frozenset
    onset: int
    last_checked: int
    certified: bool = False


def stable_assoc_primes(I: MonomialIdeal, window: int = 3, max_power: int = 30) -> StableAssociatedPrimes:
    """Find ``Ass(A/I^n)`` once it has repeated for ``window`` consecutive ``n``.

    The onset is only observed, never certified; ``certified`` is always False.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    _require_proper_nonzero(I, "stable associated primes")
    current = None
    onset = 1
    repeats = 0
    J = MonomialIdeal.unit(I.dim)
    for n in range(1, max_power + 1):
        J = product(J, I)
        ass = frozenset(assoc_primes(J))
        if ass == current:
            repeats += 1
        else:
            current, onset, repeats = ass, n, 1
        if repeats >= window:
            return StableAssociatedPrimes(current, onset, n)
    raise ComputationLimitError(f"associated primes did not repeat {window} times up to n={max_power}")


def height(I: MonomialIdeal) -> int:
    return min(len(P.vars) for P in assoc_primes(I))


def is_m_primary(I: MonomialIdeal) -> bool:
    """True iff every variable has a pure power among the generators."""
    if not I.is_proper_nonzero:
        return False
    pure = {min(support(g)) for g in I.gens if len(support(g)) == 1}
    return len(pure) == I.dim


def pure_power_exponents(I: MonomialIdeal) -> ExponentVector:
    if not is_m_primary(I):
        raise IdealError("ideal is not m-primary")
    out = [0] * I.dim
    for g in I.gens:
        s = support(g)
        if len(s) == 1:
            i = min(s)
            out[i] = g[i]
    return tuple(out)


def num_min_gens(I: MonomialIdeal) -> int:
    return len(I.gens)


def is_monomial_regular_sequence(I: MonomialIdeal) -> bool:
    """Minimal generators have pairwise disjoint supports."""
    if not I.is_proper_nonzero:
        return False
    seen = set()
    for g in I.gens:
        s = support(g)
        if s & seen:
            return False
        seen |= s
    return True
