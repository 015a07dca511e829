"""Lengths, Hilbert-Samuel functions, polynomial detection and closure gaps."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import numpy as np

from .errors import IdealError, InfiniteLengthError
from .filtration import Filtration
from .ideal import (
    MonomialIdeal,
    _lookup,
    colon,
    is_m_primary,
    pure_power_exponents,
    profile_of,
)

DEFAULT_CONFIRM = 4
DEFAULT_MAX_WINDOW = 64


def default_window(d: int, confirm: int = DEFAULT_CONFIRM) -> int:
    return max(12, 4 * d + confirm)


def binom(m: int, k: int) -> int:
    """``C(m, k)`` as a polynomial in ``m`` (valid for negative ``m``); 0 for ``k < 0``."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= m - j
    return num // factorial(k)


# -- lengths -----------------------------------------------------------------

def length_quotient(J: MonomialIdeal) -> int:
    """``lambda(A/J)``: the number of standard monomials of an m-primary ``J``."""
    if J.is_unit:
        return 0
    b = pure_power_exponents(J)
    if J.dim == 1:
        return b[0]
    h = profile_of(J)
    return int(h[tuple(slice(0, bi) for bi in b[1:])].sum())


def _finite_colength(J: MonomialIdeal) -> bool:
    return J.is_unit or is_m_primary(J)


def length_between(B: MonomialIdeal, S: MonomialIdeal) -> int:
    """``lambda(B/S)`` for ``S <= B``, counted as monomials of ``B`` outside ``S``.

    Finiteness is certified by ``S : B`` being m-primary. If ``m^k <= S : B``
    then any monomial ``g w`` with ``g`` a generator of ``B`` and
    ``deg w >= k`` lies in ``S``, so it is enough to enumerate ``g w`` with
    ``deg w < k``. With pure powers ``x_i^(p_i)`` in ``S : B`` one may take
    ``k = sum(p_i - 1) + 1``.
    """
    if not S.issubset(B):
        raise IdealError("length_between needs S contained in B")
    if B == S:
        return 0
    if _finite_colength(B) and _finite_colength(S):
        return length_quotient(S) - length_quotient(B)
    K = colon(S, B)
    if not _finite_colength(K):
        raise InfiniteLengthError("B/S has infinite length (S : B is not m-primary)")
    d = B.dim
    k = sum(p - 1 for p in pure_power_exponents(K)) + 1
    W = np.array([np.bincount(c, minlength=d) for t in range(k) for c in combinations_with_replacement(range(d), t)]
                 if d > 0 else [], dtype=np.int64).reshape(-1, d)
    cand = (B.array()[:, None, :] + W[None, :, :]).reshape(-1, d)
    cand = np.unique(cand, axis=0)
    h = profile_of(S)
    outside = cand[:, 0] < _lookup(h, cand[:, 1:])
    return int(outside.sum())


# -- polynomial fits ---------------------------------------------------------

@dataclass(frozen=True)
class PolynomialFit:
    """Eventual polynomial ``sum_i coeffs[i] * C(n + degree - i, degree - i)``.

    ``degree == -1`` is the zero function; ``degree is None`` means no
    stabilization was observed on the window ``[first_n, last_n]``.
    """

    degree: int | None
    coeffs: tuple
    stable_from: int | None
    first_n: int
    last_n: int
    confirm_window: int

    @property
    def conclusive(self) -> bool:
        return self.degree is not None

    def __call__(self, n: int) -> int:
        if self.degree is None:
            raise ValueError("inconclusive fit cannot be evaluated")
        r = self.degree
        return sum(c * binom(n + r - i, r - i) for i, c in enumerate(self.coeffs))

    def coefficient_in_degree(self, k: int) -> int:
        """Coefficient of ``C(n + k, k)`` when the fit is written in the degree-``k`` basis."""
        if self.degree is None:
            raise ValueError("inconclusive fit")
        if self.degree > k:
            raise ValueError(f"fit has degree {self.degree} > {k}")
        return self.coeffs[0] if self.degree == k else 0

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": list(self.coeffs),
            "stable_from": self.stable_from,
            "first_n": self.first_n,
            "last_n": self.last_n,
            "confirm_window": self.confirm_window,
        }


def _solve_exact(M, rhs):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(M, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col] / A[col][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][-1] / A[i][i] for i in range(n)]


def _differences(values, order):
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def detect_polynomial(seq, confirm_window: int = DEFAULT_CONFIRM, start: int = 0) -> PolynomialFit:
    """Least-degree eventual polynomial through ``seq`` (``seq[i]`` is the value at ``start + i``).

    Degree ``r`` is accepted when the ``(r+1)``-st differences vanish on a tail
    of at least ``confirm_window`` entries. Returns an inconclusive fit if no
    degree qualifies.
    """
    values = [int(v) for v in seq]
    L = len(values)
    if L < confirm_window + 4:
        raise ValueError(f"need at least {confirm_window + 4} values, got {L}")
    last = start + L - 1
    r = -1
    while L - (r + 1) >= confirm_window:
        D = _differences(values, r + 1)
        t = len(D)
        while t > 0 and D[t - 1] == 0:
            t -= 1
        if len(D) - t >= confirm_window:
            coeffs = _fit_coeffs(values[t:t + r + 1], start + t, r)
            fit = PolynomialFit(r, coeffs, start + t, start, last, confirm_window)
            if any(fit(start + i) != v for i, v in enumerate(values) if i >= t):
                raise ArithmeticError("fitted polynomial disagrees with the sampled tail")
            return fit
        r += 1
    return PolynomialFit(None, (), None, start, last, confirm_window)


def _fit_coeffs(vals, n0, r):
    if r < 0:
        return ()
    M = [[binom(n + r - i, r - i) for i in range(r + 1)] for n in range(n0, n0 + r + 1)]
    sol = _solve_exact(M, vals)
    if any(x.denominator != 1 for x in sol):
        raise ArithmeticError("non-integral binomial coefficients; the fit is inconsistent")
    return tuple(int(x) for x in sol)


def hilbert_coefficients(fit: PolynomialFit, d: int) -> tuple:
    """``(e_0, ..., e_d)`` with ``P(n) = sum (-1)^i e_i C(n + d - i, d - i)``."""
    if fit.degree != d:
        raise ValueError(f"fit has degree {fit.degree}, expected {d}")
    return tuple((-1) ** i * c for i, c in enumerate(fit.coeffs))


# -- Hilbert-Samuel profiles ---------------------------------------------------

@dataclass(frozen=True)
class HilbertProfile:
    kind: str
    values: tuple
    fit: PolynomialFit
    hilbert_coeffs: tuple | None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "values": list(self.values),
            "fit": self.fit.as_dict(),
            "hilbert_coeffs": None if self.hilbert_coeffs is None else list(self.hilbert_coeffs),
        }


def hilbert_samuel_sequence(F: Filtration, N: int) -> list:
    """``lambda(A/F_(n+1))`` for ``n = 0..N``."""
    if not is_m_primary(F.base):
        raise IdealError("Hilbert-Samuel functions need an m-primary base ideal")
    if N < F.base.dim + 3:
        raise ValueError("window too short for the ambient dimension")
    return [length_quotient(F.term(n + 1)) for n in range(N + 1)]


def hilbert_profile(F: Filtration, N: int | None = None, confirm_window: int = DEFAULT_CONFIRM,
                    max_window: int = DEFAULT_MAX_WINDOW) -> HilbertProfile:
    """Hilbert-Samuel values and fit, doubling the window until the fit settles."""
    d = F.base.dim
    N = max(N or default_window(d, confirm_window), confirm_window + 3, d + 3)
    while True:
        values = hilbert_samuel_sequence(F, N)
        fit = detect_polynomial(values, confirm_window, start=0)
        if fit.conclusive or N >= max_window:
            break
        N = min(2 * N, max_window)
    coeffs = hilbert_coefficients(fit, d) if fit.degree == d else None
    return HilbertProfile(F.kind.value, tuple(values), fit, coeffs)


# -- analytic spread -----------------------------------------------------------

def mu_sequence(I: MonomialIdeal, horizon: int) -> list:
    """``mu(I^n) = lambda(I^n / m I^n)`` for ``n = 1..horizon``."""
    F = Filtration("adic", I)
    return [len(F.term(n).gens) for n in range(1, horizon + 1)]


class StabilizationError(RuntimeError):
    pass


def spread_fit(I: MonomialIdeal, horizon: int | None = None, confirm_window: int = DEFAULT_CONFIRM,
               max_window: int = DEFAULT_MAX_WINDOW):
    if I.is_zero or I.is_unit:
        raise IdealError("analytic spread requires a proper nonzero ideal")
    horizon = max(horizon or default_window(I.dim, confirm_window), confirm_window + 4)
    while True:
        values = mu_sequence(I, horizon)
        fit = detect_polynomial(values, confirm_window, start=1)
        if fit.conclusive or horizon >= max_window:
            return values, fit
        horizon = min(2 * horizon, max_window)


def analytic_spread(I: MonomialIdeal, horizon: int | None = None, confirm_window: int = DEFAULT_CONFIRM,
                    max_window: int = DEFAULT_MAX_WINDOW) -> int:
    """``deg(n -> mu(I^n)) + 1``; raises :class:`StabilizationError` when the window never settles."""
    _, fit = spread_fit(I, horizon, confirm_window, max_window)
    if not fit.conclusive:
        raise StabilizationError(f"mu(I^n) did not stabilize up to n={fit.last_n}")
    return fit.degree + 1


# -- gaps and the dichotomy --------------------------------------------------------

class VerdictTag(str, enum.Enum):
    ALL_ZERO = "AllZero"
    EVENTUALLY_DEGREE = "EventuallyDegree"
    ANOMALOUS_BELOW_TOP = "AnomalousBelowTop"
    EVENTUALLY_ZERO = "EventuallyZero"
    UNSTABILIZED = "Unstabilized"


@dataclass(frozen=True)
class DichotomyVerdict:
    tag: VerdictTag
    degree: int | None
    dim: int
    first_n: int
    last_n: int

    def __str__(self):
        if self.tag in (VerdictTag.EVENTUALLY_DEGREE, VerdictTag.ANOMALOUS_BELOW_TOP):
            return f"{self.tag.value}({self.degree})"
        return self.tag.value

    def as_dict(self) -> dict:
        return {"tag": self.tag.value, "degree": self.degree, "dim": self.dim,
                "first_n": self.first_n, "last_n": self.last_n}


@dataclass(frozen=True)
class GapAnalysis:
    upper: str
    lower: str
    values: tuple
    fit: PolynomialFit
    verdict: DichotomyVerdict

    def as_dict(self) -> dict:
        return {"upper": self.upper, "lower": self.lower, "values": list(self.values),
                "fit": self.fit.as_dict(), "verdict": self.verdict.as_dict()}


def gap_values(F: Filtration, G: Filtration, N: int) -> list:
    """``lambda(F_n / G_n)`` for ``n = 1..N``."""
    out = []
    for n in range(1, N + 1):
        upper, lower = F.term(n), G.term(n)
        if not lower.issubset(upper):
            raise IdealError(f"containment G_{n} <= F_{n} fails")
        out.append(length_between(upper, lower))
    return out


def classify_dichotomy(values, fit: PolynomialFit, d: int) -> DichotomyVerdict:
    if all(v == 0 for v in values):
        return DichotomyVerdict(VerdictTag.ALL_ZERO, -1, d, fit.first_n, fit.last_n)
    if not fit.conclusive:
        return DichotomyVerdict(VerdictTag.UNSTABILIZED, None, d, fit.first_n, fit.last_n)
    k = fit.degree
    if k < 0:
        tag = VerdictTag.EVENTUALLY_ZERO
    elif k < d - 1:
        tag = VerdictTag.ANOMALOUS_BELOW_TOP
    else:
        tag = VerdictTag.EVENTUALLY_DEGREE
    return DichotomyVerdict(tag, k, d, fit.first_n, fit.last_n)


def gap_function(F: Filtration, G: Filtration, N: int | None = None, confirm_window: int = DEFAULT_CONFIRM,
                 max_window: int = DEFAULT_MAX_WINDOW) -> GapAnalysis:
    d = F.base.dim
    N = max(N or default_window(d, confirm_window), confirm_window + 4)
    while True:
        values = gap_values(F, G, N)
        fit = detect_polynomial(values, confirm_window, start=1)
        if fit.conclusive or N >= max_window:
            break
        N = min(2 * N, max_window)
    return GapAnalysis(F.kind.value, G.kind.value, tuple(values), fit, classify_dichotomy(values, fit, d))
