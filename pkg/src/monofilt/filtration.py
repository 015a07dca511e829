"""I-filtrations of a monomial ideal: adic, integral closure, Ratliff-Rush,
saturation and tight closure, with per-instance term caches."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ComputationLimitError, IdealError
from .ideal import MonomialIdeal, colon, product, saturation_colon
from .newton import integral_closure_power

TIGHT_CLOSURE_RATIONALE = (
    "ambient ring is a polynomial ring localized at its homogeneous maximal "
    "ideal, hence regular and weakly F-regular in positive characteristic, so "
    "every ideal is tightly closed and (I^n)* = I^n"
)


class FiltrationKind(str, enum.Enum):
    ADIC = "adic"
    INTEGRAL_CLOSURE = "integral_closure"
    RATLIFF_RUSH = "ratliff_rush"
    SATURATION = "saturation"
    TIGHT_CLOSURE = "tight_closure"


@dataclass(frozen=True)
class RatliffRushResult:
    closure: MonomialIdeal
    chain: tuple
    stable_from: int
    heuristic: bool
    reduction_check: bool


def ratliff_rush(I: MonomialIdeal, extra_steps: int = 3, max_steps: int = 60) -> RatliffRushResult:
    """Stable value of ``I^(n+1) : I^n``.

    The chain ``C_0 = I, C_n = I^(n+1) : I^n`` is ascending; the search stops
    once ``extra_steps`` further terms repeat the current one. That stop rule is
    not a certificate, so the result is always flagged ``heuristic``. As a
    sanity check the candidate ``T`` is tested for ``T I^m <= I^(m+1)`` on
    every computed ``m``.
    """
    if I.is_zero or I.is_unit:
        raise IdealError("Ratliff-Rush closure requires a proper nonzero ideal")
    if extra_steps < 1:
        raise ValueError("extra_steps must be positive")
    powers = [MonomialIdeal.unit(I.dim), I]
    chain = [I]
    run = 0
    n = 0
    while run < extra_steps:
        n += 1
        if n > max_steps:
            raise ComputationLimitError(f"Ratliff-Rush chain did not settle within {max_steps} steps")
        powers.append(product(powers[-1], I))
        chain.append(colon(powers[n + 1], powers[n]))
        run = run + 1 if chain[-1] == chain[-2] else 0
    T = chain[-1]
    stable_from = len(chain) - 1 - extra_steps
    ok = all(product(T, powers[m]).issubset(powers[m + 1]) for m in range(1, len(powers) - 1))
    return RatliffRushResult(T, tuple(chain), stable_from, True, ok)


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    """``I : m^infinity``; the fixpoint of the colon chain is certified."""
    if I.is_zero or I.is_unit:
        raise IdealError("saturation requires a proper nonzero ideal")
    return saturation_colon(I, MonomialIdeal.maximal(I.dim))[0]


@dataclass
class Filtration:
    kind: FiltrationKind
    base: MonomialIdeal
    rr_extra_steps: int = 3
    cache: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.kind = FiltrationKind(self.kind)
        if self.base.is_zero or self.base.is_unit:
            raise IdealError("filtrations need a proper nonzero base ideal")
        self._powers = [MonomialIdeal.unit(self.base.dim)]
        if self.kind is FiltrationKind.TIGHT_CLOSURE:
            self.meta["rationale"] = TIGHT_CLOSURE_RATIONALE
        if self.kind is FiltrationKind.RATLIFF_RUSH:
            self.meta["heuristic_terms"] = []

    def base_power(self, n: int) -> MonomialIdeal:
        while len(self._powers) <= n:
            self._powers.append(product(self._powers[-1], self.base))
        return self._powers[n]

    def term(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("filtration index must be non-negative")
        if n in self.cache:
            return self.cache[n]
        if n == 0:
            value = MonomialIdeal.unit(self.base.dim)
        elif self.kind in (FiltrationKind.ADIC, FiltrationKind.TIGHT_CLOSURE):
            value = self.base_power(n)
        elif self.kind is FiltrationKind.INTEGRAL_CLOSURE:
            value = integral_closure_power(self.base, n)
        elif self.kind is FiltrationKind.SATURATION:
            value = saturation(self.base_power(n))
        else:
            res = ratliff_rush(self.base_power(n), self.rr_extra_steps)
            self.meta["heuristic_terms"].append(n)
            value = res.closure
        self.cache[n] = value
        return value

    def terms(self, upto: int) -> list:
        return [self.term(n) for n in range(upto + 1)]


def term(F: Filtration, n: int) -> MonomialIdeal:
    return F.term(n)


def stability_index(F: Filtration, horizon: int):
    """Least ``n0`` with ``base * F_n == F_(n+1)`` for ``n0 <= n < horizon``, else ``None``.

    Only the window is checked; this is not a proof of stability.
    """
    if horizon < 2:
        raise ValueError("horizon must be at least 2")
    n0 = None
    for n in range(horizon - 1, -1, -1):
        if product(F.base, F.term(n)) == F.term(n + 1):
            n0 = n
        else:
            break
    return n0
