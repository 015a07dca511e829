"""Executable checks of the closure-gap dichotomies and Hilbert-coefficient
identities, with reports that carry their own evidence.

Logical direction is explicit in every report: a check either asserts a
conclusion on instances whose hypotheses are certified (monomial complete
intersections, whose associated graded ring is Cohen-Macaulay and hence
unmixed and equidimensional), or it refutes the hypothesis through the
contrapositive. Unmixedness is never claimed any other way.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import IdealError, InfiniteLengthError, MonofiltError
from .filtration import TIGHT_CLOSURE_RATIONALE, Filtration, FiltrationKind
from .hilbert import (
    DEFAULT_CONFIRM,
    DEFAULT_MAX_WINDOW,
    PolynomialFit,
    StabilizationError,
    VerdictTag,
    analytic_spread,
    classify_dichotomy,
    gap_function,
    hilbert_profile,
    length_between,
    spread_fit,
)
from .ideal import (
    MonomialIdeal,
    contains,
    is_m_primary,
    is_monomial_regular_sequence,
    minimalize,
    power,
)
from .newton import NewtonPolyhedron, newton_membership, power_membership_oracle


class Status(str, enum.Enum):
    HOLDS = "Holds"
    CONTRAPOSITIVE_WITNESS = "ContrapositiveWitness"
    INAPPLICABLE = "Inapplicable"
    INCONCLUSIVE = "Inconclusive"
    FAILS = "Fails"


@dataclass
class TheoremReport:
    theorem: str
    instance: dict
    status: Status
    claim: str
    evidence: dict = field(default_factory=dict)
    window: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "status": self.status.value,
            "claim": self.claim,
            "evidence": self.evidence,
            "window": self.window,
        }


def _instance(I: MonomialIdeal, **extra) -> dict:
    return {"dim": I.dim, "gens": [list(g) for g in I.gens], **extra}


def _window(fit: PolynomialFit) -> dict:
    return {"first_n": fit.first_n, "last_n": fit.last_n, "confirm": fit.confirm_window}


def _closure_gap(I, N, confirm, max_window):
    return gap_function(Filtration(FiltrationKind.INTEGRAL_CLOSURE, I), Filtration(FiltrationKind.ADIC, I),
                        N, confirm, max_window)


def check_dichotomy(I: MonomialIdeal, N=None, confirm=DEFAULT_CONFIRM, max_window=DEFAULT_MAX_WINDOW) -> TheoremReport:
    """Closure gap ``lambda(closure(I^n)/I^n)`` is identically zero or eventually of degree ``d - 1``.

    Asserted only when ``I`` is a monomial complete intersection.
    """
    if not is_m_primary(I):
        raise IdealError("the closure dichotomy check needs an m-primary ideal")
    gap = _closure_gap(I, N, confirm, max_window)
    d = I.dim
    ci = is_monomial_regular_sequence(I)
    v = gap.verdict
    if v.tag is VerdictTag.UNSTABILIZED:
        status = Status.INCONCLUSIVE
    elif not ci:
        status = Status.INAPPLICABLE
    elif v.tag is VerdictTag.ALL_ZERO or (v.tag is VerdictTag.EVENTUALLY_DEGREE and v.degree == d - 1):
        status = Status.HOLDS
    else:
        status = Status.FAILS
    return TheoremReport(
        "closure-dichotomy",
        _instance(I, upper="integral_closure", lower="adic"),
        status,
        "G_I(A) Cohen-Macaulay (monomial complete intersection) => gap is AllZero or EventuallyDegree(d-1)",
        {"gap": gap.as_dict(), "complete_intersection": ci, "verdict": str(v)},
        _window(gap.fit),
    )


def unmixedness_counterwitness(I: MonomialIdeal, N=None, confirm=DEFAULT_CONFIRM,
                               max_window=DEFAULT_MAX_WINDOW) -> TheoremReport:
    """Refute "G_I(A) unmixed and equidimensional" when the closure gap is nonzero of low degree."""
    if not is_m_primary(I):
        raise IdealError("the counterwitness check needs an m-primary ideal")
    gap = _closure_gap(I, N, confirm, max_window)
    fires = gap.verdict.tag in (VerdictTag.ANOMALOUS_BELOW_TOP, VerdictTag.EVENTUALLY_ZERO)
    return TheoremReport(
        "unmixedness-counterwitness",
        _instance(I, upper="integral_closure", lower="adic"),
        Status.CONTRAPOSITIVE_WITNESS if fires else Status.INCONCLUSIVE,
        "gap nonzero with eventual degree < d-1 => G_I(A) is not both unmixed and equidimensional",
        {"gap": gap.as_dict(), "verdict": str(gap.verdict)},
        _window(gap.fit),
    )


def check_saturation_dichotomy(I: MonomialIdeal, N: int = 6, confirm=DEFAULT_CONFIRM,
                               max_window=DEFAULT_MAX_WINDOW) -> TheoremReport:
    """Either every power is saturated or the analytic spread equals ``d``.

    A nonzero saturation gap together with ``l(I) < d`` is a contrapositive
    witness against unmixedness of ``G_I(A)``.
    """
    if I.is_zero or I.is_unit:
        raise IdealError("the saturation check needs a proper nonzero ideal")
    sat = Filtration(FiltrationKind.SATURATION, I)
    adic = Filtration(FiltrationKind.ADIC, I)
    gaps = [length_between(sat.term(n), adic.term(n)) for n in range(1, N + 1)]
    values, fit = spread_fit(I, None, confirm, max_window)
    evidence = {"saturation_gap": gaps, "mu_values": values, "mu_fit": fit.as_dict(),
                "complete_intersection": is_monomial_regular_sequence(I)}
    window = {"first_n": 1, "last_n": N, "confirm": confirm}
    if not fit.conclusive:
        return TheoremReport("saturation-dichotomy", _instance(I), Status.INCONCLUSIVE,
                             "analytic spread undetermined on the window", evidence, window)
    spread = fit.degree + 1
    evidence["analytic_spread"] = spread
    fires = any(gaps) and spread < I.dim
    return TheoremReport(
        "saturation-dichotomy",
        _instance(I),
        Status.CONTRAPOSITIVE_WITNESS if fires else Status.HOLDS,
        "saturation gap nonzero and l(I) < d => G_I(A) is not both unmixed and equidimensional",
        evidence,
        window,
    )


def _fits_check(e, ebar, estar, gap):
    d = len(e) - 1
    lead = gap.fit.coefficient_in_degree(d - 1) if gap.verdict.tag is not VerdictTag.ALL_ZERO else 0
    return {
        "e0_agree": e[0] == ebar[0] == estar[0],
        "gap_leading_is_e1_difference": lead == ebar[1] - e[1],
        "e1bar_nonnegative": ebar[1] >= 0,
        "e1_star_equals_e1_equals_zero": estar[1] == e[1] == 0,
        "equality_iff_gap_zero": (ebar[1] == e[1]) == (gap.verdict.tag is VerdictTag.ALL_ZERO),
        "gap_leading_coefficient": lead,
    }


def check_e1_identities(I: MonomialIdeal, N=None, confirm=DEFAULT_CONFIRM, max_window=DEFAULT_MAX_WINDOW) -> TheoremReport:
    """Hilbert-coefficient identities for a monomial complete intersection.

    Checks ``e_0 = e0bar = e0*``, that the closure gap leads with
    ``e1bar - e_1``, that ``e1bar >= 0 = e_1 = e1*`` (the lower bound on a
    regular ambient ring, where local cohomology below the top vanishes), and
    that ``e1bar = e_1`` exactly when the gap vanishes.
    """
    inst = _instance(I)
    if not (is_m_primary(I) and is_monomial_regular_sequence(I)):
        return TheoremReport("e1-identities", inst, Status.INAPPLICABLE,
                             "needs an m-primary monomial complete intersection")
    adic = hilbert_profile(Filtration(FiltrationKind.ADIC, I), N, confirm, max_window)
    closure = hilbert_profile(Filtration(FiltrationKind.INTEGRAL_CLOSURE, I), N, confirm, max_window)
    tight = hilbert_profile(Filtration(FiltrationKind.TIGHT_CLOSURE, I), N, confirm, max_window)
    gap = _closure_gap(I, N, confirm, max_window)
    evidence = {"adic": adic.as_dict(), "integral_closure": closure.as_dict(), "tight_closure": tight.as_dict(),
                "gap": gap.as_dict()}
    if None in (adic.hilbert_coeffs, closure.hilbert_coeffs, tight.hilbert_coeffs) or not gap.fit.conclusive:
        return TheoremReport("e1-identities", inst, Status.INCONCLUSIVE, "fits did not settle", evidence,
                             _window(adic.fit))
    checks = _fits_check(adic.hilbert_coeffs, closure.hilbert_coeffs, tight.hilbert_coeffs, gap)
    evidence["checks"] = checks
    ok = all(v for k, v in checks.items() if k != "gap_leading_coefficient")
    return TheoremReport("e1-identities", inst, Status.HOLDS if ok else Status.FAILS,
                         "e0 = e0bar = e0*; gap leads with e1bar - e1; e1bar >= 0 = e1 = e1*; "
                         "e1bar = e1 iff closure gap is zero",
                         evidence, _window(adic.fit))


def check_upper_bound_lemma(I: MonomialIdeal, F: Filtration, G: Filtration, N=None, confirm=DEFAULT_CONFIRM,
                            max_window=DEFAULT_MAX_WINDOW) -> TheoremReport:
    """Eventual degree of ``lambda(F_n/G_n)`` is at most ``l(I) - 1``."""
    inst = _instance(I, upper=F.kind.value, lower=G.kind.value)
    try:
        gap = gap_function(F, G, N, confirm, max_window)
    except InfiniteLengthError as exc:
        return TheoremReport("gap-degree-bound", inst, Status.INAPPLICABLE, str(exc))
    try:
        spread = analytic_spread(I, None, confirm, max_window)
    except StabilizationError as exc:
        return TheoremReport("gap-degree-bound", inst, Status.INCONCLUSIVE, str(exc), {"gap": gap.as_dict()})
    evidence = {"gap": gap.as_dict(), "analytic_spread": spread}
    if not gap.fit.conclusive:
        return TheoremReport("gap-degree-bound", inst, Status.INCONCLUSIVE, "gap did not settle", evidence,
                             _window(gap.fit))
    ok = gap.fit.degree <= spread - 1
    return TheoremReport("gap-degree-bound", inst, Status.HOLDS if ok else Status.FAILS,
                         "deg(gap) <= l(I) - 1", evidence, _window(gap.fit))


def check_tight_closure(I: MonomialIdeal, N: int = 4) -> TheoremReport:
    """Tight-closure dichotomy; on a regular ambient every power is tightly closed."""
    F = Filtration(FiltrationKind.TIGHT_CLOSURE, I)
    same = all(F.term(n) == power(I, n) for n in range(1, N + 1))
    return TheoremReport("tight-closure-dichotomy", _instance(I), Status.HOLDS if same else Status.FAILS,
                         "(I^n)* = I^n for all n >= 1", {"rationale": TIGHT_CLOSURE_RATIONALE},
                         {"first_n": 1, "last_n": N})


# -- replay ------------------------------------------------------------------------

def _fit_from(d: dict) -> PolynomialFit:
    return PolynomialFit(d["degree"], tuple(d["coeffs"]), d["stable_from"], d["first_n"], d["last_n"],
                         d["confirm_window"])


def _replay_gap(gap: dict):
    fit = _fit_from(gap["fit"])
    values = gap["values"]
    if fit.conclusive:
        for i, v in enumerate(values):
            n = fit.first_n + i
            if n >= fit.stable_from and fit(n) != v:
                return None
    return classify_dichotomy(values, fit, gap["verdict"]["dim"])


def replay(report) -> bool:
    """Recheck a report's conclusion from its evidence only (no ideal arithmetic)."""
    r = report.as_dict() if isinstance(report, TheoremReport) else report
    ev = r["evidence"]
    status = Status(r["status"])
    theorem = r["theorem"]
    if theorem in ("closure-dichotomy", "unmixedness-counterwitness"):
        v = _replay_gap(ev["gap"])
        if v is None or str(v) != ev["verdict"]:
            return False
        d = v.dim
        if theorem == "closure-dichotomy":
            if status is Status.HOLDS:
                return ev["complete_intersection"] and (v.tag is VerdictTag.ALL_ZERO or
                                                        (v.tag is VerdictTag.EVENTUALLY_DEGREE and v.degree == d - 1))
            return True
        fires = v.tag in (VerdictTag.ANOMALOUS_BELOW_TOP, VerdictTag.EVENTUALLY_ZERO)
        return fires == (status is Status.CONTRAPOSITIVE_WITNESS)
    if theorem == "saturation-dichotomy":
        if status is Status.INCONCLUSIVE:
            return True
        fit = _fit_from(ev["mu_fit"])
        if any(fit(fit.first_n + i) != v for i, v in enumerate(ev["mu_values"]) if fit.first_n + i >= fit.stable_from):
            return False
        fires = any(ev["saturation_gap"]) and fit.degree + 1 < r["instance"]["dim"]
        return fires == (status is Status.CONTRAPOSITIVE_WITNESS)
    if theorem == "e1-identities":
        if status is not Status.HOLDS:
            return True
        e, eb, es = (ev[k]["hilbert_coeffs"] for k in ("adic", "integral_closure", "tight_closure"))
        v = _replay_gap(ev["gap"])
        if v is None:
            return False
        d = len(e) - 1
        fit = _fit_from(ev["gap"]["fit"])
        lead = 0 if v.tag is VerdictTag.ALL_ZERO else fit.coefficient_in_degree(d - 1)
        return (e[0] == eb[0] == es[0] and lead == eb[1] - e[1] and eb[1] >= 0 and es[1] == e[1] == 0
                and (eb[1] == e[1]) == (v.tag is VerdictTag.ALL_ZERO))
    if theorem == "gap-degree-bound":
        if status is not Status.HOLDS:
            return True
        v = _replay_gap(ev["gap"])
        return v is not None and (v.degree if v.degree is not None else 0) <= ev["analytic_spread"] - 1
    return status is not Status.FAILS


# -- fixtures ------------------------------------------------------------------------

def _m(d):
    return MonomialIdeal.maximal(d)


def _report(name, gens, ok, evidence):
    return TheoremReport(f"fixture:{name}", {"dim": 2, "gens": [list(g) for g in gens]},
                         Status.HOLDS if ok else Status.FAILS, "stated fixture values reproduce exactly", evidence)


def _fixture_square_ci(upto=20):
    I = minimalize([(2, 0), (0, 2)], 2)
    out = []
    powers_ok = all(power(I, n) == minimalize([(2 * n - 2 * k, 2 * k) for k in range(n + 1)], 2)
                    for n in range(1, upto + 1))
    out.append(_report("square_ci:powers", I.gens, powers_ok, {"n_max": upto}))
    closure = Filtration(FiltrationKind.INTEGRAL_CLOSURE, I)
    adic = Filtration(FiltrationKind.ADIC, I)
    closure_ok = all(closure.term(n) == power(_m(2), 2 * n) for n in range(1, upto + 1))
    out.append(_report("square_ci:closure_is_m2n", I.gens, closure_ok, {"n_max": upto}))
    gaps = [length_between(closure.term(n), adic.term(n)) for n in range(1, upto + 1)]
    out.append(_report("square_ci:gap_equals_n", I.gens, gaps == list(range(1, upto + 1)), {"gap": gaps}))
    mu = [(len(power(_m(2), 2 * n).gens), len(adic.term(n).gens)) for n in range(1, upto + 1)]
    out.append(_report("square_ci:mu_difference", I.gens,
                       all(a - b == n for n, (a, b) in enumerate(mu, 1)) and all(a == 2 * n + 1 for n, (a, _) in enumerate(mu, 1)),
                       {"mu_pairs": [list(p) for p in mu]}))
    P = NewtonPolyhedron.of(I)
    member = {"xy": newton_membership(P, (1, 1)), "x": newton_membership(P, (1, 0)), "y": newton_membership(P, (0, 1))}
    l = power_membership_oracle(I, (1, 1), 6)
    out.append(_report("square_ci:membership", I.gens,
                       member == {"xy": True, "x": False, "y": False} and l == 2 and not contains(I, (1, 1)),
                       {"newton": member, "oracle_l_for_xy": l}))
    rep = check_dichotomy(I)
    out.append(_report("square_ci:verdict", I.gens,
                       rep.status is Status.HOLDS and rep.evidence["verdict"] == "EventuallyDegree(1)",
                       {"verdict": rep.evidence["verdict"]}))
    sat_ok = all(Filtration(FiltrationKind.SATURATION, I).term(n).is_unit for n in range(1, 6))
    out.append(_report("square_ci:saturation_is_unit", I.gens, sat_ok, {"n_max": 5}))
    return out


def _fixture_cubic(upto=20):
    I = minimalize([(3, 0), (2, 1), (0, 3)], 2)
    out = []
    adic = Filtration(FiltrationKind.ADIC, I)
    closure = Filtration(FiltrationKind.INTEGRAL_CLOSURE, I)
    missing_ok = True
    for n in range(1, 11):
        In = adic.term(n)
        absent = [(a, 3 * n - a) for a in range(3 * n + 1) if not contains(In, (a, 3 * n - a))]
        missing_ok &= absent == [(1, 3 * n - 1)]
    out.append(_report("cubic:powers_miss_only_xy^(3n-1)", I.gens, missing_ok, {"n_max": 10}))
    closure_ok = all(closure.term(n) == power(_m(2), 3 * n) for n in range(1, upto + 1))
    out.append(_report("cubic:closure_is_m3n", I.gens, closure_ok, {"n_max": upto}))
    gaps = [length_between(closure.term(n), adic.term(n)) for n in range(1, upto + 1)]
    out.append(_report("cubic:gap_is_one", I.gens, gaps == [1] * upto, {"gap": gaps}))
    spread = analytic_spread(I)
    out.append(_report("cubic:analytic_spread", I.gens, spread == 2, {"analytic_spread": spread}))
    l = power_membership_oracle(I, (1, 2), 6)
    out.append(_report("cubic:oracle_xy2", I.gens, l == 2, {"oracle_l": l}))
    rep = check_dichotomy(I)
    wit = unmixedness_counterwitness(I)
    out.append(_report("cubic:verdict", I.gens,
                       rep.evidence["verdict"] == "AnomalousBelowTop(0)" and wit.status is Status.CONTRAPOSITIVE_WITNESS,
                       {"verdict": rep.evidence["verdict"], "counterwitness": wit.status.value}))
    return out


FIXTURES = {"square_ci": _fixture_square_ci, "cubic": _fixture_cubic}


def run_fixtures(names=None, extra_ideals=()) -> list:
    """Reproduce the stated fixture values; ``extra_ideals`` are analyzed without assertions."""
    names = list(FIXTURES) if names is None else list(names)
    reports = []
    for name in names:
        reports.extend(FIXTURES[name]())
    for I in extra_ideals:
        try:
            rep = check_dichotomy(I)
        except MonofiltError as exc:
            rep = TheoremReport("closure-dichotomy", _instance(I), Status.INAPPLICABLE, str(exc))
        reports.append(rep)
    return reports
