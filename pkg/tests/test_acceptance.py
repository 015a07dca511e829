"""The eight acceptance criteria, each at its stated tolerance.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are also
collected in ``RESULTS`` and repeated in the pytest terminal summary.
Run standalone with ``python tests/test_acceptance.py``.
"""
import time

import numpy as np

import oracles
from monofilt import (
    Filtration,
    MonomialIdeal,
    NewtonPolyhedron,
    Status,
    analytic_spread,
    contains,
    gap_function,
    hilbert_profile,
    integral_closure_power,
    length_between,
    newton_membership,
    parse_ideal,
    power,
    power_membership_oracle,
    ratliff_rush,
    saturation,
)
from monofilt.hilbert import hilbert_samuel_sequence
from monofilt.ideal import is_m_primary, is_monomial_regular_sequence, minimalize
from monofilt.report import CorpusConfig, corpus_run, generate_corpus, validate_report
from monofilt.theorems import check_saturation_dichotomy, check_upper_bound_lemma, unmixedness_counterwitness

RESULTS = []

SQ = parse_ideal("(x^2, y^2)", "xy")
CUBIC = parse_ideal("(x^3, x^2*y, y^3)", "xy")
m2 = MonomialIdeal.maximal(2)


def record(k, title, ok, detail=""):
    line = f"AC{k} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def _random_ideals(seed, count, d=2, max_exp=4, max_gens=4):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        k = int(rng.integers(1, max_gens + 1))
        gens = [tuple(int(e) for e in rng.integers(0, max_exp + 1, size=d)) for _ in range(k)]
        gens = [g for g in gens if any(g)]
        if gens:
            out.append(minimalize(gens, d))
    return out


def _gappy_equigenerated(seed, count):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        D = int(rng.integers(4, 7))
        keep = [(D - i, i) for i in range(1, D) if rng.random() < 0.5]
        out.append(minimalize([(D, 0), (0, D)] + keep, 2))
    return out


def test_ac1_square_complete_intersection():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 21):
        C = integral_closure_power(SQ, n)
        if C != power(m2, 2 * n) or length_between(C, power(SQ, n)) != n:
            bad.append(n)
    dt = time.perf_counter() - t0
    record(1, "(x^2,y^2): closure of I^n = m^2n and gap = n for n <= 20, under 5 s",
           not bad and dt < 5, f"{dt:.2f} s" + (f", failing n={bad}" if bad else ""))


def test_ac2_cubic_anomaly():
    closure_ok = all(integral_closure_power(CUBIC, n) == power(m2, 3 * n) for n in range(1, 21))
    gap = gap_function(Filtration("integral_closure", CUBIC), Filtration("adic", CUBIC), 20)
    gaps_ok = list(gap.values) == [1] * 20
    ell = analytic_spread(CUBIC)
    witness = unmixedness_counterwitness(CUBIC)
    ok = (closure_ok and gaps_ok and ell == 2 and str(gap.verdict) == "AnomalousBelowTop(0)"
          and witness.status is Status.CONTRAPOSITIVE_WITNESS)
    record(2, "(x^3,x^2y,y^3): closure = m^3n, gap = 1 for n <= 20, l = 2, AnomalousBelowTop(0), witness fires",
           ok, f"l={ell}, verdict={gap.verdict}, witness={witness.status.value}")


def test_ac3_hilbert_coefficients():
    # box-count oracle first: lambda(A/I^(n+1)) and lambda(A/m^(2n+2)) for n <= 12
    adic_seq = hilbert_samuel_sequence(Filtration("adic", SQ), 12)
    clos_seq = hilbert_samuel_sequence(Filtration("integral_closure", SQ), 12)
    oracle_adic = [oracles.colength(oracles.power(list(SQ.gens), n + 1), 2) for n in range(13)]
    oracle_clos = [oracles.colength(oracles.power(list(m2.gens), 2 * n + 2), 2) for n in range(13)]
    oracle_ok = adic_seq == oracle_adic and clos_seq == oracle_clos
    e = hilbert_profile(Filtration("adic", SQ)).hilbert_coeffs
    ebar = hilbert_profile(Filtration("integral_closure", SQ)).hilbert_coeffs
    gap = gap_function(Filtration("integral_closure", SQ), Filtration("adic", SQ))
    lead = gap.fit.coefficient_in_degree(1)
    ok = oracle_ok and e == (4, 0, 0) and ebar == (4, 1, 0) and lead == ebar[1] - e[1] == 1
    record(3, "(x^2,y^2): e = [4,0,0], ebar = [4,1,0], gap leads with ebar1 - e1 = 1 (box-count oracle n <= 12)",
           ok, f"e={list(e)}, ebar={list(ebar)}, lead={lead}, oracle={'ok' if oracle_ok else 'MISMATCH'}")


def test_ac4_dichotomy_suite():
    t0 = time.perf_counter()
    failures = []
    count = 0
    for d, seed in ((2, 402), (3, 403)):
        for I in generate_corpus(CorpusConfig(seed=seed, count=50, dim=d, family="complete-intersection", max_exp=5)):
            count += 1
            F, G = Filtration("integral_closure", I), Filtration("adic", I)
            gap = gap_function(F, G)
            v = gap.verdict
            verdict_ok = str(v) in ("AllZero", f"EventuallyDegree({d - 1})")
            bound = check_upper_bound_lemma(I, F, G)
            e0 = hilbert_profile(G).hilbert_coeffs[0]
            ebar0 = hilbert_profile(F).hilbert_coeffs[0]
            if not (verdict_ok and bound.status is Status.HOLDS and e0 == ebar0):
                failures.append((I.gens, str(v), bound.status.value, e0, ebar0))
    dt = time.perf_counter() - t0
    record(4, "100 seeded monomial CIs (d in {2,3}, exponents <= 5): verdict, degree bound, e0 = ebar0, under 120 s",
           count == 100 and not failures and dt < 120, f"{count} instances, {len(failures)} failures, {dt:.1f} s")


def test_ac5_ratliff_rush():
    I = parse_ideal("(x^4, x^3*y, x*y^3, y^4)", "xy")
    rr = ratliff_rush(I).closure
    I2 = power(I, 2)
    oracle = all(oracles.member(I2.gens, (2 + g[0], 2 + g[1])) for g in I.gens)
    fixture_ok = contains(rr, (2, 2)) and not contains(I, (2, 2)) and oracle

    # powers of a nonzero ideal in a domain have positive grade, so RR(I^n) = I^n for n >> 0;
    # detect the onset on n <= 6 and confirm it persists through n = 8. Half the sample is
    # equigenerated with missing middle monomials, where RR(I^n) != I^n happens for small n.
    window, extended = 6, 8
    bad = []
    undetected = 0
    nontrivial = 0
    for J in _random_ideals(seed=505, count=25) + _gappy_equigenerated(seed=5050, count=25):
        equal = [ratliff_rush(power(J, n)).closure == power(J, n) for n in range(1, extended + 1)]
        nontrivial += not all(equal)
        onset = None
        for n in range(window, 0, -1):
            if equal[n - 1]:
                onset = n
            else:
                break
        if onset is None:
            undetected += 1
        elif not all(equal[onset - 1:]):
            bad.append(J.gens)
    ok = fixture_ok and not bad and undetected == 0 and nontrivial > 0
    record(5, "RR: x^2y^2 in RR closure of (x^4,x^3y,xy^3,y^4) minus I; 50 random ideals keep RR(I^n) = I^n past onset",
           ok, f"oracle={'ok' if oracle else 'FAIL'}, {nontrivial} with RR(I^n) != I^n early, "
               f"{len(bad)} violations, {undetected} without onset")


def _random_regular_sequence(rng, d=3, max_exp=4):
    vars_ = list(rng.permutation(d))
    k = int(rng.integers(1, d + 1))
    cuts = sorted(rng.choice(range(1, d), size=k - 1, replace=False)) if k > 1 else []
    blocks = np.split(np.array(vars_), cuts)
    gens = []
    for b in blocks:
        g = [0] * d
        for i in b:
            g[int(i)] = int(rng.integers(1, max_exp + 1))
        gens.append(tuple(g))
    return minimalize(gens, d)


def test_ac6_saturation():
    m_primary = [SQ, CUBIC] + [J for J in _random_ideals(606, 40) if is_m_primary(J)][:10]
    unit_ok = all(saturation(power(J, n)).is_unit for J in m_primary for n in range(1, 6))
    zero_gap = []
    for J in [parse_ideal("(x*y)", "xy")] + [parse_ideal(f"(x^{k}*y^{k})", "xy") for k in range(2, 6)]:
        zero_gap.append(all(length_between(saturation(power(J, n)), power(J, n)) == 0 for n in range(1, 7)))
    rng = np.random.default_rng(6060)
    fired = []
    for _ in range(30):
        J = _random_regular_sequence(rng)
        assert is_monomial_regular_sequence(J)
        rep = check_saturation_dichotomy(J)
        if rep.status is Status.CONTRAPOSITIVE_WITNESS:
            fired.append(J.gens)
    ok = unit_ok and all(zero_gap) and not fired
    record(6, "saturation: m-primary powers saturate to A; (xy), (x^k y^k) have zero gap; no witness on CIs",
           ok, f"unit={'ok' if unit_ok else 'FAIL'}, zero-gap {sum(zero_gap)}/{len(zero_gap)}, {len(fired)} CI firings")


def test_ac7_oracle_agreement():
    unconfirmed = []
    for I in (SQ, CUBIC):
        for n in range(1, 6):
            In = power(I, n)
            for g in integral_closure_power(I, n).gens:
                if power_membership_oracle(In, g, 6) is None:
                    unconfirmed.append((I.gens, n, g))
    contradictions = 0
    for J in _random_ideals(seed=707, count=50, max_exp=5):
        P = NewtonPolyhedron.of(J)
        for a in oracles.box((11, 11)):
            if sum(a) <= 10 and power_membership_oracle(J, a, 4) is not None and not newton_membership(P, a):
                contradictions += 1
    record(7, "oracle: fixture closure generators (n <= 5) witnessed with l <= 6; no oracle-positive LP-negative point",
           not unconfirmed and contradictions == 0,
           f"{len(unconfirmed)} unconfirmed, {contradictions} contradictions over 50 ideals")


def test_ac8_determinism():
    cfg = CorpusConfig(seed=42, count=10, dim=2)
    a, b = corpus_run(cfg), corpus_run(cfg)
    same = [r.digest() for r in a] == [r.digest() for r in b]
    same_bytes = [r.to_json(False) for r in a] == [r.to_json(False) for r in b]
    schema_ok = True
    for r in a:
        try:
            validate_report(r)
        except Exception:
            schema_ok = False
    record(8, "corpus seed 42 run twice is identical (timing excluded) and validates against the schema",
           same and same_bytes and schema_ok, f"{len(a)} reports, schema={'ok' if schema_ok else 'FAIL'}")


if __name__ == "__main__":
    import sys

    fails = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac") and callable(fn):
            try:
                fn()
            except AssertionError:
                fails += 1
    sys.exit(1 if fails else 0)
