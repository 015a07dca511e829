"""Whole-ideal analysis reports, seeded corpora, and their JSON/CSV forms."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources

import numpy as np

from . import __version__
from .errors import MonofiltError
from .filtration import Filtration, FiltrationKind, stability_index
from .hilbert import (
    DEFAULT_CONFIRM,
    DEFAULT_MAX_WINDOW,
    default_window,
    detect_polynomial,
    classify_dichotomy,
    gap_function,
    hilbert_profile,
    length_between,
    length_quotient,
    spread_fit,
)
from .ideal import (
    MonomialIdeal,
    assoc_primes,
    height,
    is_m_primary,
    is_monomial_regular_sequence,
    minimalize,
    radical,
    stable_assoc_primes,
)
from .parse import default_vars, format_ideal
from .theorems import (
    check_dichotomy,
    check_e1_identities,
    check_saturation_dichotomy,
    check_tight_closure,
    check_upper_bound_lemma,
    unmixedness_counterwitness,
)

SCHEMA_VERSION = "1"
CSV_COLUMNS = ("instance", "filtration", "n", "colength", "num_gens")


@dataclass
class AnalysisOptions:
    window: int | None = None
    max_window: int = DEFAULT_MAX_WINDOW
    confirm: int = DEFAULT_CONFIRM
    rr_window: int = 4
    sat_window: int = 6
    show_terms: int = 3
    theorems: bool = True

    def resolved_window(self, d: int) -> int:
        return self.window or default_window(d, self.confirm)


@dataclass
class AnalysisReport:
    instance: str
    input: dict
    ideal: dict = field(default_factory=dict)
    filtrations: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    theorems: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    window: dict = field(default_factory=dict)
    engine: dict = field(default_factory=lambda: {"name": "monofilt", "version": __version__,
                                                   "schema": SCHEMA_VERSION})
    timing_ms: int = 0

    def as_dict(self, include_timing: bool = True) -> dict:
        d = asdict(self)
        if not include_timing:
            d.pop("timing_ms")
        return d

    def to_json(self, include_timing: bool = True) -> str:
        return dumps(self.as_dict(include_timing))

    def digest(self) -> str:
        """SHA-256 of the canonical JSON with the timing field left out."""
        return hashlib.sha256(self.to_json(include_timing=False).encode()).hexdigest()


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def load_schema() -> dict:
    return json.loads(resources.files("monofilt").joinpath("report.schema.json").read_text())


def validate_report(data) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match the shipped schema."""
    import jsonschema

    if isinstance(data, AnalysisReport):
        data = data.as_dict()
    jsonschema.validate(data, load_schema())


# -- analysis ------------------------------------------------------------------------

def _section(report, name, fn):
    try:
        return fn()
    except MonofiltError as exc:
        report.errors.append({"section": name, "error": type(exc).__name__, "message": str(exc)})
    except (ArithmeticError, RuntimeError, ValueError) as exc:
        report.errors.append({"section": name, "error": type(exc).__name__, "message": str(exc)})
    return None


def _ideal_info(I: MonomialIdeal, vars, opts: AnalysisOptions) -> dict:
    info = {
        "num_gens": len(I.gens),
        "m_primary": is_m_primary(I),
        "regular_sequence": is_monomial_regular_sequence(I),
        "radical": format_ideal(radical(I), vars),
        "height": height(I),
        "assoc_primes": sorted(sorted(vars[i] for i in P.vars) for P in assoc_primes(I)),
    }
    values, fit = spread_fit(I, None, opts.confirm, opts.max_window)
    info["mu_values"] = values
    info["analytic_spread"] = None if fit.degree is None else fit.degree + 1
    info["analytic_spread_fit"] = fit.as_dict()
    return info


def _stable_ass(I, vars):
    st = stable_assoc_primes(I, window=2, max_power=8)
    return {"primes": sorted(sorted(vars[i] for i in P.vars) for P in st.primes), "onset": st.onset,
            "last_checked": st.last_checked, "certified": st.certified}


def _filtration_entry(F: Filtration, upto: int, vars, opts: AnalysisOptions, m_primary: bool) -> dict:
    terms = []
    for n in range(1, upto + 1):
        J = F.term(n)
        terms.append({
            "n": n,
            "num_gens": len(J.gens),
            "colength": length_quotient(J) if (m_primary and (J.is_unit or is_m_primary(J))) else None,
            "ideal": format_ideal(J, vars) if n <= opts.show_terms else None,
        })
    entry = {"kind": F.kind.value, "terms": terms, "hilbert": None, "stability_index": None,
             "notes": []}
    if F.kind is FiltrationKind.TIGHT_CLOSURE:
        entry["notes"].append(F.meta["rationale"])
    if F.kind is FiltrationKind.RATLIFF_RUSH:
        entry["notes"].append("terms use a consecutive-equality stop rule and are heuristic")
    return entry


def analyze(I: MonomialIdeal, options: AnalysisOptions | None = None, vars=None, instance: str = "0") -> AnalysisReport:
    """Run every filtration profile, gap analysis and applicable theorem check on ``I``."""
    opts = options or AnalysisOptions()
    vars = list(vars or default_vars(I.dim))
    t0 = time.perf_counter()
    N = opts.resolved_window(I.dim)
    report = AnalysisReport(
        instance=instance,
        input={"dim": I.dim, "vars": vars, "gens": [list(g) for g in I.gens], "ideal": format_ideal(I, vars)},
        window={"window": N, "max_window": opts.max_window, "confirm": opts.confirm, "rr_window": opts.rr_window,
                "sat_window": opts.sat_window},
    )
    if not I.is_proper_nonzero:
        report.errors.append({"section": "input", "error": "IdealError",
                              "message": "analysis needs a proper nonzero ideal"})
        report.timing_ms = int(1000 * (time.perf_counter() - t0))
        return report

    info = _section(report, "ideal", lambda: _ideal_info(I, vars, opts)) or {}
    info["stable_assoc_primes"] = _section(report, "stable_assoc_primes", lambda: _stable_ass(I, vars))
    report.ideal = info
    mp = is_m_primary(I)

    filts = {k: Filtration(k, I) for k in FiltrationKind}
    windows = {
        FiltrationKind.ADIC: N,
        FiltrationKind.INTEGRAL_CLOSURE: N,
        FiltrationKind.TIGHT_CLOSURE: N,
        FiltrationKind.RATLIFF_RUSH: opts.rr_window,
        FiltrationKind.SATURATION: opts.sat_window,
    }
    for kind, F in filts.items():
        entry = _section(report, f"filtration:{kind.value}", lambda: _filtration_entry(F, windows[kind], vars, opts, mp))
        if entry is None:
            continue
        if mp and kind in (FiltrationKind.ADIC, FiltrationKind.INTEGRAL_CLOSURE, FiltrationKind.TIGHT_CLOSURE):
            prof = _section(report, f"hilbert:{kind.value}",
                            lambda: hilbert_profile(F, N, opts.confirm, opts.max_window))
            entry["hilbert"] = prof.as_dict() if prof else None
        entry["stability_index"] = _section(report, f"stability:{kind.value}",
                                            lambda: stability_index(F, max(2, min(windows[kind], 8))))
        report.filtrations.append(entry)

    adic = filts[FiltrationKind.ADIC]
    for kind in (FiltrationKind.INTEGRAL_CLOSURE, FiltrationKind.TIGHT_CLOSURE):
        g = _section(report, f"gap:{kind.value}",
                     lambda: gap_function(filts[kind], adic, N, opts.confirm, opts.max_window))
        if g is not None:
            report.gaps.append(g.as_dict())
    for kind in (FiltrationKind.RATLIFF_RUSH, FiltrationKind.SATURATION):
        upto = windows[kind]
        vals = _section(report, f"gap:{kind.value}",
                        lambda: [length_between(filts[kind].term(n), adic.term(n)) for n in range(1, upto + 1)])
        if vals is None:
            continue
        entry = {"upper": kind.value, "lower": "adic", "values": vals, "fit": None, "verdict": None}
        if len(vals) >= opts.confirm + 4:
            fit = detect_polynomial(vals, opts.confirm, start=1)
            entry["fit"] = fit.as_dict()
            entry["verdict"] = classify_dichotomy(vals, fit, I.dim).as_dict()
        report.gaps.append(entry)

    if opts.theorems:
        checks = [lambda: check_saturation_dichotomy(I, opts.sat_window, opts.confirm, opts.max_window),
                  lambda: check_tight_closure(I)]
        if mp:
            checks = [
                lambda: check_dichotomy(I, N, opts.confirm, opts.max_window),
                lambda: unmixedness_counterwitness(I, N, opts.confirm, opts.max_window),
                lambda: check_e1_identities(I, N, opts.confirm, opts.max_window),
                lambda: check_upper_bound_lemma(I, Filtration("integral_closure", I), Filtration("adic", I), N,
                                                opts.confirm, opts.max_window),
            ] + checks
        for chk in checks:
            rep = _section(report, "theorems", chk)
            if rep is not None:
                report.theorems.append(rep.as_dict())
    report.timing_ms = int(1000 * (time.perf_counter() - t0))
    return report


# -- corpora -------------------------------------------------------------------------

FAMILIES = ("random", "complete-intersection", "equigenerated")


@dataclass(frozen=True)
class CorpusConfig:
    """Deterministic corpus description.

    Instance ``i`` draws from ``numpy.random.default_rng`` seeded with child
    ``i`` of ``numpy.random.SeedSequence(seed).spawn(count)``, so every
    instance has an independent stream and the corpus is reproducible.
    """

    seed: int = 0
    count: int = 10
    dim: int = 2
    min_gens: int = 2
    max_gens: int = 4
    max_exp: int = 5
    family: str = "random"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.count < 0 or self.dim < 1 or self.max_exp < 1 or not 1 <= self.min_gens <= self.max_gens:
            raise ValueError("invalid corpus configuration")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _draw(rng: np.random.Generator, cfg: CorpusConfig) -> MonomialIdeal:
    d = cfg.dim
    if cfg.family == "complete-intersection":
        exps = rng.integers(1, cfg.max_exp + 1, size=d)
        return minimalize([tuple(int(e) if j == i else 0 for j in range(d)) for i, e in enumerate(exps)], d)
    k = int(rng.integers(cfg.min_gens, cfg.max_gens + 1))
    if cfg.family == "equigenerated":
        D = cfg.max_exp
        gens = [tuple(D if j == i else 0 for j in range(d)) for i in range(d)]
        for _ in range(k):
            cuts = np.sort(rng.integers(0, D + 1, size=d - 1))
            parts = np.diff(np.concatenate([[0], cuts, [D]]))
            gens.append(tuple(int(p) for p in parts))
        return minimalize(gens, d)
    gens = []
    while len(gens) < k:
        g = tuple(int(e) for e in rng.integers(0, cfg.max_exp + 1, size=d))
        if any(g):
            gens.append(g)
    return minimalize(gens, d)


def generate_corpus(cfg: CorpusConfig) -> list:
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.count)
    return [_draw(np.random.default_rng(s), cfg) for s in children]


def _run_one(args):
    index, I, opts, vars = args
    try:
        return analyze(I, opts, vars, instance=str(index))
    except Exception as exc:  # one instance must not abort the corpus
        rep = AnalysisReport(instance=str(index), input={"dim": I.dim, "vars": list(vars or default_vars(I.dim)),
                                                          "gens": [list(g) for g in I.gens], "ideal": format_ideal(I, vars)})
        rep.errors.append({"section": "analyze", "error": type(exc).__name__, "message": str(exc)})
        return rep


def corpus_run(cfg: CorpusConfig, options: AnalysisOptions | None = None, workers: int = 1, vars=None) -> list:
    """Analyze every corpus instance; reports come back in instance order."""
    ideals = generate_corpus(cfg)
    jobs = [(i, I, options or AnalysisOptions(), vars) for i, I in enumerate(ideals)]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))


# -- serialization -------------------------------------------------------------------

def reports_to_json(reports, include_timing: bool = True) -> str:
    return dumps([r.as_dict(include_timing) for r in reports])


def reports_to_csv(reports) -> str:
    """One row per ``(instance, filtration, n)``; empty colength means infinite."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        for f in r.filtrations:
            for t in f["terms"]:
                w.writerow([r.instance, f["kind"], t["n"], "" if t["colength"] is None else t["colength"],
                            t["num_gens"]])
    return buf.getvalue()


def load_config(path) -> dict:
    """Read a flat ``key = value`` file; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out
