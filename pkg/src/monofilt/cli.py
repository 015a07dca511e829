"""Command line entry point.

Exit codes: 0 ok, 1 usage or input error, 2 computation error, 3 cross-check mismatch.
"""
from __future__ import annotations

import argparse
import re
import sys

from . import __version__
from .crosscheck import OPERATIONS, CasAdapter, CrosscheckError, cas_crosscheck
from .errors import MonofiltError, ParseError
from .filtration import Filtration, FiltrationKind, ratliff_rush, saturation
from .hilbert import DEFAULT_CONFIRM, DEFAULT_MAX_WINDOW, gap_function, hilbert_profile, spread_fit
from .ideal import power
from .newton import integral_closure_power
from .parse import default_vars, format_ideal, parse_ideal
from .report import (
    FAMILIES,
    AnalysisOptions,
    CorpusConfig,
    analyze,
    corpus_run,
    dumps,
    load_config,
    reports_to_csv,
    reports_to_json,
)
from .theorems import FIXTURES, Status, check_dichotomy, run_fixtures, unmixedness_counterwitness

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 1, 2, 3

# option name -> (type, default); flags win over the config file, which wins over these
SETTINGS = {
    "vars": (str, None),
    "window": (int, None),
    "max_window": (int, DEFAULT_MAX_WINDOW),
    "confirm": (int, DEFAULT_CONFIRM),
    "seed": (int, 0),
    "format": (str, None),
    "count": (int, 10),
    "dim": (int, 2),
    "min_gens": (int, 2),
    "max_gens": (int, 4),
    "max_exp": (int, 5),
    "family": (str, "random"),
    "workers": (int, 1),
    "timeout": (float, None),
    "cas": (str, None),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--vars", help="variable names, comma separated or a run of single letters (default: inferred)")
    g.add_argument("--window", type=int, help="initial sampling window N")
    g.add_argument("--max-window", type=int, help=f"largest window tried when fits do not settle (default {DEFAULT_MAX_WINDOW})")
    g.add_argument("--confirm", type=int, help=f"confirmation window for polynomial fits (default {DEFAULT_CONFIRM})")
    g.add_argument("--seed", type=int, help="corpus seed (default 0)")
    g.add_argument("--format", choices=("text", "json", "csv"), help="output format")
    g.add_argument("--config", help="flat key = value settings file; flags override it")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = _Parser(prog="monofilt", description="Filtrations, Hilbert-Samuel data and closure gaps of monomial ideals.")
    p.add_argument("--version", action="version", version=f"monofilt {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help, ideal=True):
        s = sub.add_parser(name, help=help, parents=[common])
        if ideal:
            s.add_argument("ideal", help='ideal expression such as "(x^2, y^2)"')
        return s

    cmd("analyze", "full report: filtration profiles, gaps and theorem checks")
    s = cmd("power", "minimal generators of I^n")
    s.add_argument("n", type=int)
    s = cmd("closure", "integral closure of I^n")
    s.add_argument("-n", type=int, default=1)
    s.add_argument("--method", choices=("facets", "lp"), default="facets")
    s = cmd("rr", "Ratliff-Rush closure of I^n (heuristic stop rule)")
    s.add_argument("-n", type=int, default=1)
    s = cmd("saturate", "saturation of I^n")
    s.add_argument("-n", type=int, default=1)
    s = cmd("hilbert", "Hilbert-Samuel function, polynomial and coefficients")
    s.add_argument("--kind", choices=("adic", "integral_closure", "tight_closure"), default="adic")
    s = cmd("gap", "length of F_n / G_n with a polynomial fit")
    s.add_argument("--upper", choices=[k.value for k in FiltrationKind], default="integral_closure")
    s.add_argument("--lower", choices=[k.value for k in FiltrationKind], default="adic")
    cmd("dichotomy", "classify the closure gap and run the dichotomy checks")
    cmd("spread", "analytic spread from the growth of mu(I^n)")
    s = cmd("corpus", "analyze a seeded random corpus", ideal=False)
    s.add_argument("--count", type=int)
    s.add_argument("--dim", type=int)
    s.add_argument("--min-gens", type=int)
    s.add_argument("--max-gens", type=int)
    s.add_argument("--max-exp", type=int)
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--workers", type=int)
    s = cmd("verify-fixtures", "recompute the reference fixtures and check them", ideal=False)
    s.add_argument("--fixture", action="append", choices=sorted(FIXTURES), help="fixture name (repeatable; default all)")
    s = cmd("crosscheck", "compare one operation against an external CAS")
    s.add_argument("--op", choices=OPERATIONS, default="closure")
    s.add_argument("-n", type=int, default=1)
    s.add_argument("--enable", action="store_true", help="actually run the external program")
    s.add_argument("--cas", help="command template with {script}; default from $MONOFILT_CAS")
    s.add_argument("--timeout", type=float, help="seconds before giving up (default 60)")
    return p


def resolve_settings(args) -> dict:
    conf = load_config(args.config) if getattr(args, "config", None) else {}
    unknown = set(conf) - set(SETTINGS)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    out = {}
    for key, (typ, default) in SETTINGS.items():
        value = getattr(args, key, None)
        if value is None and key in conf:
            try:
                value = typ(conf[key])
            except ValueError:
                raise UsageError(f"config key {key!r}: cannot read {conf[key]!r} as {typ.__name__}") from None
        out[key] = default if value is None else value
    if out["family"] not in FAMILIES:
        raise UsageError(f"family must be one of {', '.join(FAMILIES)}")
    if out["format"] not in (None, "text", "json", "csv"):
        raise UsageError("format must be text, json or csv")
    return out


def split_vars(spec: str) -> list:
    spec = spec.strip()
    if "," in spec or " " in spec:
        return [v for v in re.split(r"[,\s]+", spec) if v]
    return list(spec) if spec.isalpha() else [spec]


def infer_vars(text: str) -> list:
    """Guess the ring from the identifiers used: ``x, y, z`` or ``x1..xk``."""
    names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    indexed = [re.fullmatch(r"x(\d+)", v) for v in names]
    if names and all(indexed):
        d = max(int(m.group(1)) for m in indexed)
        return [f"x{i}" for i in range(1, d + 1)]
    letters = set("".join(names))
    if letters <= set("xyz"):
        d = max([2] + ["xyz".index(c) + 1 for c in letters])
        return default_vars(d)
    raise UsageError("cannot infer the variables; pass --vars")


def _emit(text: str, out):
    out.write(text if text.endswith("\n") else text + "\n")


def _fmt(settings, default="text"):
    return settings["format"] or default


def _run(args, settings, out) -> int:
    c = args.command
    opts = AnalysisOptions(window=settings["window"], max_window=settings["max_window"], confirm=settings["confirm"])
    if c == "corpus":
        try:
            cfg = CorpusConfig(settings["seed"], settings["count"], settings["dim"], settings["min_gens"],
                               settings["max_gens"], settings["max_exp"], settings["family"])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        reports = corpus_run(cfg, opts, settings["workers"])
        fmt = _fmt(settings, "json")
        if fmt == "csv":
            _emit(reports_to_csv(reports), out)
        elif fmt == "json":
            _emit(reports_to_json(reports), out)
        else:
            for r in reports:
                _emit(f"{r.instance}\t{r.input['ideal']}\terrors={len(r.errors)}", out)
        return EXIT_OK if all(not r.errors for r in reports) else EXIT_COMPUTE
    if c == "verify-fixtures":
        reports = run_fixtures(args.fixture)
        if _fmt(settings, "json") == "json":
            _emit(dumps([r.as_dict() for r in reports]), out)
        else:
            for r in reports:
                _emit(f"{r.status.value:12s} {r.theorem}", out)
        return EXIT_COMPUTE if any(r.status is Status.FAILS for r in reports) else EXIT_OK

    vars = split_vars(settings["vars"]) if settings["vars"] else infer_vars(args.ideal)
    try:
        I = parse_ideal(args.ideal, vars)
    except ValueError as exc:  # bad variable declarations
        raise UsageError(str(exc)) from None
    fmt = _fmt(settings, "json" if c == "analyze" else "text")
    if fmt == "csv" and c != "analyze":
        raise UsageError("csv output is only available for analyze and corpus")
    N, conf, mw = settings["window"], settings["confirm"], settings["max_window"]

    if c == "analyze":
        r = analyze(I, opts, vars)
        if fmt == "csv":
            _emit(reports_to_csv([r]), out)
        elif fmt == "json":
            _emit(r.to_json(), out)
        else:
            for g in r.gaps:
                _emit(f"gap {g['upper']}/{g['lower']}: {g['values']}", out)
            for t in r.theorems:
                _emit(f"{t['status']:12s} {t['theorem']}", out)
        return EXIT_OK if not r.errors else EXIT_COMPUTE

    if c in ("power", "closure", "rr", "saturate"):
        n = args.n
        if n < 0 or (n == 0 and c != "power"):
            raise UsageError("n must be positive")
        extra = {}
        if c == "power":
            J = power(I, n)
        elif c == "closure":
            J = integral_closure_power(I, n, method=args.method)
        elif c == "saturate":
            J = saturation(power(I, n))
        else:
            res = ratliff_rush(power(I, n))
            J = res.closure
            extra = {"heuristic": res.heuristic, "stable_from": res.stable_from,
                     "reduction_check": res.reduction_check,
                     "chain": [format_ideal(K, vars) for K in res.chain]}
        if fmt == "json":
            _emit(dumps({"ideal": format_ideal(J, vars), "gens": [list(g) for g in J.gens], **extra}), out)
        else:
            _emit(format_ideal(J, vars), out)
        return EXIT_OK

    if c == "hilbert":
        prof = hilbert_profile(Filtration(args.kind, I), N, conf, mw)
        if fmt == "json":
            _emit(dumps(prof.as_dict()), out)
        else:
            _emit(f"values: {list(prof.values)}", out)
            _emit(f"fit degree {prof.fit.degree} from n={prof.fit.stable_from} (window n={prof.fit.first_n}..{prof.fit.last_n})", out)
            _emit(f"coefficients: {None if prof.hilbert_coeffs is None else list(prof.hilbert_coeffs)}", out)
        return EXIT_OK

    if c == "gap":
        g = gap_function(Filtration(args.upper, I), Filtration(args.lower, I), N, conf, mw)
        if fmt == "json":
            _emit(dumps(g.as_dict()), out)
        else:
            _emit(f"values: {list(g.values)}", out)
            _emit(f"verdict: {g.verdict}", out)
        return EXIT_OK

    if c == "dichotomy":
        reps = [check_dichotomy(I, N, conf, mw), unmixedness_counterwitness(I, N, conf, mw)]
        if fmt == "json":
            _emit(dumps([r.as_dict() for r in reps]), out)
        else:
            _emit(f"verdict: {reps[0].evidence['verdict']}", out)
            for r in reps:
                _emit(f"{r.status.value:12s} {r.theorem}", out)
        return EXIT_COMPUTE if any(r.status is Status.FAILS for r in reps) else EXIT_OK

    if c == "spread":
        values, fit = spread_fit(I, N, conf, mw)
        ell = None if fit.degree is None else fit.degree + 1
        if fmt == "json":
            _emit(dumps({"analytic_spread": ell, "mu_values": values, "fit": fit.as_dict()}), out)
        else:
            _emit(f"mu(I^n): {values}", out)
            _emit(f"analytic spread: {ell if ell is not None else 'undetermined'}", out)
        return EXIT_OK if ell is not None else EXIT_COMPUTE

    if c == "crosscheck":
        adapter = CasAdapter.from_env(enabled=args.enable, timeout=settings["timeout"])
        if settings["cas"]:
            adapter.command = settings["cas"]
        res = cas_crosscheck(I, args.op, adapter, args.n, vars)
        if fmt == "json":
            _emit(dumps(res.as_dict()), out)
        else:
            _emit(f"{res.status} {res.operation} n={res.n} {res.message}".rstrip(), out)
            for m in res.missing:
                _emit(f"  only internal: {m}", out)
            for m in res.extra:
                _emit(f"  only external: {m}", out)
        return EXIT_MISMATCH if res.status == "mismatch" else EXIT_OK
    raise UsageError(f"unknown command {c}")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        settings = resolve_settings(args)
        return _run(args, settings, out)
    except (UsageError, ParseError, OSError) as exc:
        print(f"monofilt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MonofiltError, CrosscheckError, ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"monofilt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
