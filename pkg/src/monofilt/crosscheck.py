"""Optional comparison against an external computer algebra system.

The adapter is a command template containing ``{script}``; the placeholder is
replaced by the path of a generated script file. The external program must
print its answer as plain text, one value per line: one monomial per line for
ideal-valued operations, one integer for ``colength``. The default template
targets Macaulay2 (``M2 --script {script}``).

Nothing here runs unless an adapter is explicitly enabled, and a missing
executable yields status ``skipped``.
"""
from __future__ import annotations

import os
import shlex
import shutil
import subprocess
import tempfile
from dataclasses import dataclass, field

from .errors import MonofiltError, ParseError
from .filtration import Filtration, ratliff_rush, saturation
from .hilbert import length_quotient
from .ideal import MonomialIdeal, minimalize, power
from .newton import integral_closure_power
from .parse import default_vars, format_ideal, format_monomial, parse_monomial

ENV_COMMAND = "MONOFILT_CAS"
ENV_TIMEOUT = "MONOFILT_CAS_TIMEOUT"
DEFAULT_COMMAND = "M2 --script {script}"
DEFAULT_TIMEOUT = 60.0

_HEADER = "R = QQ[{vars}];\nI = monomialIdeal({gens});\n"
_PRINT_GENS = "scan(flatten entries mingens J, g -> print toString g);\nexit 0\n"
SCRIPT_TEMPLATES = {
    "power": _HEADER + "J = monomialIdeal(I^{n});\n" + _PRINT_GENS,
    "closure": _HEADER + "J = monomialIdeal integralClosure(ideal(I^{n}));\n" + _PRINT_GENS,
    "saturate": _HEADER + "J = monomialIdeal saturate(ideal(I^{n}));\n" + _PRINT_GENS,
    "ratliff-rush": _HEADER + "J = monomialIdeal ratliffRush(ideal(I^{n}));\n" + _PRINT_GENS,
    "colength": _HEADER + "print degree(R/monomialIdeal(I^{n}));\nexit 0\n",
}
OPERATIONS = tuple(SCRIPT_TEMPLATES)


class CrosscheckError(MonofiltError):
    """The external system timed out, failed, or replied with something unparsable."""


@dataclass
class CasAdapter:
    command: str = DEFAULT_COMMAND
    timeout: float = DEFAULT_TIMEOUT
    enabled: bool = False

    @classmethod
    def from_env(cls, enabled: bool = False, timeout: float | None = None) -> "CasAdapter":
        cmd = os.environ.get(ENV_COMMAND, DEFAULT_COMMAND)
        t = timeout if timeout is not None else float(os.environ.get(ENV_TIMEOUT, DEFAULT_TIMEOUT))
        return cls(cmd, t, enabled)


@dataclass
class CrosscheckResult:
    status: str  # match | mismatch | skipped
    operation: str
    n: int
    internal: list = field(default_factory=list)
    external: list = field(default_factory=list)
    missing: list = field(default_factory=list)  # internal only
    extra: list = field(default_factory=list)  # external only
    message: str = ""

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def render_script(I: MonomialIdeal, operation: str, n: int = 1, vars=None) -> str:
    if operation not in SCRIPT_TEMPLATES:
        raise ValueError(f"unknown operation {operation!r}; choose from {', '.join(OPERATIONS)}")
    vars = list(vars or default_vars(I.dim))
    gens = ", ".join(format_monomial(g, vars) for g in reversed(I.gens))
    return SCRIPT_TEMPLATES[operation].format(vars=", ".join(vars), gens=gens, n=n)


def internal_result(I: MonomialIdeal, operation: str, n: int = 1):
    if operation == "power":
        return power(I, n)
    if operation == "closure":
        return integral_closure_power(I, n)
    if operation == "saturate":
        return saturation(power(I, n))
    if operation == "ratliff-rush":
        return ratliff_rush(power(I, n)).closure
    if operation == "colength":
        return length_quotient(Filtration("adic", I).term(n))
    raise ValueError(f"unknown operation {operation!r}")


def _parse_reply(text: str, operation: str, vars):
    values = text.split()
    if operation == "colength":
        if len(values) != 1:
            raise CrosscheckError(f"expected one integer, got {len(values)} values")
        try:
            return int(values[0])
        except ValueError:
            raise CrosscheckError(f"malformed integer reply {values[0]!r}") from None
    if not values:
        raise CrosscheckError("empty reply")
    try:
        if values == ["0"]:
            return MonomialIdeal.zero(len(vars))
        return minimalize([parse_monomial(v, vars) for v in values], len(vars))
    except ParseError as exc:
        raise CrosscheckError(f"malformed monomial in reply: {exc}") from None


def cas_crosscheck(I: MonomialIdeal, operation: str, adapter: CasAdapter | None, n: int = 1,
                   vars=None) -> CrosscheckResult:
    """Compare ``operation`` applied to ``I^n`` with the external system's answer."""
    vars = list(vars or default_vars(I.dim))
    script = render_script(I, operation, n, vars)
    if adapter is None or not adapter.enabled:
        return CrosscheckResult("skipped", operation, n, message="external CAS cross-check is not enabled")
    argv = shlex.split(adapter.command)
    if not argv or shutil.which(argv[0]) is None:
        return CrosscheckResult("skipped", operation, n, message=f"executable not found: {argv[0] if argv else ''}")
    ours = internal_result(I, operation, n)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "query.m2")
        with open(path, "w") as fh:
            fh.write(script)
        argv = [a.replace("{script}", path) for a in argv]
        try:
            proc = subprocess.run(argv, capture_output=True, text=True, timeout=adapter.timeout)
        except subprocess.TimeoutExpired:
            raise CrosscheckError(f"external CAS timed out after {adapter.timeout:g} s") from None
    if proc.returncode != 0:
        raise CrosscheckError(f"external CAS exited with status {proc.returncode}: {proc.stderr.strip()[:200]}")
    theirs = _parse_reply(proc.stdout, operation, vars)

    if operation == "colength":
        status = "match" if theirs == ours else "mismatch"
        return CrosscheckResult(status, operation, n, [ours], [theirs],
                                message="" if status == "match" else f"colength {ours} != {theirs}")
    a, b = set(ours.gens), set(theirs.gens)
    missing = sorted(format_monomial(g, vars) for g in a - b)
    extra = sorted(format_monomial(g, vars) for g in b - a)
    status = "match" if not missing and not extra else "mismatch"
    msg = "" if status == "match" else f"internal {format_ideal(ours, vars)} != external {format_ideal(theirs, vars)}"
    return CrosscheckResult(status, operation, n, [format_monomial(g, vars) for g in reversed(ours.gens)],
                            [format_monomial(g, vars) for g in reversed(theirs.gens)], missing, extra, msg)
