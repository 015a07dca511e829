"""Harness self-tests against a scripted stand-in for the external system."""
import io
import sys
import textwrap

import pytest

from monofilt.cli import main
from monofilt.crosscheck import (
    CasAdapter,
    CrosscheckError,
    cas_crosscheck,
    internal_result,
    render_script,
)
from monofilt.parse import parse_ideal

SQ = parse_ideal("(x^2, y^2)", "xy")

FAKE = textwrap.dedent("""\
    import os, sys, time
    script = open(sys.argv[1]).read()
    assert "monomialIdeal" in script
    mode = os.environ.get("FAKE_CAS_MODE", "reply")
    if mode == "sleep":
        time.sleep(5)
    if mode == "fail":
        sys.exit(3)
    sys.stdout.write(os.environ["FAKE_CAS_REPLY"].replace("|", "\\n"))
""")


@pytest.fixture
def fake(tmp_path, monkeypatch):
    path = tmp_path / "fake_cas.py"
    path.write_text(FAKE)

    def make(reply="", mode="reply", timeout=10.0):
        monkeypatch.setenv("FAKE_CAS_REPLY", reply)
        monkeypatch.setenv("FAKE_CAS_MODE", mode)
        return CasAdapter(f"{sys.executable} {path} {{script}}", timeout, enabled=True)

    return make


def test_script_template():
    text = render_script(SQ, "closure", 2)
    assert "R = QQ[x, y];" in text
    assert "monomialIdeal(x^2, y^2)" in text
    assert "integralClosure(ideal(I^2))" in text
    with pytest.raises(ValueError):
        render_script(SQ, "frobnicate")


def test_closure_match(fake):
    res = cas_crosscheck(SQ, "closure", fake("x^2|x*y|y^2\n"))
    assert res.status == "match" and not res.missing and not res.extra


def test_reply_is_minimalized_and_whitespace_tolerant(fake):
    res = cas_crosscheck(SQ, "closure", fake("  y^2   x*y |x^2|x^3*y\n\n"))
    assert res.status == "match"


def test_mismatch_names_monomials(fake):
    res = cas_crosscheck(SQ, "closure", fake("x^2|y^2"))
    assert res.status == "mismatch"
    assert res.missing == ["x*y"] and res.extra == []
    res = cas_crosscheck(SQ, "power", fake("x^2|x*y|y^2"))
    assert res.status == "mismatch" and res.extra == ["x*y"]


def test_colength(fake):
    assert internal_result(SQ, "colength", 2) == 12
    assert cas_crosscheck(SQ, "colength", fake("12"), n=2).status == "match"
    assert cas_crosscheck(SQ, "colength", fake("13"), n=2).status == "mismatch"
    with pytest.raises(CrosscheckError):
        cas_crosscheck(SQ, "colength", fake("12|13"), n=2)


def test_malformed_and_failures(fake):
    with pytest.raises(CrosscheckError):
        cas_crosscheck(SQ, "closure", fake("x^^2"))
    with pytest.raises(CrosscheckError):
        cas_crosscheck(SQ, "closure", fake(""))
    with pytest.raises(CrosscheckError):
        cas_crosscheck(SQ, "closure", fake("x", mode="fail"))
    with pytest.raises(CrosscheckError, match="timed out"):
        cas_crosscheck(SQ, "closure", fake("x", mode="sleep", timeout=0.5))


def test_skipped_when_missing_or_disabled():
    assert cas_crosscheck(SQ, "closure", None).status == "skipped"
    assert cas_crosscheck(SQ, "closure", CasAdapter(enabled=False)).status == "skipped"
    res = cas_crosscheck(SQ, "closure", CasAdapter("no-such-cas-binary {script}", enabled=True))
    assert res.status == "skipped" and "not found" in res.message


def test_adapter_from_env(monkeypatch):
    monkeypatch.setenv("MONOFILT_CAS", "mycas --run {script}")
    monkeypatch.setenv("MONOFILT_CAS_TIMEOUT", "7")
    a = CasAdapter.from_env()
    assert a.command == "mycas --run {script}" and a.timeout == 7 and not a.enabled
    monkeypatch.delenv("MONOFILT_CAS_TIMEOUT")
    assert CasAdapter.from_env().timeout == 60


def test_cli_exit_codes(fake, tmp_path):
    adapter = fake("x^2|y^2")
    out = io.StringIO()
    assert main(["crosscheck", "(x^2, y^2)", "--enable", "--cas", adapter.command], out=out) == 3
    assert "only internal: x*y" in out.getvalue()
    fake("x^2|x*y|y^2")
    assert main(["crosscheck", "(x^2, y^2)", "--enable", "--cas", adapter.command], out=io.StringIO()) == 0
    fake("x^^2")
    assert main(["crosscheck", "(x^2, y^2)", "--enable", "--cas", adapter.command], out=io.StringIO()) == 2
    assert main(["crosscheck", "(x^2, y^2)"], out=io.StringIO()) == 0
