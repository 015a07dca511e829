"""Ideal expressions.

Grammar (whitespace is insignificant)::

    ideal   := '(' term { ',' term } ')'
    term    := factor { ['*'] factor } | '1' | '0'
    factor  := var [ '^' posint ]

``'0'`` is only allowed as the sole term and denotes the zero ideal; ``'1'``
denotes the unit monomial. When every declared variable is a single letter,
a run of letters such as ``xy`` is read as a product of variables.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .ideal import MAX_EXPONENT, MonomialIdeal, minimalize

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[(),*^]))")


def default_vars(d: int) -> list:
    return list("xyz")[:d] if d <= 3 else [f"x{i}" for i in range(1, d + 1)]


def _check_vars(vars):
    vars = list(vars)
    if not vars:
        raise ValueError("at least one variable is required")
    if len(set(vars)) != len(vars):
        raise ValueError("variable names must be distinct")
    for v in vars:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ValueError(f"invalid variable name {v!r}")
    return vars


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", *_linecol(text, start))
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _linecol(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.vars = vars
        self.index = {v: i for i, v in enumerate(vars)}
        self.letters = all(len(v) == 1 for v in vars)
        self.toks = _tokens(text)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        return ParseError(msg, *_linecol(self.text, tok[2]))

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.i += 1
        return tok

    def ideal(self):
        self.take("sym", "(")
        terms = [self.term()]
        while self.peek()[:2] == ("sym", ","):
            self.i += 1
            terms.append(self.term())
        self.take("sym", ")")
        if self.peek()[0] != "end":
            raise self.error("trailing input after ideal")
        if None in terms:
            if len(terms) > 1:
                raise self.error("'0' must be the only term")
            return MonomialIdeal.zero(len(self.vars))
        return minimalize(terms, len(self.vars))

    def term(self):
        tok = self.peek()
        if tok[0] == "int":
            self.i += 1
            if tok[1] == "1":
                return (0,) * len(self.vars)
            if tok[1] == "0":
                return None
            raise self.error(f"unexpected number {tok[1]}", tok)
        exps = [0] * len(self.vars)
        self.factor(exps)
        while True:
            tok = self.peek()
            if tok[:2] == ("sym", "*"):
                self.i += 1
                self.factor(exps)
            elif tok[0] == "ident":
                self.factor(exps)
            else:
                return tuple(exps)

    def factor(self, exps):
        tok = self.take("ident")
        name = tok[1]
        if name in self.index:
            names = [name]
        elif self.letters and all(ch in self.index for ch in name):
            names = list(name)
        else:
            raise self.error(f"unknown variable {name!r}", tok)
        e = 1
        if self.peek()[:2] == ("sym", "^"):
            self.i += 1
            num = self.take("int")
            e = int(num[1])
            if e == 0:
                raise self.error("exponent must be positive", num)
            if e >= MAX_EXPONENT:
                raise self.error("exponent overflow", num)
        for j, n in enumerate(names):
            exps[self.index[n]] += e if j == len(names) - 1 else 1


def parse_ideal(text: str, vars) -> MonomialIdeal:
    """Parse ``"(x^2, x*y, y^3)"`` into a minimalized :class:`MonomialIdeal`."""
    return _Parser(text, _check_vars(vars)).ideal()


def parse_monomial(text: str, vars) -> tuple:
    vars = _check_vars(vars)
    p = _Parser(text, vars)
    t = p.term()
    if p.peek()[0] != "end":
        raise p.error("trailing input after monomial")
    if t is None:
        raise p.error("'0' is not a monomial")
    return t


def format_monomial(a, vars) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(vars, a) if e]
    return "*".join(parts) or "1"


def format_ideal(I: MonomialIdeal, vars=None) -> str:
    vars = vars or default_vars(I.dim)
    if len(vars) != I.dim:
        raise ValueError("number of variable names does not match the ambient dimension")
    if I.is_zero:
        return "(0)"
    # descending lex reads naturally: (x^2, x*y, y^2)
    return "(" + ", ".join(format_monomial(g, vars) for g in reversed(I.gens)) + ")"
