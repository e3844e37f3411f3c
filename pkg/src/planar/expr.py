"""Text syntax for planar polynomials.

Grammar (whitespace is ignored)::

    series   := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ['*' mono] | mono
    mono     := '1' | atomlist
    atomlist := atom (('*'|',') atom)*
    atom     := 'x' | 'y' | 'x^'INT | '{' atomlist '}' | '(' atomlist ')'
    rational := INT ['/' INT]

A flat list ``a*b*c`` is a single ternary graft, so ``x*x*x`` differs from
``(x*x)*x``.  ``x^n`` is the n-ary corolla, ``{...}`` the sum over the orbit
of the enclosed tree.  Commas are accepted as separators so that canonical
encodings such as ``(x,(x,x))`` parse too.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Optional

from .series import Series
from .trees import (
    UNIT,
    Monomial,
    decode,
    deg_x,
    deg_y,
    encode,
    graft,
    orbit_representative,
    orbit_sum,
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # trailing whitespace
        start = m.start(1) if m.group(1) is not None else m.start(2)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        else:
            ch = m.group(2)
            if ch not in "xy+-*/^(){},":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "a number" if kind == "int" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def series(self) -> Dict[Monomial, Fraction]:
        acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            coeff, mono = self.term()
            for s, mult in mono.items():
                acc[s] += sign * coeff * mult
            kind = self.peek()[0]
            if kind == "end":
                break
            if kind not in ("+", "-"):
                tok = self.peek()
                raise ParseError(f"unexpected {tok[1]!r}", tok[2])
            sign = -1 if self.take()[0] == "-" else 1
        return {s: c for s, c in acc.items() if c}

    def term(self):
        if self.peek()[0] == "int":
            coeff = self.rational()
            if self.peek()[0] == "*":
                self.take()
                return coeff, self.mono()
            return coeff, {UNIT: 1}
        return Fraction(1), self.mono()

    def rational(self) -> Fraction:
        num = self.take("int")[1]
        if self.peek()[0] == "/":
            tok = self.take()
            den = self.take("int")[1]
            if den == 0:
                raise ParseError("zero denominator", tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def mono(self) -> Dict[Monomial, int]:
        tok = self.peek()
        if tok[0] == "int":
            if tok[1] != 1:
                raise ParseError("only '1' may stand for a monomial", tok[2])
            self.take()
            return {UNIT: 1}
        return self.atomlist()

    def atomlist(self) -> Dict[Monomial, int]:
        parts = [self.atom()]
        while self.peek()[0] in ("*", ","):
            self.take()
            parts.append(self.atom())
        if len(parts) == 1:
            return parts[0]
        out: Dict[Monomial, int] = defaultdict(int)
        for combo in cartesian(*(p.items() for p in parts)):
            mult = 1
            for _, m in combo:
                mult *= m
            out[graft(*(s for s, _ in combo))] += mult
        return dict(out)

    def atom(self) -> Dict[Monomial, int]:
        tok = self.take()
        kind = tok[0]
        if kind == "x":
            if self.peek()[0] == "^":
                self.take()
                n_tok = self.take("int")
                n = n_tok[1]
                if n < 2:
                    raise ParseError(f"x^{n} is not allowed; write {'x' if n == 1 else '1'}", n_tok[2])
                return {tuple(["x"] * n): 1}
            return {"x": 1}
        if kind == "y":
            return {"y": 1}
        if kind == "(":
            inner = self.atomlist()
            self.take(")")
            return inner
        if kind == "{":
            inner = self.atomlist()
            close = self.take("}")
            if len(inner) != 1 or next(iter(inner.values())) != 1:
                raise ParseError("braces must enclose a single tree", close[2])
            (s,) = inner
            return {t: 1 for t in orbit_sum(s)}
        got = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"expected a monomial, got {got}", tok[2])


def parse(text: str, precision: Optional[int] = None) -> Series:
    """Parse a polynomial; precision defaults to its largest x-degree."""
    coeffs = _Parser(text).series()
    top = max((deg_x(s) for s in coeffs), default=0)
    return Series(coeffs, top if precision is None else max(precision, top))


def parse_monomial(text: str) -> Monomial:
    coeffs = _Parser(text).series()
    if len(coeffs) != 1 or next(iter(coeffs.values())) != 1:
        raise ParseError("expected a single monomial", 0)
    return next(iter(coeffs))


# -- printing ---------------------------------------------------------------------

def _is_x_corolla(s: Monomial) -> bool:
    return isinstance(s, tuple) and all(c == "x" for c in s)


def pretty_monomial(s: Monomial) -> str:
    if s == UNIT:
        return "1"
    if isinstance(s, str):
        return s
    if _is_x_corolla(s):
        return f"x^{len(s)}"
    return "*".join(_pretty_atom(c) for c in s)


def _pretty_atom(s: Monomial) -> str:
    if isinstance(s, str) or _is_x_corolla(s):
        return pretty_monomial(s)
    return "(" + pretty_monomial(s) + ")"


def _join(pieces: List[tuple]) -> str:
    """pieces: (coefficient, monomial text or None for the unit)."""
    if not pieces:
        return "0"
    out = []
    for idx, (c, body) in enumerate(pieces):
        neg = c < 0
        a = -c if neg else c
        if body is None:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if idx == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def format_canonical(f: Series) -> str:
    pieces = []
    for s, c in f.terms():
        if s == UNIT:
            pieces.append((c, None))
        else:
            pieces.append((c, encode(s)))
    return _join(pieces)


def format_pretty(f: Series) -> str:
    pieces = []
    done = set()
    coeffs = dict(f.items())
    for s, c in f.terms():
        if s in done:
            continue
        if s == UNIT:
            pieces.append((c, None))
            continue
        members = orbit_sum(s)
        if len(members) > 1 and all(coeffs.get(t) == c for t in members):
            done.update(members)
            pieces.append((c, "{" + pretty_monomial(orbit_representative(s)) + "}"))
        else:
            pieces.append((c, pretty_monomial(s)))
    return _join(pieces)


def to_json_dict(f: Series, k: Optional[int] = None) -> dict:
    out = {}
    if k is not None:
        out["k"] = k
    out["precision"] = f.precision
    out["terms"] = [
        {"coeff": f"{c.numerator}/{c.denominator}", "monomial": encode(s), "deg_x": deg_x(s), "deg_y": deg_y(s)}
        for s, c in f.terms()
    ]
    return out


def format_json(f: Series, k: Optional[int] = None) -> str:
    return json.dumps(to_json_dict(f, k))


def format_series(f: Series, style: str = "pretty", k: Optional[int] = None) -> str:
    if style == "canonical":
        return format_canonical(f)
    if style == "pretty":
        return format_pretty(f)
    if style == "json":
        return format_json(f, k)
    raise ValueError(f"unknown format style {style!r}")


def from_json(text: str) -> Series:
    data = json.loads(text)
    coeffs = {decode(t["monomial"]): Fraction(t["coeff"]) for t in data["terms"]}
    return Series(coeffs, data["precision"])
