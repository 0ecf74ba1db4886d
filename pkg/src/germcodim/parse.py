"""Text form of polynomials.

Grammar (no implicit multiplication; ``^`` binds tighter than ``*``, which
binds tighter than ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | NAME | "(" expr ")"
"""
from __future__ import annotations

import re

from .errors import ExponentOverflow, ParseError
from .poly import EXPONENT_CAP, PolyRing, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}, found {self._describe(tok)}", self.text, tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok):
        return "end of input" if tok[0] == "end" else repr(tok[1])

    def expr(self):
        acc = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError(
                    f"exponent must be a non-negative integer, found {self._describe(tok)}",
                    self.text, tok[2],
                )
            self.take()
            k = tok[1]
            if k >= EXPONENT_CAP:
                raise ExponentOverflow(f"exponent {k} at position {tok[2]} exceeds the cap")
            if self.peek()[0] == "^":
                raise ParseError("chained exponent; add parentheses", self.text, self.peek()[2])
            return base ** k
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return self.ring.constant(tok[1])
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.ring.var_names:
                raise ParseError(f"unknown identifier {tok[1]!r}", self.text, tok[2])
            return self.ring.var(tok[1])
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {self._describe(tok)}", self.text, tok[2])

    def parse(self):
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {self._describe(tok)}", self.text, tok[2])
        return result


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    return _Parser(text, ring).parse()


def format_monomial(ring: PolyRing, exps) -> str:
    parts = []
    for name, e in zip(ring.var_names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_term(ring: PolyRing, c: int, exps) -> str:
    mono = format_monomial(ring, exps)
    if not mono:
        return str(c)
    return mono if c == 1 else f"{c}*{mono}"


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    return "+".join(format_term(f.ring, c, e) for c, e in f.terms)
