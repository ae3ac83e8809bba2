"""Text grammar for polynomials and Leavitt elements.

The accepted language is a small superset of::

    poly   := term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)*
    factor := 'x'NAT ['^'NAT]
    coeff  := INT | INT'/'INT

Parentheses, a leading minus sign and juxtaposition (``x1x2``) are also
accepted.  Leavitt expressions additionally use ``x1'`` or ``star(x1)`` for
the starred generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import PolySyntaxError, UnknownVariable

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<var>x(?P<idx>\d+)(?P<prime>')?)
  | (?P<star>star\s*\(\s*x(?P<sidx>\d+)\s*\))
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    value: object
    pos: int


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _error(text, pos, msg):
    line, col = _line_col(text, pos)
    return PolySyntaxError(msg, text, line, col)


def tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise _error(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if m.group("ws"):
            pass
        elif m.group("num") is not None:
            toks.append(Token("num", int(m.group("num")), pos))
        elif m.group("var") is not None:
            kind = "svar" if m.group("prime") else "var"
            toks.append(Token(kind, int(m.group("idx")), pos))
        elif m.group("star") is not None:
            toks.append(Token("svar", int(m.group("sidx")), pos))
        else:
            toks.append(Token("op", m.group("op"), pos))
        pos = m.end()
    toks.append(Token("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, builder, nvars, allow_star):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.b = builder
        self.nvars = nvars
        self.allow_star = allow_star

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t.kind != "op" or t.value != op:
            raise _error(self.text, t.pos, f"expected {op!r}")
        return t

    def parse(self):
        if self.peek().kind == "end":
            raise _error(self.text, 0, "empty expression")
        e = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise _error(self.text, t.pos, f"unexpected {self._show(t)}")
        return e

    @staticmethod
    def _show(t):
        return "end of input" if t.kind == "end" else repr(str(t.value))

    def expr(self):
        neg = False
        t = self.peek()
        if t.kind == "op" and t.value == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = self.b.neg(acc)
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.take()
                rhs = self.term()
                acc = self.b.add(acc, rhs) if t.value == "+" else self.b.sub(acc, rhs)
            else:
                return acc

    def _starts_atom(self, t):
        return t.kind in ("num", "var", "svar") or (t.kind == "op" and t.value == "(")

    def term(self):
        acc = self.power()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "*":
                self.take()
                acc = self.b.mul(acc, self.power())
            elif self._starts_atom(t):
                acc = self.b.mul(acc, self.power())
            else:
                return acc

    def power(self):
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.value == "^":
            self.take()
            e = self.take()
            if e.kind != "num":
                raise _error(self.text, e.pos, "exponent must be a natural number")
            return self.b.pow(base, e.value)
        return base

    def _check_var(self, t):
        if t.value < 1:
            raise _error(self.text, t.pos, "variable indices start at 1")
        if self.nvars is not None and t.value > self.nvars:
            raise UnknownVariable(f"x{t.value} exceeds the declared {self.nvars} variables")

    def atom(self):
        t = self.take()
        if t.kind == "num":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "/":
                self.take()
                d = self.take()
                if d.kind != "num" or d.value == 0:
                    raise _error(self.text, d.pos, "bad denominator")
                return self.b.const(Fraction(t.value, d.value))
            return self.b.const(t.value)
        if t.kind == "var":
            self._check_var(t)
            return self.b.var(t.value)
        if t.kind == "svar":
            if not self.allow_star:
                raise _error(self.text, t.pos, "starred variables are not polynomials")
            self._check_var(t)
            return self.b.star(t.value)
        if t.kind == "op" and t.value == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise _error(self.text, t.pos, f"unexpected {self._show(t)}")


class _PolyBuilder:
    def __init__(self, field):
        from .freealg import Poly
        self.F = field
        self.Poly = Poly

    def const(self, c):
        return self.Poly.constant(self.F, self.F(c))

    def var(self, i):
        return self.Poly.var(self.F, i)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k


def parse_poly(text: str, field, nvars: int | None = None):
    """Parse ``text`` into a :class:`~ncfactor.freealg.Poly` over ``field``."""
    return _Parser(text, _PolyBuilder(field), nvars, allow_star=False).parse()


def parse_with(text: str, builder, nvars: int | None = None, allow_star=True):
    return _Parser(text, builder, nvars, allow_star).parse()


def format_word(word, star=False) -> str:
    """``(1, 1, 2)`` -> ``x1^2*x2``; with ``star`` the letters get a prime."""
    if not word:
        return "1"
    mark = "'" if star else ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(f"x{word[i]}{mark}" + (f"^{run}" if run > 1 else ""))
        i = j
    return "*".join(parts)


def format_terms(pieces, field) -> str:
    """Join ``(coefficient, monomial_text)`` pairs; ``monomial_text`` is
    empty for the constant term."""
    out = []
    for c, mono in pieces:
        neg = field.characteristic == 0 and c < 0
        a = -c if neg else c
        if not mono:
            body = field.format(a)
        elif a == 1:
            body = mono
        else:
            body = f"{field.format(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


def format_poly(p) -> str:
    return format_terms([(c, format_word(w) if w else "") for w, c in p.terms()], p.field)
