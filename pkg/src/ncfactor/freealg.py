"""Polynomials in non-commuting variables and their cofactors.

A word is a tuple of 1-based variable indices, ``()`` being the empty word.
A :class:`Poly` is an immutable sparse map from words to nonzero scalars of
one exact field.  Terms are always iterated in deglex order (degree first,
then lexicographically on the letters).
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, Tuple

from .errors import FieldMismatch, ZeroConstantTerm

Word = Tuple[int, ...]

NEG_INF = -math.inf  # degree of the zero polynomial


def deglex_key(word: Word):
    return (len(word), word)


def head(word: Word, l: int) -> Word:
    return word[:l]


def tail(word: Word, l: int) -> Word:
    """Tail of colength ``l``: the word with its first ``l`` letters removed."""
    return word[l:]


def transpose_word(word: Word) -> Word:
    return word[::-1]


def words_of_length(letters: Iterable[int], length: int):
    letters = sorted(set(letters))
    if length == 0:
        yield ()
        return
    for w in words_of_length(letters, length - 1):
        for x in letters:
            yield w + (x,)


class Poly:
    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field, terms: Dict[Word, object] | None = None):
        self.field = field
        clean = {}
        if terms:
            for w, c in terms.items():
                c = field(c)
                if c != 0:
                    clean[tuple(w)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, terms):
        # terms already reduced and free of zeros
        p = cls.__new__(cls)
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    @classmethod
    def constant(cls, field, c=1):
        return cls(field, {(): c})

    @classmethod
    def monomial(cls, field, word: Word, c=1):
        return cls(field, {tuple(word): c})

    @classmethod
    def var(cls, field, i: int):
        return cls(field, {(i,): 1})

    # -- inspection ---------------------------------------------------------

    def terms(self):
        """``(word, coefficient)`` pairs in deglex order."""
        return sorted(self._terms.items(), key=lambda t: deglex_key(t[0]))

    def words(self):
        return sorted(self._terms, key=deglex_key)

    def coeff(self, word: Word):
        return self._terms.get(tuple(word), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms())

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(len(w) for w in self._terms)

    @property
    def constant_term(self):
        return self._terms.get((), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(len(w) == 0 for w in self._terms)

    def is_comonic(self) -> bool:
        return self.constant_term == 1

    def variables(self):
        return sorted({x for w in self._terms for x in w})

    def max_variable(self) -> int:
        return max((x for w in self._terms for x in w), default=0)

    def leading_word(self):
        return max(self._terms, key=deglex_key) if self._terms else None

    def maximal_monomials(self):
        """Monomials that are not a proper head of another monomial."""
        ws = self._terms
        return [w for w in self.words()
                if not any(len(v) > len(w) and v[:len(w)] == w for v in ws)]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            return self._coerce(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def _coerce(self, c):
        return Poly.constant(self.field, c)

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = F(out.get(w, 0) + c)
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return Poly._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, {w: F(-c) for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, k):
        F = self.field
        k = F(k)
        if k == 0:
            return Poly.zero(F)
        return Poly._raw(F, {w: F(c * k) for w, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._check(other)
        F = self.field
        out: Dict[Word, object] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return Poly(F, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.constant(self.field, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, (int,)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from .parsing import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field!r}, {str(self)!r})"

    # -- convenience wrappers -----------------------------------------------

    def cofactor(self, word: Word) -> "Poly":
        return right_cofactor(self, word)

    def transpose(self) -> "Poly":
        return transpose(self)


def right_cofactor(lam: Poly, b: Word) -> Poly:
    """Tails of the monomials of ``lam`` having head ``b``.

    Zero when ``b`` heads no monomial.  The empty word returns ``lam``.
    """
    b = tuple(b)
    l = len(b)
    out = {}
    for w, c in lam._terms.items():
        if len(w) >= l and w[:l] == b:
            out[w[l:]] = c
    return Poly._raw(lam.field, out)


def left_cofactor(b: Word, lam: Poly) -> Poly:
    """Heads of the monomials of ``lam`` having tail ``b`` (mirror of
    :func:`right_cofactor`)."""
    b = tuple(b)
    l = len(b)
    out = {}
    for w, c in lam._terms.items():
        if len(w) >= l and w[len(w) - l:] == b:
            out[w[:len(w) - l]] = c
    return Poly._raw(lam.field, out)


def transpose(lam: Poly) -> Poly:
    return Poly._raw(lam.field, {w[::-1]: c for w, c in lam._terms.items()})


def comonic_normalize(lam: Poly):
    """Return ``(k, lam / k)`` where ``k`` is the constant term."""
    k = lam.constant_term
    if k == 0:
        raise ZeroConstantTerm(f"constant term of {lam} is zero")
    return k, lam.scale(lam.field.inv(k))


def polys_over(field, *items):
    """Coerce strings, ints and polys to :class:`Poly` over ``field``."""
    from .parsing import parse_poly
    out = []
    for it in items:
        if isinstance(it, Poly):
            out.append(it)
        elif isinstance(it, str):
            out.append(parse_poly(it, field))
        else:
            out.append(Poly.constant(field, it))
    return out
