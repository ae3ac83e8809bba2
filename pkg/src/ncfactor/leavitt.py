"""The Leavitt algebra L(1, n) in normal form.

An element is a sparse sum of ``k * b * c^*`` with words ``b`` and ``c``.
Products cancel at the ``c^* b`` junction using ``x_j^* x_i = [i == j]``, and
the rewrite ``u x_n x_n^* v^* -> u v^* - sum_{i<n} u x_i x_i^* v^*`` removes
every pair in which both words end in the top letter.  The rule strictly
shortens the offending pair, so rewriting terminates; distinct orders reach
the same result because the surviving pairs form a basis.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from .errors import AlphabetMismatch, FieldMismatch
from .freealg import Poly, Word, words_of_length
from .parsing import format_terms, format_word, parse_with

Pair = Tuple[Word, Word]


def _pair_key(pair: Pair):
    b, c = pair
    return (len(b) + len(c), len(b), b, c)


def normalize_terms(F, n: int, terms: Dict[Pair, object]) -> Dict[Pair, object]:
    """Rewrite an arbitrary ``(b, c) -> coeff`` map into normal form."""
    out: Dict[Pair, object] = {}
    todo = list(terms.items())
    while todo:
        (b, c), k = todo.pop()
        if k == 0:
            continue
        if b and c and b[-1] == n and c[-1] == n:
            u, v = b[:-1], c[:-1]
            todo.append(((u, v), k))
            negk = F(-k)
            for i in range(1, n):
                todo.append(((u + (i,), v + (i,)), negk))
            continue
        s = F(out.get((b, c), 0) + k)
        if s == 0:
            out.pop((b, c), None)
        else:
            out[(b, c)] = s
    return out


def _mul_pairs(b1, c1, b2, c2):
    """``b1 c1^* . b2 c2^*`` as a single pair, or ``None`` when it vanishes."""
    l1, l2 = len(c1), len(b2)
    if l1 <= l2:
        if b2[:l1] != c1:
            return None
        return b1 + b2[l1:], c2
    if c1[:l2] != b2:
        return None
    return b1, c2 + c1[l2:]


class LeavittElement:
    __slots__ = ("field", "n", "_terms")

    def __init__(self, field, n: int, terms: Dict[Pair, object] | None = None,
                 _normal: bool = False):
        if n < 2:
            raise AlphabetMismatch("the Leavitt algebra needs at least two generators")
        self.field = field
        self.n = n
        if _normal:
            self._terms = terms or {}
        else:
            clean = {}
            for (b, c), k in (terms or {}).items():
                for w in (b, c):
                    if any(x < 1 or x > n for x in w):
                        raise AlphabetMismatch(f"letter outside 1..{n} in {w}")
                clean[(tuple(b), tuple(c))] = field(k)
            self._terms = normalize_terms(field, n, clean)

    # constructors
    @classmethod
    def zero(cls, field, n):
        return cls(field, n, {}, _normal=True)

    @classmethod
    def one(cls, field, n):
        return cls(field, n, {((), ()): field.one}, _normal=True)

    @classmethod
    def scalar(cls, field, n, k):
        return cls(field, n, {((), ()): k})

    @classmethod
    def gen(cls, field, n, i):
        return cls(field, n, {((i,), ()): 1})

    @classmethod
    def star_gen(cls, field, n, i):
        return cls(field, n, {((), (i,)): 1})

    @classmethod
    def from_poly(cls, p: Poly, n: int):
        return cls(p.field, n, {(w, ()): k for w, k in p.terms()})

    @classmethod
    def from_star_poly(cls, p: Poly, n: int):
        """The image of ``p^*``: each ``k*w`` becomes ``k*w^*``."""
        return cls(p.field, n, {((), w): k for w, k in p.terms()})

    # inspection
    def terms(self):
        return sorted(self._terms.items(), key=lambda t: _pair_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def to_poly(self):
        """Back to the free algebra when no starred part remains, else ``None``."""
        if any(c for (_, c) in self._terms):
            return None
        return Poly(self.field, {b: k for (b, _), k in self._terms.items()})

    # arithmetic
    def _check(self, other):
        if not isinstance(other, LeavittElement):
            if isinstance(other, Poly):
                return LeavittElement.from_poly(other, self.n)
            return LeavittElement.scalar(self.field, self.n, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if other.n != self.n:
            raise AlphabetMismatch(f"L(1,{self.n}) vs L(1,{other.n})")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        out = dict(self._terms)
        for key, k in other._terms.items():
            s = F(out.get(key, 0) + k)
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return LeavittElement(F, self.n, out, _normal=True)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return LeavittElement(F, self.n, {key: F(-k) for key, k in self._terms.items()},
                              _normal=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, k):
        F = self.field
        k = F(k)
        if k == 0:
            return LeavittElement.zero(F, self.n)
        return LeavittElement(F, self.n, {key: F(c * k) for key, c in self._terms.items()},
                              _normal=True)

    def __mul__(self, other):
        if not isinstance(other, (LeavittElement, Poly)):
            return self.scale(other)
        other = self._check(other)
        acc: Dict[Pair, object] = {}
        for (b1, c1), k1 in self._terms.items():
            for (b2, c2), k2 in other._terms.items():
                pair = _mul_pairs(b1, c1, b2, c2)
                if pair is not None:
                    acc[pair] = acc.get(pair, 0) + k1 * k2
        return LeavittElement(self.field, self.n,
                              normalize_terms(self.field, self.n, acc), _normal=True)

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return LeavittElement.from_poly(other, self.n) * self
        return self.scale(other)

    def __pow__(self, k: int):
        out = LeavittElement.one(self.field, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (LeavittElement, Poly, int)):
            try:
                other = self._check(other)
            except (AlphabetMismatch, FieldMismatch):
                return False
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.n, frozenset(self._terms.items())))

    def involution(self) -> "LeavittElement":
        return involution(self)

    def __str__(self):
        return format_leavitt(self)

    def __repr__(self):
        return f"LeavittElement({self.field!r}, n={self.n}, {str(self)!r})"


def leavitt_mul(a: LeavittElement, b: LeavittElement) -> LeavittElement:
    return a * b


def involution(a: LeavittElement) -> LeavittElement:
    """``k b c^*  ->  k c b^*``; an anti-automorphism of order two."""
    return LeavittElement(a.field, a.n, {(c, b): k for (b, c), k in a._terms.items()})


def expansion_identity(r: LeavittElement, l: int) -> LeavittElement:
    """``sum_{|b| = l} (r b) b^*``, which always equals ``r``."""
    F, n = r.field, r.n
    total = LeavittElement.zero(F, n)
    for b in words_of_length(range(1, n + 1), l):
        bw = LeavittElement(F, n, {(b, ()): 1}, _normal=True)
        bstar = LeavittElement(F, n, {((), b): 1}, _normal=True)
        total = total + (r * bw) * bstar
    return total


def verify_certificate(inputs: Iterable[Poly], coeffs: Iterable[LeavittElement],
                       claimed_gcd: Poly) -> bool:
    """True iff ``sum coeffs[i] * inputs[i]`` normalizes to ``claimed_gcd``."""
    inputs, coeffs = list(inputs), list(coeffs)
    if len(inputs) != len(coeffs) or not coeffs:
        return False
    n = coeffs[0].n
    try:
        total = LeavittElement.zero(coeffs[0].field, n)
        for p, c in zip(inputs, coeffs):
            total = total + c * LeavittElement.from_poly(p, n)
        return total == LeavittElement.from_poly(claimed_gcd, n)
    except (AlphabetMismatch, FieldMismatch):
        return False


def format_leavitt(a: LeavittElement) -> str:
    pieces = []
    for (b, c), k in a.terms():
        parts = []
        if b:
            parts.append(format_word(b))
        if c:
            parts.append(format_word(c[::-1], star=True))
        pieces.append((k, "*".join(parts)))
    return format_terms(pieces, a.field)


class _LeavittBuilder:
    def __init__(self, field, n):
        self.F, self.n = field, n

    def const(self, c):
        return LeavittElement.scalar(self.F, self.n, self.F(c))

    def var(self, i):
        return LeavittElement.gen(self.F, self.n, i)

    def star(self, i):
        return LeavittElement.star_gen(self.F, self.n, i)

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


def parse_leavitt(text: str, field, n: int | None = None) -> LeavittElement:
    """Parse e.g. ``"x2*x2' + x1^2*x1'^2"``; ``star(x1)`` is also accepted.

    Without ``n`` the alphabet is ``max(2, largest index in text)``.
    """
    if n is None:
        from .parsing import tokenize
        idx = [t.value for t in tokenize(text) if t.kind in ("var", "svar")]
        n = max([2] + idx)
    return parse_with(text, _LeavittBuilder(field, n), nvars=n, allow_star=True)
