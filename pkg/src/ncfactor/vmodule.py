"""The remainder modules V_λ (left) and W_λ (right).

For a comonic ``λ`` the twisted action of a variable on a polynomial ``γ``
with constant term ``k`` is ``x_i ⋆ γ = -k λ_{x_i} + γ_{x_i}``.  The span of
the iterated cofactors of ``λ`` is closed under it and is finite
dimensional; its matrices are what :mod:`ncfactor.modalg` works on.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Tuple

from . import linalg as la
from .errors import FieldMismatch, NotComonic, ZeroConstantTerm
from .fields import field_from_descriptor
from .freealg import (Poly, Word, comonic_normalize, deglex_key, left_cofactor,
                      right_cofactor)


def _require_comonic(lam: Poly):
    if lam.constant_term != 1:
        if lam.constant_term == 0:
            raise ZeroConstantTerm(f"{lam} has zero constant term")
        raise NotComonic(f"{lam} is not comonic")


def star(lam: Poly, i: int, gamma: Poly) -> Poly:
    """``x_i ⋆_λ γ``."""
    _require_comonic(lam)
    return _star(lam, i, gamma)


def _star(lam, i, gamma):
    k = gamma.constant_term
    out = right_cofactor(gamma, (i,))
    if k != 0:
        out = out - right_cofactor(lam, (i,)).scale(k)
    return out


def right_star(lam: Poly, gamma: Poly, i: int) -> Poly:
    """``γ ⋆_λ x_i``, the mirror action built from left cofactors."""
    _require_comonic(lam)
    return _right_star(lam, gamma, i)


def _right_star(lam, gamma, i):
    k = gamma.constant_term
    out = left_cofactor((i,), gamma)
    if k != 0:
        out = out - left_cofactor((i,), lam).scale(k)
    return out


def word_star(lam: Poly, w: Word, gamma: Poly) -> Poly:
    """``w ⋆_λ γ`` with the last letter of ``w`` acting first."""
    _require_comonic(lam)
    for i in reversed(tuple(w)):
        if gamma.is_zero():
            break
        gamma = _star(lam, i, gamma)
    return gamma


def right_word_star(lam: Poly, gamma: Poly, w: Word) -> Poly:
    """``γ ⋆_λ w`` with the first letter of ``w`` acting first."""
    _require_comonic(lam)
    for i in tuple(w):
        if gamma.is_zero():
            break
        gamma = _right_star(lam, gamma, i)
    return gamma


def plain_action(i: int, gamma: Poly) -> Poly:
    """The untwisted action ``x_i ⋆ γ = γ_{x_i}``."""
    return right_cofactor(gamma, (i,))


def _heads(lam: Poly):
    hs = {w[:l] for w in lam.words() for l in range(1, len(w) + 1)}
    return sorted(hs, key=deglex_key)


def iterated_cofactors(lam: Poly):
    """Distinct nonzero ``λ_b`` over all nonempty heads ``b``, ordered by
    the deglex order of the first head producing each."""
    seen, out = set(), []
    for b in _heads(lam):
        c = right_cofactor(lam, b)
        if not c.is_zero() and c not in seen:
            seen.add(c)
            out.append(c)
    return out


def iterated_left_cofactors(lam: Poly):
    tails = {w[len(w) - l:] for w in lam.words() for l in range(1, len(w) + 1)}
    seen, out = set(), []
    for b in sorted(tails, key=lambda t: deglex_key(t[::-1])):
        c = left_cofactor(b, lam)
        if not c.is_zero() and c not in seen:
            seen.add(c)
            out.append(c)
    return out


@dataclass(frozen=True)
class FDModule:
    """A finite-dimensional module given by one matrix per variable.

    Column ``j`` of ``actions[i - 1]`` holds the coordinates of ``x_i``
    acting on basis vector ``j``.  ``basis`` and ``pivots`` are present for
    modules built from a polynomial and empty for abstract ones.
    """

    field: object
    dim: int
    actions: Tuple
    side: str = "left"
    basis: Tuple[Poly, ...] = ()
    pivots: Tuple[Word, ...] = ()
    origin: Optional[Poly] = dc_field(default=None, compare=False)

    @property
    def nvars(self) -> int:
        return len(self.actions)

    @classmethod
    def from_matrices(cls, field, matrices, side="left"):
        mats = tuple(tuple(tuple(field(x) for x in row) for row in M) for M in matrices)
        dim = len(mats[0]) if mats else 0
        return cls(field, dim, mats, side)

    def action(self, i: int):
        """Matrix of variable ``i`` (zero for variables beyond the alphabet)."""
        if i <= len(self.actions):
            return [list(r) for r in self.actions[i - 1]]
        return la.zeros(self.field, self.dim, self.dim)

    def matrices(self, nvars: int | None = None):
        n = self.nvars if nvars is None else nvars
        return [self.action(i) for i in range(1, n + 1)]

    def coords(self, gamma: Poly):
        """Coordinates of ``γ`` in :attr:`basis`; ValueError if outside."""
        if gamma.field != self.field:
            raise FieldMismatch(f"{gamma.field!r} vs {self.field!r}")
        cs = [gamma.coeff(p) for p in self.pivots]
        rest = gamma
        for c, b in zip(cs, self.basis):
            if c != 0:
                rest = rest - b.scale(c)
        if not rest.is_zero():
            raise ValueError(f"{gamma} is not in the span of the basis")
        return cs

    def element(self, coords) -> Poly:
        out = Poly.zero(self.field)
        for c, b in zip(coords, self.basis):
            if c != 0:
                out = out + b.scale(c)
        return out

    def act_word(self, w: Word, v):
        """Coordinates of the word ``w`` acting on coordinate vector ``v``.

        Left modules apply the last letter first, right modules the first.
        """
        letters = reversed(w) if self.side == "left" else iter(w)
        for i in letters:
            v = la.matvec(self.field, self.action(i), v)
        return v

    def to_dict(self):
        from .parsing import format_poly
        F = self.field
        return {
            "field": F.descriptor,
            "side": self.side,
            "dim": self.dim,
            "basis": [format_poly(b) for b in self.basis],
            "actions": [[[F.format(x) for x in row] for row in M] for M in self.actions],
            "origin": None if self.origin is None else format_poly(self.origin),
        }

    @classmethod
    def from_dict(cls, data):
        from .parsing import parse_poly
        F = field_from_descriptor(data["field"])
        mats = tuple(tuple(tuple(F(x) for x in row) for row in M) for M in data["actions"])
        basis = tuple(parse_poly(s, F) for s in data.get("basis", []))
        pivots = tuple(b.leading_word() for b in basis)
        origin = data.get("origin")
        return cls(F, int(data["dim"]), mats, data.get("side", "left"), basis, pivots,
                   None if origin is None else parse_poly(origin, F))


def _echelon_polys(F, polys):
    """RREF basis of the span of ``polys`` with deglex-largest pivots."""
    cols = sorted({w for p in polys for w in p.words()}, key=deglex_key, reverse=True)
    index = {w: j for j, w in enumerate(cols)}
    rows = []
    for p in polys:
        r = [F.zero] * len(cols)
        for w, c in p.terms():
            r[index[w]] = c
        rows.append(r)
    R, piv = la.rref(F, rows)
    basis = [Poly(F, {cols[j]: c for j, c in enumerate(r) if c != 0}) for r in R]
    return basis, [cols[j] for j in piv]


def _build(lam: Poly, nvars, side):
    F = lam.field
    _, lam = comonic_normalize(lam)
    n = max(lam.max_variable(), nvars or 0, 1)
    gens = iterated_cofactors(lam) if side == "left" else iterated_left_cofactors(lam)
    basis, pivots = _echelon_polys(F, gens)
    d = len(basis)
    skel = FDModule(F, d, (), side, tuple(basis), tuple(pivots), lam)
    mats = []
    for i in range(1, n + 1):
        cols = []
        for b in basis:
            img = _star(lam, i, b) if side == "left" else _right_star(lam, b, i)
            cols.append(skel.coords(img))
        mats.append(tuple(tuple(cols[j][r] for j in range(d)) for r in range(d)))
    return FDModule(F, d, tuple(mats), side, tuple(basis), tuple(pivots), lam)


def build_v(lam: Poly, nvars: int | None = None) -> FDModule:
    """The left module V_λ (``λ`` is normalized to be comonic first)."""
    return _build(lam, nvars, "left")


def build_w(lam: Poly, nvars: int | None = None) -> FDModule:
    """The right module W_λ spanned by iterated left cofactors."""
    return _build(lam, nvars, "right")
