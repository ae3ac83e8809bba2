"""Irreducibility, similarity and factorization through the module V_λ.

A polynomial with nonzero constant term is irreducible exactly when V_λ is
simple, the number of atoms in any factorization is the composition length
of V_λ, and two such polynomials are similar exactly when their modules are
isomorphic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import modalg
from .arith import gcd, left_quotient, reduce_zero_constant, right_divides
from .errors import (InfeasibleEnumeration, InternalReconstructionFailure,
                     ZeroConstantTerm, ZeroPolynomial)
from .freealg import Poly, comonic_normalize, deglex_key, transpose, words_of_length
from .modalg import DEFAULT_BUDGET
from .vmodule import FDModule, _echelon_polys, build_v

STRATEGIES = ("auto", "scan", "exhaustive", "lattice", "left")


def _rng(rng):
    return modalg._rng(rng)


def poly_key(p: Poly):
    """Deglex order on polynomials: compare the term lists from the top."""
    return (p.degree, [(deglex_key(w), str(c)) for w, c in reversed(p.terms())])


def _nonzero_constant(lam: Poly):
    if lam.is_zero():
        raise ZeroPolynomial("the zero polynomial has no factorization")
    if lam.constant_term == 0:
        raise ZeroConstantTerm(f"{lam} has zero constant term")


def is_irreducible(lam: Poly, rng=None, budget: int = DEFAULT_BUDGET) -> bool:
    _nonzero_constant(lam)
    if lam.degree < 1:
        return False
    return modalg.is_simple(build_v(lam), _rng(rng), budget)


def atom_count(lam: Poly, rng=None, budget: int = DEFAULT_BUDGET) -> int:
    _nonzero_constant(lam)
    return len(modalg.composition_series(build_v(lam), _rng(rng), budget))


def _pair(lam, gamma):
    n = max(lam.max_variable(), gamma.max_variable(), 1)
    return build_v(lam, n), build_v(gamma, n)


def evaluate(lam: Poly, point) -> object:
    """Value of ``λ`` at a point of ``K^n`` (scalars commute)."""
    F = lam.field
    total = F.zero
    for w, c in lam.terms():
        for i in w:
            c = F(c * point[i - 1])
        total = F(total + c)
    return total


def shift(lam: Poly, point) -> Poly:
    """Image of ``λ`` under the automorphism ``x_i -> x_i + point[i-1]``."""
    F = lam.field
    images = [Poly(F, {(i,): 1, (): c}) for i, c in enumerate(point, start=1)]
    cache = {(): Poly.constant(F, 1)}

    def word(w):
        if w not in cache:
            cache[w] = word(w[:-1]) * images[w[-1] - 1]
        return cache[w]

    out = Poly.zero(F)
    for w, c in lam.terms():
        out = out + word(w).scale(c)
    return out


def _shift_points(F, n, budget):
    if F.order is not None:
        values = list(F.elements())
    else:
        values = [F(v) for v in (0, 1, -1, 2, -2)]
    count = len(values) ** n
    if count > budget:
        raise InfeasibleEnumeration(f"{count} shift points exceed the budget of {budget}")
    pts = [tuple(values[0:1]) * 0]
    for _ in range(n):
        pts = [p + (v,) for p in pts for v in values]
    return sorted(pts, key=lambda p: (sum(1 for v in p if v != 0), [values.index(v) for v in p]))


def comonic_shift(polys, budget: int = DEFAULT_BUDGET):
    """A point ``c`` at which every polynomial has a nonzero value, so that
    all shifted polynomials carry a constant term; ``None`` if the search
    box has none."""
    F = polys[0].field
    n = max([1] + [p.max_variable() for p in polys])
    for c in _shift_points(F, n, budget):
        if all(evaluate(p, c) != 0 for p in polys):
            return c
    return None


def is_similar(lam: Poly, gamma: Poly, rng=None, budget: int = DEFAULT_BUDGET) -> bool:
    """Similarity test through V-module isomorphism.

    Inputs without constant term are first moved by a common translation
    ``x_i -> x_i + c_i``; automorphisms of the free algebra preserve
    similarity, so the answer is unchanged.
    """
    for p in (lam, gamma):
        if p.is_zero():
            raise ZeroPolynomial("the zero polynomial is only similar to itself")
    if lam.constant_term == 0 or gamma.constant_term == 0:
        c = comonic_shift([lam, gamma], budget)
        if c is None:
            raise ZeroConstantTerm("no translation gives both polynomials a constant term")
        lam, gamma = shift(lam, c), shift(gamma, c)
    M, N = _pair(lam, gamma)
    return modalg.is_isomorphic(M, N, _rng(rng), budget) is not None


def _comonic_polys(F, letters, max_deg, min_deg=1, budget=DEFAULT_BUDGET):
    """All comonic polynomials with ``min_deg <= degree <= max_deg`` in
    the given letters, lowest degree first."""
    if F.order is None:
        raise InfeasibleEnumeration("comonic polynomials over the rationals cannot be enumerated")
    for top in range(min_deg, max_deg + 1):
        lower = [w for l in range(1, top) for w in words_of_length(letters, l)]
        tops = list(words_of_length(letters, top))
        count = F.order ** len(lower) * (F.order ** len(tops) - 1)
        if count > budget:
            raise InfeasibleEnumeration(
                f"{count} candidates of degree {top} exceed the budget of {budget}")
        batch = []
        for tc in F.vectors(len(tops)):
            if not any(tc):
                continue
            for lc in F.vectors(len(lower)):
                terms = {(): 1}
                terms.update(zip(tops, tc))
                terms.update(zip(lower, lc))
                batch.append(Poly(F, terms))
        batch.sort(key=poly_key)
        yield from batch


def similarity_class(lam: Poly, rng=None, budget: int = DEFAULT_BUDGET) -> List[Poly]:
    """All comonic polynomials similar to ``λ`` (finite fields only)."""
    _nonzero_constant(lam)
    rng = _rng(rng)
    F = lam.field
    _, lam = comonic_normalize(lam)
    M = build_v(lam)
    letters = [i for i in range(1, M.nvars + 1) if any(any(r) for r in M.action(i))]
    if M.dim == 0:
        return [lam]
    out = []
    for g in _comonic_polys(F, letters, M.dim, 1, budget):
        N = build_v(g, M.nvars)
        if N.dim == M.dim and modalg.is_isomorphic(M, N, rng, budget) is not None:
            out.append(g)
    return out


@dataclass(frozen=True)
class Factorization:
    unit: object
    atoms: Tuple[Poly, ...]
    strategy: str = "auto"

    def product(self, field) -> Poly:
        out = Poly.constant(field, self.unit)
        for a in self.atoms:
            out = out * a
        return out

    def __len__(self):
        return len(self.atoms)


def _v_slice(lam: Poly, budget):
    """Comonic elements of V_λ, lowest degree first."""
    F = lam.field
    M = build_v(lam)
    if F.order is None:
        raise InfeasibleEnumeration("the comonic slice of V_λ is infinite over the rationals")
    # basis vectors without constant term span the zero-constant part
    one = Poly.constant(F, 1)
    zero_part = [b for b in M.basis if b.constant_term == 0]
    rest = [b for b in M.basis if b.constant_term != 0]
    # 1 lies in V_λ, so the remaining basis vectors are 1 plus zero-constant ones
    zero_part += [b - one.scale(b.constant_term) for b in rest]
    zero_part = [b for b in zero_part if not b.is_zero()]
    keep, _ = _echelon_polys(F, zero_part) if zero_part else ([], [])
    count = F.order ** len(keep)
    if count > budget:
        raise InfeasibleEnumeration(f"{count} comonic elements of V_λ exceed the budget of {budget}")
    cands = []
    for cs in F.vectors(len(keep)):
        g = one
        for c, b in zip(cs, keep):
            if c:
                g = g + b.scale(c)
        cands.append(g)
    cands.sort(key=poly_key)
    return cands


def _right_atom_by_scan(lam, cands, rng, budget):
    for g in cands:
        if 1 <= g.degree < lam.degree and right_divides(g, lam):
            if is_irreducible(g, rng, budget):
                return g
    return None


def _right_atom_lattice(lam, rng, budget):
    M = build_v(lam)
    U = modalg.maximal_submodule(M, rng, budget)
    g = gcd([lam] + U.polys()).gcd
    return g


def _left_atom(lam, rng, budget):
    """``(δ, γ)`` with ``λ = δ γ`` and ``δ`` irreducible."""
    M = build_v(lam)
    S = modalg.minimal_submodule(M, rng, budget)
    g = gcd([lam] + S.polys()).gcd
    return left_quotient(lam, g), g


def _factor(lam: Poly, strategy: str, rng, budget, used: list) -> List[Poly]:
    if lam.degree < 1:
        return []
    if is_irreducible(lam, rng, budget):
        return [lam]
    F = lam.field
    if strategy == "auto":
        strategy = "scan" if F.order is not None else "lattice"
    if strategy == "left":
        delta, g = _left_atom(lam, rng, budget)
        used.append("left")
        _, delta = comonic_normalize(delta)
        return [delta] + _factor(g, "left", rng, budget, used)
    g = None
    if strategy == "scan":
        g = _right_atom_by_scan(lam, _v_slice(lam, budget), rng, budget)
        used.append("scan")
        if g is None:
            strategy = "exhaustive"
    if strategy == "exhaustive":
        letters = lam.variables()
        for cand in _comonic_polys(F, letters, lam.degree - 1, 1, budget):
            if right_divides(cand, lam):
                g = cand
                break
        used.append("exhaustive")
    elif strategy == "lattice":
        g = _right_atom_lattice(lam, rng, budget)
        used.append("lattice")
    if g is None or g.degree < 1 or g.degree >= lam.degree:
        raise InternalReconstructionFailure(f"no proper right factor found for reducible {lam}")
    rest = left_quotient(lam, g)
    return _factor(rest, strategy, rng, budget, used) + [g]


def atomic_factorization(lam: Poly, strategy: str = "auto", rng=None,
                         budget: int = DEFAULT_BUDGET, verify: bool = True) -> Factorization:
    """Write ``λ`` as ``unit * a_1 * ... * a_m`` with comonic atoms ``a_i``.

    Strategies: ``scan`` tries the comonic elements of V_λ as right factors
    and falls back to ``exhaustive`` (all comonic candidates of lower
    degree); both need a finite field.  ``lattice`` takes the gcd of ``λ``
    with a maximal submodule of V_λ, ``left`` peels left factors off using
    a minimal submodule; these two also work over the rationals.  ``auto``
    picks ``scan`` over finite fields and ``lattice`` otherwise.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    _nonzero_constant(lam)
    rng = _rng(rng)
    k, lam0 = comonic_normalize(lam)
    used: list = []
    atoms = _factor(lam0, strategy, rng, budget, used)
    label = "+".join(dict.fromkeys(used)) or "irreducible"
    result = Factorization(k, tuple(atoms), label)
    if verify:
        _verify(lam, result, rng, budget)
    return result


def _verify(lam, result, rng, budget):
    if result.product(lam.field) != lam:
        raise InternalReconstructionFailure("atoms do not multiply back to the input")
    for a in result.atoms:
        if not is_irreducible(a, rng, budget):
            raise InternalReconstructionFailure(f"returned factor {a} is reducible")
    if len(result.atoms) > 1:
        n = max(lam.max_variable(), 1)
        factors = modalg.composition_series(build_v(lam, n), rng, budget)
        mods = [build_v(a, n) for a in result.atoms]
        if not modalg.pair_isomorphic(factors, mods, rng, budget):
            raise InternalReconstructionFailure("composition factors do not match the atoms")


@dataclass(frozen=True)
class ZeroConstantFactorization:
    """``left_form = (α, β)`` with ``λ = α β`` and ``α`` carrying a constant;
    ``right_form = (γ, δ)`` with ``λ = γ δ`` and ``δ`` carrying a constant."""

    left_form: Optional[Tuple[Poly, Poly]]
    right_form: Optional[Tuple[Poly, Poly]]


def _right_form(lam: Poly):
    g = gcd(reduce_zero_constant(lam)).gcd
    if g.degree < 1:
        return None
    rest = left_quotient(lam, g)
    if rest * g != lam:
        raise InternalReconstructionFailure("zero-constant right form does not reconstruct")
    return rest, g


def factor_zero_constant(lam: Poly) -> ZeroConstantFactorization:
    if lam.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if lam.constant_term != 0:
        raise ValueError(f"{lam} has a nonzero constant term")
    right = _right_form(lam)
    mirrored = _right_form(transpose(lam))
    left = None if mirrored is None else (transpose(mirrored[1]), transpose(mirrored[0]))
    return ZeroConstantFactorization(left, right)


def primary_components(lam: Poly, rng=None, budget: int = DEFAULT_BUDGET) -> List[FDModule]:
    _nonzero_constant(lam)
    return modalg.indecomposable_summands(build_v(lam), _rng(rng), budget)
