"""Divisibility, quotients, division with remainder and the generalized gcd.

``γ`` right-divides ``λ`` exactly when every word of length ``deg λ`` acting
through ``⋆_γ`` sends ``λ`` to zero.  The same terminal values are the
remainders of a division and, collected over a working set, drive the gcd
loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import (InternalReconstructionFailure, NotDivisible, ZeroConstantTerm,
                     ZeroPolynomial)
from .freealg import Poly, Word, comonic_normalize, right_cofactor, transpose
from .leavitt import LeavittElement
from .vmodule import _star


def _letters(*polys):
    return sorted({x for p in polys for x in p.variables()})


def _as_comonic(gamma: Poly) -> Tuple[object, Poly]:
    if gamma.constant_term == 0:
        raise ZeroConstantTerm(f"divisor {gamma} has zero constant term")
    return comonic_normalize(gamma)


def _kills(gamma: Poly, lam: Poly, letters, depth: int) -> bool:
    memo = {}

    def go(p, r):
        if p.is_zero():
            return True
        if r == 0:
            return False
        key = (p, r)
        if key not in memo:
            memo[key] = all(go(_star(gamma, i, p), r - 1) for i in letters)
        return memo[key]

    return go(lam, depth)


def terminal_values(gamma: Poly, lam: Poly, depth: Optional[int] = None) -> Dict[Word, Poly]:
    """Nonzero ``w ⋆_γ λ`` over all words ``w`` of length ``depth``
    (default ``deg λ``), keyed by ``w`` in deglex order.

    ``γ`` must be comonic.  Letters outside the support of ``γ`` and ``λ``
    act as zero and are skipped.
    """
    if depth is None:
        depth = max(lam.degree, 0)
    letters = _letters(gamma, lam)
    memo = {}

    def go(p, r):
        if p.is_zero():
            return {}
        if r == 0:
            return {(): p}
        key = (p, r)
        if key not in memo:
            out = {}
            for i in letters:
                for w, v in go(_star(gamma, i, p), r - 1).items():
                    out[w + (i,)] = v
            memo[key] = out
        return memo[key]

    vals = go(lam, depth)
    return dict(sorted(vals.items(), key=lambda t: (len(t[0]), t[0])))


def right_divides(gamma: Poly, lam: Poly) -> bool:
    """Whether ``λ = δ γ`` for some polynomial ``δ``."""
    _, g = _as_comonic(gamma)
    if lam.is_zero() or g.degree == 0:
        return True
    if lam.degree < g.degree:
        return False
    return _kills(g, lam, _letters(g, lam), lam.degree)


def divisibility_witness(gamma: Poly, lam: Poly) -> Optional[Tuple[Word, Poly]]:
    """First word (deglex) with ``w ⋆_γ λ ≠ 0``, or ``None`` if ``γ`` divides."""
    _, g = _as_comonic(gamma)
    if lam.is_zero() or g.degree == 0:
        return None
    vals = terminal_values(g, lam)
    return next(iter(vals.items()), None)


def left_divides(gamma: Poly, lam: Poly) -> bool:
    """Whether ``λ = γ δ`` for some polynomial ``δ``."""
    return right_divides(transpose(gamma), transpose(lam))


def _left_quotient_comonic(lam: Poly, g: Poly) -> Poly:
    F = lam.field
    letters = _letters(g, lam)
    memo = {}

    def go(p):
        if p.is_zero():
            return p
        if p.degree < g.degree:
            raise NotDivisible(f"{g} does not right-divide the dividend")
        if p not in memo:
            q = Poly.constant(F, p.constant_term)
            for i in letters:
                sub = go(_star(g, i, p))
                if not sub.is_zero():
                    q = q + Poly.var(F, i) * sub
            memo[p] = q
        return memo[p]

    delta = go(lam)
    if delta * g != lam:
        raise NotDivisible(f"{g} does not right-divide {lam}")
    return delta


def left_quotient(lam: Poly, gamma: Poly) -> Poly:
    """The ``δ`` with ``λ = δ γ``."""
    k, g = _as_comonic(gamma)
    if g.degree == 0:
        return lam.scale(lam.field.inv(k))
    return _left_quotient_comonic(lam, g).scale(lam.field.inv(k))


def right_quotient(lam: Poly, gamma: Poly) -> Poly:
    """The ``δ`` with ``λ = γ δ``."""
    return transpose(left_quotient(transpose(lam), transpose(gamma)))


@dataclass(frozen=True)
class DivisionResult:
    quotient: Poly
    remainder_terms: Dict[Word, Poly]
    assembled_remainder: Poly
    exact: bool
    divisor: Poly


def divmod(lam: Poly, gamma: Poly) -> DivisionResult:
    """``λ = ρ γ + Σ_b b δ_b`` with ``δ_b = (τb) ⋆_γ λ`` over ``|b| = deg λ``."""
    k, g = _as_comonic(gamma)
    F = lam.field
    if lam.is_zero():
        return DivisionResult(lam, {}, lam, True, gamma)
    if g.degree == 0:
        return DivisionResult(lam.scale(F.inv(k)), {}, Poly.zero(F), True, gamma)
    vals = terminal_values(g, lam)
    terms = {w[::-1]: v for w, v in vals.items()}
    terms = dict(sorted(terms.items(), key=lambda t: (len(t[0]), t[0])))
    rem = Poly.zero(F)
    for b, v in terms.items():
        rem = rem + Poly.monomial(F, b) * v
    try:
        rho = left_quotient(lam - rem, gamma)
    except NotDivisible as exc:
        raise InternalReconstructionFailure(str(exc)) from exc
    if rho * gamma + rem != lam:
        raise InternalReconstructionFailure("division identity failed")
    return DivisionResult(rho, terms, rem, not terms, gamma)


def reduce_zero_constant(lam: Poly) -> List[Poly]:
    """Replace a zero-constant ``λ`` by its variable cofactors, recursively,
    until all constant terms are nonzero.  The result generates the same
    left ideal in the Leavitt localization."""
    if lam.is_zero():
        raise ZeroPolynomial("cannot reduce the zero polynomial")
    return [p for p, _ in _reduce_paths(lam)]


@dataclass
class GcdResult:
    gcd: Poly
    certificate: Optional[List[LeavittElement]] = None
    witnesses: List[Tuple[Poly, Poly, Word, Poly]] = field(default_factory=list)
    alphabet: int = 2

    @property
    def is_trivial(self) -> bool:
        return self.gcd.is_constant()


def gcd(inputs, want_certificate: bool = False) -> GcdResult:
    """Comonic generator of the left ideal of the Leavitt localization
    generated by ``inputs``.

    With ``want_certificate`` the result carries Leavitt coefficients
    ``c_j`` with ``Σ c_j inputs[j] = gcd``.  ``witnesses`` records the
    nonzero terminal values ``(α, β, w, w ⋆_α β)`` met along the way.
    """
    inputs = list(inputs)
    if not inputs:
        raise ValueError("gcd of an empty list")
    F = inputs[0].field
    n = max([2] + [p.max_variable() for p in inputs])
    track = want_certificate

    def unit(j):
        vec = [LeavittElement.zero(F, n) for _ in inputs]
        vec[j] = LeavittElement.one(F, n)
        return vec

    def scale(cert, k):
        return None if cert is None else [c.scale(k) for c in cert]

    work: List[Tuple[Poly, object]] = []

    def adjoin(p, cert):
        if p.constant_term == 0:
            for q, qc in _reduce_list(p, cert):
                adjoin(q, qc)
            return
        k, g = comonic_normalize(p)
        if all(g != h for h, _ in work):
            work.append((g, scale(cert, F.inv(k))))

    def _reduce_list(p, cert):
        if cert is None:
            return [(q, None) for q in reduce_zero_constant(p)]
        pairs = []
        for q, path in _reduce_paths(p):
            c = cert
            for i in path:
                c = [LeavittElement.star_gen(F, n, i) * x for x in c]
            pairs.append((q, c))
        return pairs

    for j, p in enumerate(inputs):
        if p.is_zero():
            raise ZeroPolynomial("gcd inputs must be nonzero")
        adjoin(p, unit(j) if track else None)

    witnesses = []
    while True:
        for g, c in work:
            if g.degree == 0:
                return GcdResult(g, c, witnesses, n)
        if len(work) == 1:
            g, c = work[0]
            return GcdResult(g, c, witnesses, n)
        order = sorted(range(len(work)), key=lambda t: (work[t][0].degree, t))
        alpha, alpha_cert = work[order[0]]
        rest = [work[t] for t in order[1:]]
        work = [(alpha, alpha_cert)]
        fresh = []
        for beta, beta_cert in rest:
            vals = _terminal_with_certs(alpha, alpha_cert, beta, beta_cert, F, n)
            if not vals:
                continue
            for w, (v, vc) in vals.items():
                witnesses.append((alpha, beta, w, v))
                fresh.append((v, vc))
        for v, vc in fresh:
            adjoin(v, vc)


def _reduce_paths(lam):
    """Like :func:`reduce_zero_constant` but also returns, for every output,
    the letters whose starred generators produce it from ``λ``."""
    out, seen = [], set()

    def visit(p, path):
        if p.constant_term != 0:
            if p not in seen:
                seen.add(p)
                out.append((p, path))
            return
        for i in sorted({w[0] for w in p.words()}):
            visit(right_cofactor(p, (i,)), path + (i,))

    visit(lam, ())
    return out


def _terminal_with_certs(alpha, alpha_cert, beta, beta_cert, F, n):
    """Distinct nonzero terminal values ``w ⋆_α β`` (``|w| = deg β``),
    each with a certificate when ``beta_cert`` is given."""
    depth = max(beta.degree, 0)
    vals = terminal_values(alpha, beta, depth)
    out = {}
    seen = set()
    for w, v in vals.items():
        if v in seen:
            continue
        seen.add(v)
        cert = None
        if beta_cert is not None:
            cert = list(beta_cert)
            p = beta
            for i in reversed(w):
                k = p.constant_term
                xs = LeavittElement.star_gen(F, n, i)
                cert = [xs * cb - (xs * ca).scale(k) for cb, ca in zip(cert, alpha_cert)]
                p = _star(alpha, i, p)
        out[w] = (v, cert)
    return out
