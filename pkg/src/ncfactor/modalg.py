"""Algorithms on finite-dimensional modules given by action matrices.

Everything here works on coordinate vectors and matrices; the modules may
come from :func:`ncfactor.vmodule.build_v` or be written down directly.
Randomized routines take a ``random.Random`` instance and a ``budget`` that
caps any exhaustive enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from . import linalg as la
from .errors import FieldMismatch, InfeasibleEnumeration, SideMismatch, ZeroModule
from .vmodule import FDModule

DEFAULT_BUDGET = 10 ** 6
MEATAXE_ATTEMPTS = 200
ISO_ATTEMPTS = 25


def _rng(rng):
    if rng is None:
        return random.Random(0)
    if isinstance(rng, int):
        return random.Random(rng)
    return rng


def _random_scalar(F, rng, bound=3):
    return F.random(rng, bound)


@dataclass(frozen=True)
class SubmoduleBasis:
    """An invariant subspace of ``parent`` in reduced echelon form."""

    parent: FDModule
    vectors: Tuple[Tuple, ...]
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def is_proper(self) -> bool:
        return 0 < self.dim < self.parent.dim

    def contains(self, v) -> bool:
        e = la.Echelon(self.parent.field, self.parent.dim)
        e.rows = [list(r) for r in self.vectors]
        e.pivots = list(self.pivots)
        return e.contains(v)

    def polys(self):
        """The subspace as polynomials, when the parent has a basis."""
        return [self.parent.element(v) for v in self.vectors]

    def submodule(self) -> FDModule:
        M, F = self.parent, self.parent.field
        mats = []
        for A in M.matrices():
            cols = [[w[p] for p in self.pivots] for w in (la.matvec(F, A, v) for v in self.vectors)]
            mats.append(tuple(tuple(cols[j][r] for j in range(self.dim)) for r in range(self.dim)))
        basis = tuple(M.element(v) for v in self.vectors) if M.basis else ()
        pivots = tuple(b.leading_word() for b in basis)
        return FDModule(F, self.dim, tuple(mats), M.side, basis, pivots, M.origin)

    def quotient(self) -> FDModule:
        M, F = self.parent, self.parent.field
        ech = self._echelon()
        free = [c for c in range(M.dim) if c not in set(self.pivots)]
        q = len(free)
        mats = []
        for A in M.matrices():
            cols = []
            for c in free:
                img = ech.reduce([row[c] for row in A])
                cols.append([img[f] for f in free])
            mats.append(tuple(tuple(cols[j][r] for j in range(q)) for r in range(q)))
        return FDModule(F, q, tuple(mats), M.side)

    def _echelon(self):
        e = la.Echelon(self.parent.field, self.parent.dim)
        e.rows = [list(r) for r in self.vectors]
        e.pivots = list(self.pivots)
        return e


def _from_echelon(M, ech) -> SubmoduleBasis:
    return SubmoduleBasis(M, tuple(tuple(r) for r in ech.rows), tuple(ech.pivots))


def _subspace(M, vectors) -> SubmoduleBasis:
    e = la.Echelon(M.field, M.dim)
    for v in vectors:
        e.add(v)
    return _from_echelon(M, e)


def _spin(F, dim, mats, seeds):
    ech = la.Echelon(F, dim)
    queue = []
    for s in seeds:
        if ech.add(s):
            queue.append(list(s))
    while queue and ech.rank < dim:
        v = queue.pop()
        for A in mats:
            w = la.matvec(F, A, v)
            if ech.add(w):
                queue.append(w)
    return ech


def spin(M: FDModule, seeds) -> SubmoduleBasis:
    """Smallest invariant subspace containing ``seeds``."""
    return _from_echelon(M, _spin(M.field, M.dim, M.matrices(), seeds))


def dual(M: FDModule) -> FDModule:
    """Module on the dual space: every matrix transposed."""
    mats = tuple(tuple(map(tuple, la.transpose(A))) if A else () for A in M.matrices())
    return FDModule(M.field, M.dim, mats, M.side)


def annihilator(M: FDModule, dual_vectors) -> SubmoduleBasis:
    """``{v : w . v = 0 for every w}``; invariant when the ``w`` span a
    submodule of :func:`dual`."""
    rows = [list(w) for w in dual_vectors]
    if not rows:
        return _subspace(M, [la.unit_vector(M.field, M.dim, i) for i in range(M.dim)])
    return _subspace(M, la.nullspace(M.field, rows, M.dim))


def _random_element(F, pool, d, rng):
    a = la.mat_scale(F, _random_scalar(F, rng), la.identity(F, d))
    picks = rng.sample(range(len(pool)), min(len(pool), 6))
    for k in picks:
        c = _random_scalar(F, rng)
        if c:
            a = la.mat_add(F, a, la.mat_scale(F, c, pool[k]))
    return a


def _projective_points(F, d):
    """Nonzero vectors with leading nonzero entry 1, one per line."""
    for lead in range(d):
        for tailv in F.vectors(d - lead - 1):
            yield [F.zero] * lead + [F.one] + list(tailv)


def find_proper_submodule(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET
                          ) -> Optional[SubmoduleBasis]:
    """A proper nonzero submodule of ``M``, or ``None`` when ``M`` is simple.

    Uses the Holt-Rees form of the MeatAxe: for a random algebra element
    ``a`` and an irreducible factor ``f`` of its characteristic polynomial
    with ``dim ker f(a) = deg f``, ``M`` is simple exactly when a kernel
    vector spins to ``M`` and a kernel vector of the transpose spins to the
    whole dual.
    """
    F, d = M.field, M.dim
    if d == 0:
        raise ZeroModule("the zero module has no simplicity status")
    if d == 1:
        return None
    rng = _rng(rng)
    mats = M.matrices()
    for k in range(d):
        ech = _spin(F, d, mats, [la.unit_vector(F, d, k)])
        if ech.rank < d:
            return _from_echelon(M, ech)
    mats_t = [la.transpose(A) for A in mats]
    pool = [A for A in mats if any(any(r) for r in A)]
    if not pool:
        pool = [la.zeros(F, d, d)]
    for _ in range(MEATAXE_ATTEMPTS):
        if len(pool) < 40:
            pool.append(la.matmul(F, rng.choice(pool), rng.choice(pool)))
        a = _random_element(F, pool, d, rng)
        factors = sorted(la.factor_univariate(F, la.charpoly(F, a)), key=lambda fe: len(fe[0]))
        for f, _ in factors:
            deg = len(f) - 1
            B = la.poly_at_matrix(F, f, a)
            N = la.nullspace(F, B, d)
            ech = _spin(F, d, mats, [N[0]])
            if ech.rank < d:
                return _from_echelon(M, ech)
            if len(N) == deg:
                Nt = la.nullspace(F, la.transpose(B), d)
                ech_t = _spin(F, d, mats_t, [Nt[0]])
                if ech_t.rank < d:
                    return annihilator(M, ech_t.rows)
                return None
    return _exhaustive_proper(M, budget)


def _exhaustive_proper(M, budget):
    F, d = M.field, M.dim
    if F.order is None:
        raise InfeasibleEnumeration(
            "randomized simplicity test inconclusive and the rationals cannot be enumerated")
    count = (F.order ** d - 1) // (F.order - 1)
    if count > budget:
        raise InfeasibleEnumeration(f"{count} seed lines exceed the budget of {budget}")
    mats = M.matrices()
    for v in _projective_points(F, d):
        ech = _spin(F, d, mats, [v])
        if ech.rank < d:
            return _from_echelon(M, ech)
    return None


def is_simple(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> bool:
    return find_proper_submodule(M, rng, budget) is None


def _lift(U: SubmoduleBasis, T: SubmoduleBasis) -> SubmoduleBasis:
    """``T`` is a submodule of ``U.submodule()``; express it inside ``U.parent``."""
    F = U.parent.field
    vecs = []
    for c in T.vectors:
        v = [F.zero] * U.parent.dim
        for cj, u in zip(c, U.vectors):
            if cj:
                v = [F(a + cj * b) for a, b in zip(v, u)]
        vecs.append(v)
    return _subspace(U.parent, vecs)


def minimal_submodule(M: FDModule, rng=None, budget=DEFAULT_BUDGET) -> SubmoduleBasis:
    """Some simple submodule of ``M``."""
    rng = _rng(rng)
    U = _subspace(M, [la.unit_vector(M.field, M.dim, i) for i in range(M.dim)])
    while True:
        T = find_proper_submodule(U.submodule(), rng, budget)
        if T is None:
            return U
        U = _lift(U, T)


def maximal_submodule(M: FDModule, rng=None, budget=DEFAULT_BUDGET) -> SubmoduleBasis:
    """Some submodule of ``M`` with simple quotient."""
    D = dual(M)
    S = minimal_submodule(D, rng, budget)
    return annihilator(M, S.vectors)


def composition_series(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> List[FDModule]:
    """Simple subquotients of a composition series, bottom first."""
    rng = _rng(rng)
    if M.dim == 0:
        return []
    U = find_proper_submodule(M, rng, budget)
    if U is None:
        return [M]
    return (composition_series(U.submodule(), rng, budget)
            + composition_series(U.quotient(), rng, budget))


def composition_length(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> int:
    return len(composition_series(M, rng, budget))


def _check_pair(M, N):
    if M.field != N.field:
        raise FieldMismatch(f"{M.field!r} vs {N.field!r}")
    if M.side != N.side:
        raise SideMismatch(f"{M.side} vs {N.side}")


def _hom(M: FDModule, N: FDModule):
    """Basis of intertwiners plus the free coordinates that read them off."""
    _check_pair(M, N)
    F = M.field
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return [], []
    nv = max(M.nvars, N.nvars)
    rows = []
    for i in range(1, nv + 1):
        A, B = N.action(i), M.action(i)
        # (B_N T - T A_M)[r][c] with T[k][c] at index k*m + c
        for r in range(n):
            for c in range(m):
                row = [F.zero] * (n * m)
                for k in range(n):
                    if A[r][k]:
                        row[k * m + c] = F(row[k * m + c] + A[r][k])
                for k in range(m):
                    if B[k][c]:
                        row[r * m + k] = F(row[r * m + k] - B[k][c])
                if any(row):
                    rows.append(row)
    ns, free = la.nullspace_free(F, rows, n * m)
    mats = [[v[r * m:(r + 1) * m] for r in range(n)] for v in ns]
    return mats, free


def hom_space(M: FDModule, N: FDModule):
    """Basis of module maps ``M -> N`` as ``dim N x dim M`` matrices ``T``
    with ``A_i^N T = T A_i^M`` for every variable."""
    return _hom(M, N)[0]


def _lincomb(F, coeffs, mats, rows, cols):
    return la.mat_lincomb(F, coeffs, mats, rows, cols)


def is_isomorphic(M: FDModule, N: FDModule, rng=None, budget: int = DEFAULT_BUDGET):
    """An invertible intertwiner ``M -> N``, or ``None``."""
    _check_pair(M, N)
    if M.dim != N.dim:
        return None
    F, d = M.field, M.dim
    if d == 0:
        return []
    H = hom_space(M, N)
    if not H:
        return None
    for T in H:
        if la.is_invertible(F, T):
            return T
    rng = _rng(rng)
    k = len(H)
    bound = 50
    for _ in range(ISO_ATTEMPTS):
        coeffs = [F.random(rng, bound) for _ in range(k)]
        T = _lincomb(F, coeffs, H, d, d)
        if la.is_invertible(F, T):
            return T
    if F.order is not None and F.order ** k <= budget:
        for coeffs in F.vectors(k):
            T = _lincomb(F, coeffs, H, d, d)
            if la.is_invertible(F, T):
                return T
    return None


@dataclass(frozen=True)
class EndomorphismRing:
    dim: int
    basis: Tuple
    structure_constants: Tuple  # [a][b] -> coordinates of basis[a] @ basis[b]
    is_division: bool


def _coords_in(free, T, m):
    return [T[f // m][f % m] for f in free]


def endomorphism_ring(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> EndomorphismRing:
    rng = _rng(rng)
    F, d = M.field, M.dim
    basis, free = _hom(M, M)
    k = len(basis)
    consts = []
    for A in basis:
        row = []
        for B in basis:
            row.append(tuple(_coords_in(free, la.matmul(F, A, B), d)))
        consts.append(tuple(row))
    if k == 1 or (d and is_simple(M, rng, budget)):
        division = True
    else:
        # E is a division algebra iff its left regular module is simple
        left = []
        for a in range(k):
            L = [[consts[a][b][c] for b in range(k)] for c in range(k)]
            left.append(tuple(map(tuple, L)))
        division = is_simple(FDModule(F, k, tuple(left)), rng, budget)
    return EndomorphismRing(k, tuple(tuple(map(tuple, A)) for A in basis), tuple(consts), division)


def _distinct_classes(factors, rng, budget):
    classes = []
    for S in factors:
        if not any(C.dim == S.dim and is_isomorphic(C, S, rng, budget) is not None
                   for C in classes):
            classes.append(S)
    return classes


def _image(M, T) -> SubmoduleBasis:
    return _subspace(M, la.transpose(T))


def minimal_submodules(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> List[SubmoduleBasis]:
    """All simple submodules of ``M``.

    Simple submodules isomorphic to ``S`` are the images of nonzero maps
    ``S -> M``; two maps have the same image when they differ by an
    automorphism of ``S``.  When that space of maps has rank one over
    ``End(S)`` there is a single such submodule, otherwise they are
    enumerated over a finite field.
    """
    rng = _rng(rng)
    F = M.field
    if M.dim == 0:
        return []
    found = {}
    for S in _distinct_classes(composition_series(M, rng, budget), rng, budget):
        H = hom_space(S, M)
        if not H:
            continue
        e = endomorphism_ring(S, rng, budget).dim
        if len(H) == e:
            U = _image(M, H[0])
            found.setdefault(U.vectors, U)
            continue
        if F.order is None:
            raise InfeasibleEnumeration(
                "infinitely many simple submodules over the rationals")
        count = F.order ** len(H)
        if count > budget:
            raise InfeasibleEnumeration(f"{count} homomorphisms exceed the budget of {budget}")
        for coeffs in F.vectors(len(H)):
            if not any(coeffs):
                continue
            T = _lincomb(F, coeffs, H, M.dim, S.dim)
            U = _image(M, T)
            if U.dim == S.dim:
                found.setdefault(U.vectors, U)
    return [found[key] for key in sorted(found, key=lambda vs: (len(vs), [tuple(map(str, v)) for v in vs]))]


def _fitting_split(M, phi):
    """Split ``M`` along the coprime factors of the charpoly of ``phi``."""
    F, d = M.field, M.dim
    facs = la.factor_univariate(F, la.charpoly(F, phi))
    if len(facs) < 2:
        return None
    f, e = facs[0]
    g = [F.one]
    for _ in range(e):
        g = _polymul(F, g, f)
    G = la.poly_at_matrix(F, g, phi)
    K = _subspace(M, la.nullspace(F, G, d))
    image = _subspace(M, la.transpose(G))
    return K, image


def _polymul(F, a, b):
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F(out[i + j] + x * y)
    return out


def _split(M, rng, budget):
    """A decomposition ``(K, I)`` of ``M`` or ``None`` if indecomposable."""
    F, d = M.field, M.dim
    basis = hom_space(M, M)
    if len(basis) <= 1:
        return None
    for phi in basis:
        s = _fitting_split(M, phi)
        if s:
            return s
    for _ in range(ISO_ATTEMPTS):
        phi = _lincomb(F, [F.random(rng, 5) for _ in basis], basis, d, d)
        s = _fitting_split(M, phi)
        if s:
            return s
    if F.order is not None and F.order ** len(basis) <= budget:
        for coeffs in F.vectors(len(basis)):
            s = _fitting_split(M, _lincomb(F, coeffs, basis, d, d))
            if s:
                return s
        return None
    E = endomorphism_ring(M, rng, budget)
    if E.is_division or (F.characteristic == 0 and _is_local(F, E, rng, budget)):
        return None
    raise InfeasibleEnumeration("could not certify that the module is indecomposable")


def _left_regular(F, E: EndomorphismRing) -> FDModule:
    k = E.dim
    mats = []
    for a in range(k):
        mats.append(tuple(tuple(E.structure_constants[a][b][c] for b in range(k))
                          for c in range(k)))
    return FDModule(F, k, tuple(mats))


def _is_local(F, E: EndomorphismRing, rng, budget) -> bool:
    """Characteristic zero only: the radical is the kernel of the trace
    form, and the ring is local iff the quotient by it is a division ring."""
    R = _left_regular(F, E)
    L = R.matrices()
    gram = [[F(sum(la.matmul(F, A, B)[i][i] for i in range(E.dim))) for B in L] for A in L]
    J = _subspace(R, la.nullspace(F, gram, E.dim))
    top = J.quotient()
    return top.dim > 0 and is_simple(top, rng, budget)


def indecomposable_summands(M: FDModule, rng=None, budget: int = DEFAULT_BUDGET) -> List[FDModule]:
    """Krull-Schmidt decomposition of ``M`` via Fitting splits."""
    rng = _rng(rng)
    if M.dim == 0:
        return []
    s = _split(M, rng, budget)
    if s is None:
        return [M]
    K, image = s
    return (indecomposable_summands(K.submodule(), rng, budget)
            + indecomposable_summands(image.submodule(), rng, budget))


def direct_sum(M: FDModule, N: FDModule) -> FDModule:
    """Block-diagonal sum, handy for building test modules."""
    _check_pair(M, N)
    F, m, n = M.field, M.dim, N.dim
    mats = []
    for i in range(1, max(M.nvars, N.nvars) + 1):
        A, B = M.action(i), N.action(i)
        Z = la.zeros(F, m + n, m + n)
        for r in range(m):
            Z[r][:m] = A[r]
        for r in range(n):
            Z[m + r][m:] = B[r]
        mats.append(tuple(map(tuple, Z)))
    return FDModule(F, m + n, tuple(mats), M.side)


def pair_isomorphic(first, second, rng=None, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether two lists of modules agree as multisets up to isomorphism."""
    rng = _rng(rng)
    if len(first) != len(second):
        return False
    left = list(second)
    for M in first:
        hit = next((k for k, N in enumerate(left)
                    if N.dim == M.dim and is_isomorphic(M, N, rng, budget) is not None), None)
        if hit is None:
            return False
        left.pop(hit)
    return True
