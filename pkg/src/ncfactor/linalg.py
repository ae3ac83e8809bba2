"""Dense exact linear algebra over a :mod:`ncfactor.fields` field.

Vectors are lists of scalars and matrices are lists of rows.  Nothing here
knows about polynomials; callers translate to coordinates first.
"""

from __future__ import annotations

from typing import List, Sequence

Vector = List
Matrix = List[List]


def zeros(F, rows: int, cols: int) -> Matrix:
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n: int) -> Matrix:
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def unit_vector(F, n: int, i: int) -> Vector:
    v = [F.zero] * n
    v[i] = F.one
    return v


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def matmul(F, A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    Bt = transpose(B)
    if not Bt:
        return [[] for _ in A]
    return [[F(sum(a * b for a, b in zip(row, col) if a and b)) for col in Bt] for row in A]


def matvec(F, A: Matrix, v: Sequence) -> Vector:
    return [F(sum(a * b for a, b in zip(row, v) if a and b)) for row in A]


def mat_add(F, A: Matrix, B: Matrix) -> Matrix:
    return [[F(a + b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(F, k, A: Matrix) -> Matrix:
    return [[F(k * a) for a in row] for row in A]


def mat_lincomb(F, coeffs, mats, n_rows, n_cols) -> Matrix:
    out = zeros(F, n_rows, n_cols)
    for c, M in zip(coeffs, mats):
        if c == 0:
            continue
        for i in range(n_rows):
            ri, Mi = out[i], M[i]
            for j in range(n_cols):
                if Mi[j]:
                    ri[j] = F(ri[j] + c * Mi[j])
    return out


def is_zero_vector(v) -> bool:
    return not any(v)


def rref(F, rows: Sequence[Sequence]):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F(x * inv) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [F(a - f * b) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F, A: Matrix, ncols: int | None = None):
    """Basis of ``{v : A v = 0}``, one vector per free column, each with a
    1 in its free column."""
    return nullspace_free(F, A, ncols)[0]


def nullspace_free(F, A: Matrix, ncols: int | None = None):
    """Like :func:`nullspace` but also returns the free columns, which
    serve as coordinates on the kernel."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    R, pivots = rref(F, A) if A else ([], [])
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for row, p in zip(R, pivots):
            if row[f] != 0:
                v[p] = F(-row[f])
        basis.append(v)
    return basis, [f for f in range(ncols) if f not in pivset]


def inverse(F, A: Matrix):
    """Inverse of a square matrix, or ``None`` when singular."""
    n = len(A)
    aug = [list(row) + unit_vector(F, n, i) for i, row in enumerate(A)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        return None
    return [row[n:] for row in R]


def is_invertible(F, A: Matrix) -> bool:
    return rank(F, A) == len(A)


class Echelon:
    """Incrementally maintained reduced echelon basis of a subspace."""

    def __init__(self, F, dim: int):
        self.F = F
        self.dim = dim
        self.rows: List[Vector] = []
        self.pivots: List[int] = []

    def reduce(self, v) -> Vector:
        F = self.F
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = [F(a - c * b) for a, b in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        F = self.F
        w = self.reduce(v)
        p = next((i for i, a in enumerate(w) if a != 0), None)
        if p is None:
            return False
        inv = F.inv(w[p])
        w = [F(a * inv) for a in w]
        for k, row in enumerate(self.rows):
            c = row[p]
            if c != 0:
                self.rows[k] = [F(a - c * b) for a, b in zip(row, w)]
        pos = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(pos, w)
        self.pivots.insert(pos, p)
        return True

    def contains(self, v) -> bool:
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v):
        """Coefficients of ``v`` against :attr:`rows`; ``None`` if outside."""
        if not self.contains(v):
            return None
        return [v[p] for p in self.pivots]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)


# -- univariate polynomials (coefficient lists, lowest degree first) -------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def charpoly(F, A: Matrix):
    """Characteristic polynomial ``det(tI - A)`` via Hessenberg reduction.

    Returned as a monic coefficient list, constant term first.
    """
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] != 0), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = F.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = F(H[i][m - 1] * inv)
            if u == 0:
                continue
            H[i] = [F(a - u * b) for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = F(row[m] + u * row[i])
    # p_k = charpoly of the leading k x k block
    polys = [[F.one]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = [F.zero] + list(prev)  # t * p_{k-1}
        for j, a in enumerate(prev):
            cur[j] = F(cur[j] - H[k - 1][k - 1] * a)
        prod = F.one
        for i in range(k - 1, 0, -1):
            prod = F(prod * H[i][i - 1])
            if prod == 0:
                break
            h = F(prod * H[i - 1][k - 1])
            if h != 0:
                for j, a in enumerate(polys[i - 1]):
                    cur[j] = F(cur[j] - h * a)
        polys.append(cur)
    return polys[n]


def poly_at_matrix(F, coeffs, A: Matrix) -> Matrix:
    n = len(A)
    out = zeros(F, n, n)
    for c in reversed(coeffs):
        out = matmul(F, out, A) if n else out
        for i in range(n):
            out[i][i] = F(out[i][i] + c)
    return out


def factor_univariate(F, coeffs):
    """Monic irreducible factors of a univariate polynomial with
    multiplicities: ``[(factor_coeffs, e), ...]`` (constant term first)."""
    coeffs = _trim(coeffs)
    if len(coeffs) <= 1:
        return []
    if F.characteristic:
        from sympy.polys.domains import ZZ
        from sympy.polys.galoistools import gf_factor
        p = F.characteristic
        _, facs = gf_factor([int(c) for c in reversed(coeffs)], p, ZZ)
        return [([F(int(c)) for c in reversed(f)], e) for f, e in facs]
    import sympy
    t = sympy.Symbol("t")
    P = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                   t, domain="QQ")
    _, facs = P.factor_list()
    out = []
    for f, e in facs:
        f = f.monic()
        out.append(([F(_to_fraction(c)) for c in reversed(f.all_coeffs())], e))
    return out


def _to_fraction(c):
    from fractions import Fraction
    return Fraction(int(c.p), int(c.q))
