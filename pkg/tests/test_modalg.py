import itertools
import random

import pytest
from hypothesis import given, strategies as st

from helpers import SMALL_FIELDS, comonic
from ncfactor import (GF, QQ, FDModule, build_v, build_w, composition_series, endomorphism_ring,
                      hom_space, indecomposable_summands, is_isomorphic, is_simple,
                      minimal_submodules, parse_poly, spin)
from ncfactor import linalg as la
from ncfactor.errors import FieldMismatch, SideMismatch, ZeroModule
from ncfactor.modalg import direct_sum, maximal_submodule, minimal_submodule, pair_isomorphic


def P(t, F=QQ):
    return parse_poly(t, F)


@st.composite
def small_modules(draw, F, max_dim=3, nvars=2):
    d = draw(st.integers(1, max_dim))
    entry = st.integers(0, F.order - 1)
    mats = [[[draw(entry) for _ in range(d)] for _ in range(d)] for _ in range(nvars)]
    return FDModule.from_matrices(F, mats)


def brute_is_simple(M):
    F = M.field
    for v in F.vectors(M.dim):
        if any(v) and spin(M, [list(v)]).dim < M.dim:
            return False
    return True


def is_closed(M, U):
    return all(U.contains(la.matvec(M.field, M.action(i), v))
               for v in U.vectors for i in range(1, M.nvars + 1))


def commutes(M, N, T):
    F = M.field
    return all(la.matmul(F, N.action(i), T) == la.matmul(F, T, M.action(i))
               for i in range(1, max(M.nvars, N.nvars) + 1))


@given(st.data())
def test_is_simple_agrees_with_spinning_every_vector(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    M = data.draw(small_modules(F))
    assert is_simple(M, random.Random(0)) == brute_is_simple(M)


@given(st.data())
def test_spin_is_closed_and_contains_seeds(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    M = data.draw(small_modules(F))
    seed = data.draw(st.lists(st.integers(0, F.order - 1), min_size=M.dim, max_size=M.dim))
    U = spin(M, [seed])
    assert U.contains(seed) and is_closed(M, U)


@given(st.data())
def test_jordan_holder_invariance(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    lam = data.draw(comonic(F, nvars=2, max_deg=3))
    M = build_v(lam, 2)
    a = composition_series(M, random.Random(1))
    b = composition_series(M, random.Random(2))
    assert sum(S.dim for S in a) == M.dim
    assert all(is_simple(S) for S in a)
    assert pair_isomorphic(a, b)


@given(st.data())
def test_hom_space_solves_intertwining(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    M = build_v(data.draw(comonic(F, nvars=2)), 2)
    N = build_v(data.draw(comonic(F, nvars=2)), 2)
    for T in hom_space(M, N):
        assert commutes(M, N, T)
    E = hom_space(M, M)
    ident = la.identity(F, M.dim)
    flat = [sum(T, []) for T in E]
    assert la.rank(F, flat + [sum(ident, [])]) == la.rank(F, flat)


@given(st.data())
def test_schur(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    M = build_v(data.draw(comonic(F, nvars=2)), 2)
    for S in composition_series(M):
        E = endomorphism_ring(S)
        assert E.is_division
        for T in E.basis:
            assert la.is_invertible(F, [list(r) for r in T])


def test_spin_examples():
    V = build_v(P("1 + x1*x2"))
    assert spin(V, [V.coords(P("1"))]).dim == 2
    assert spin(V, [[0, 0]]).dim == 0
    W = build_v(P("(1 + x1)*(1 + x2)"))
    U = spin(W, [W.coords(P("1 + x2"))])
    assert U.dim == 1 and U.is_proper()


def test_simplicity_examples():
    assert is_simple(build_v(P("1 + x1^2 + x2^2")))
    assert not is_simple(build_v(P("(1 + x1)*(1 + x2)")))
    assert is_simple(build_v(P("1 + 3*x1 - x2")))
    with pytest.raises(ZeroModule):
        is_simple(build_v(P("1")))


def test_composition_lengths():
    series = composition_series(build_v(P("(1 + x1)*(1 + x2)")))
    assert [S.dim for S in series] == [1, 1]
    assert len(composition_series(build_v(P("1 + x1*x2")))) == 1


def test_hom_examples():
    a, b = build_v(P("1 + x1*x2")), build_v(P("1 + x2*x1"))
    assert len(hom_space(a, b)) == 1
    trivial = FDModule.from_matrices(QQ, [[[0]], [[0]]])
    assert hom_space(a, trivial) == []
    T = is_isomorphic(a, b)
    assert T is not None and commutes(a, b, T)
    assert is_isomorphic(a, build_v(P("1 + x1 + x2"))) is None


def test_hom_checks_side_and_field():
    with pytest.raises(SideMismatch):
        hom_space(build_v(P("1 + x1*x2")), build_w(P("1 + x1*x2")))
    with pytest.raises(FieldMismatch):
        hom_space(build_v(P("1 + x1")), build_v(P("1 + x1", GF(2))))


@pytest.mark.parametrize("p", [2, 3])
def test_minimal_submodules_of_square(p):
    F = GF(p)
    S = build_v(P("1 + x1*x2", F))
    subs = minimal_submodules(direct_sum(S, S))
    assert len(subs) == p + 1
    assert all(U.dim == 2 for U in subs)


def test_minimal_and_maximal_submodules():
    M = build_v(P("(1 + x1)*(1 + x2)"))
    lo, hi = minimal_submodule(M), maximal_submodule(M)
    assert lo.dim == 1 and hi.dim == 1
    assert is_closed(M, lo) and is_closed(M, hi)
    assert len(minimal_submodules(M)) == 1


def test_indecomposable_summands():
    F = GF(2)
    a, b = build_v(P("1 + x1", F), 2), build_v(P("1 + x1*x2", F), 2)
    parts = indecomposable_summands(direct_sum(a, b))
    assert sorted(M.dim for M in parts) == [1, 2]
    assert len(indecomposable_summands(build_v(P("(1 + x1*x2)^2", F)))) == 1
    assert len(indecomposable_summands(build_v(P("(1 + x1*x2)^2")))) == 1


def test_endomorphism_ring_of_nonsimple():
    E = endomorphism_ring(build_v(P("(1 + x1*x2)^2", GF(2))))
    assert E.dim == 2 and not E.is_division
    assert E.structure_constants[0][0] is not None
