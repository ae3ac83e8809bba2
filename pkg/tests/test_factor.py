import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import SMALL_FIELDS, all_comonic, comonic
from ncfactor import (GF, QQ, Poly, atom_count, atomic_factorization, build_v,
                      factor_zero_constant, is_irreducible, is_similar, parse_poly,
                      primary_components, similarity_class)
from ncfactor.errors import InfeasibleEnumeration, ZeroConstantTerm, ZeroPolynomial
from ncfactor.factor import STRATEGIES, shift

F2, F3 = GF(2), GF(3)


def P(t, F=QQ):
    return parse_poly(t, F)


def product(F, ps):
    out = Poly.constant(F, 1)
    for p in ps:
        out = out * p
    return out


def brute_irreducible(F, lam):
    """Search every comonic right factor of lower degree."""
    letters = sorted(lam.variables())
    for d in range(1, lam.degree):
        for g in all_comonic(F, letters, d):
            if 1 <= g.degree < lam.degree:
                from ncfactor import right_divides
                if right_divides(g, lam):
                    return False
    return lam.degree >= 1


@settings(max_examples=30)
@given(st.data())
def test_factorization_round_trip(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    parts = data.draw(st.lists(comonic(F, nvars=2, max_deg=2, max_terms=3), min_size=1, max_size=3))
    lam = product(F, parts).scale(F(2) if F.order > 2 else F.one)
    strategy = data.draw(st.sampled_from(STRATEGIES))
    f = atomic_factorization(lam, strategy, random.Random(0))
    assert f.product(F) == lam
    assert all(brute_irreducible(F, a) for a in f.atoms)
    assert len(f) == atom_count(lam)


@pytest.mark.parametrize("strategy", ["auto", "lattice", "left"])
def test_rational_factorization(strategy):
    atoms = [P("1 + x1*x2"), P("1 - 2*x2"), P("1 + x1^2 + x2^2")]
    lam = product(QQ, atoms).scale(QQ(3))
    f = atomic_factorization(lam, strategy, random.Random(1))
    assert f.unit == 3 and f.product(QQ) == lam
    assert len(f) == 3 and all(is_irreducible(a) for a in f.atoms)


def test_scan_needs_finite_field():
    with pytest.raises(InfeasibleEnumeration):
        atomic_factorization(P("(1 + x1)*(1 + x2)"), "scan")
    with pytest.raises(ValueError):
        atomic_factorization(P("1 + x1"), "bogus")


def test_factor_example():
    f = atomic_factorization(P("1 + x1 + x2 + x1*x2", F2))
    assert list(f.atoms) == [P("1 + x1", F2), P("1 + x2", F2)]


def test_irreducibility_examples():
    assert is_irreducible(P("1 + x1*x2"))
    assert is_irreducible(P("1 + x1^2 + x2^2"))
    assert not is_irreducible(P("(1 + x1)*(1 + x2)"))
    assert not is_irreducible(P("5"))
    with pytest.raises(ZeroConstantTerm):
        is_irreducible(P("x1"))
    with pytest.raises(ZeroPolynomial):
        is_irreducible(P("0"))


@settings(max_examples=25)
@given(st.data())
def test_similarity_class_members(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    lam = data.draw(comonic(F, nvars=2, max_deg=2, max_terms=3))
    dim = build_v(lam).dim
    cls = similarity_class(lam, budget=10 ** 5)
    assert lam in cls
    for g in cls:
        assert g.is_comonic() and g.degree <= dim
        assert is_similar(lam, g)


def test_similarity_is_an_equivalence_on_samples():
    a, b, c = P("1 + x1*x2"), P("1 + x2*x1"), P("1 + x1 + x2")
    assert is_similar(a, b) and is_similar(b, a) and is_similar(a, a)
    assert not is_similar(a, c)
    assert not is_similar(P("1 + x1"), P("1 + x2"))
    assert is_similar(P("2 + 2*x1*x2"), a)


def test_similarity_without_constant():
    lam = P("x1*x2*x3 + x1 + x3")
    assert shift(lam, [1, 0, 0]).constant_term == 1
    assert is_similar(lam, P("x3*x2*x1 + x1 + x3"))
    assert not is_similar(P("x1"), P("1 + x1*x2"))


def test_zero_constant_examples():
    z = factor_zero_constant(P("x1"))
    assert z.left_form is None and z.right_form is None
    z = factor_zero_constant(P("x1*(1 + x2)"))
    assert z.right_form == (P("x1"), P("1 + x2"))
    with pytest.raises(ValueError):
        factor_zero_constant(P("1 + x1"))


def test_primary_components():
    assert len(primary_components(P("(1 + x1)*(1 + x2)"))) == 1
    assert len(primary_components(P("1 + x1*x2", F2))) == 1
    assert len(primary_components(P("(1 + x1*x2)^3", F2))) == 1
