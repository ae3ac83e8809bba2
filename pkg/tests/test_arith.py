import itertools
import random

import pytest
from hypothesis import given, strategies as st

from helpers import FIELDS, SMALL_FIELDS, comonic, polys, scalars
from ncfactor import (GF, QQ, Poly, divmod, gcd, left_divides, left_quotient, parse_poly,
                      reduce_zero_constant, right_divides, right_quotient)
from ncfactor.arith import divisibility_witness
from ncfactor.errors import NotDivisible, ZeroConstantTerm, ZeroPolynomial
from ncfactor.leavitt import verify_certificate

field = st.sampled_from(FIELDS)


def P(t, F=QQ):
    return parse_poly(t, F)


def brute_right_divides(F, gamma, lam, letters):
    """Search every quotient of the right degree over a small field."""
    from ncfactor.freealg import words_of_length
    d = lam.degree - gamma.degree
    if d < 0:
        return False
    ws = [w for l in range(d + 1) for w in words_of_length(letters, l)]
    for coeffs in itertools.product(list(F.elements()), repeat=len(ws)):
        if Poly(F, dict(zip(ws, coeffs))) * gamma == lam:
            return True
    return False


@given(st.data())
def test_product_is_divisible(data):
    F = data.draw(field)
    gamma = data.draw(polys(F, constant=data.draw(scalars(F, nonzero=True))))
    delta = data.draw(polys(F).filter(lambda p: not p.is_zero()))
    lam = delta * gamma
    assert right_divides(gamma, lam)
    assert left_quotient(lam, gamma) == delta
    assert left_divides(gamma, gamma * delta)
    assert right_quotient(gamma * delta, gamma) == delta


@given(st.data())
def test_divides_matches_brute_force(data):
    F = GF(2)
    gamma = data.draw(comonic(F, nvars=2, max_deg=2, max_terms=3))
    lam = data.draw(comonic(F, nvars=2, max_deg=3, max_terms=4))
    assert right_divides(gamma, lam) == brute_right_divides(F, gamma, lam, [1, 2])


@given(st.data())
def test_division_identity(data):
    F = data.draw(field)
    gamma = data.draw(comonic(F, nvars=3, max_deg=2, min_deg=0))
    lam = data.draw(polys(F, nvars=3, max_deg=4, max_terms=6))
    r = divmod(lam, gamma)
    assert r.quotient * gamma + r.assembled_remainder == lam
    assert r.exact == right_divides(gamma, lam)
    assert all(len(b) == lam.degree for b in r.remainder_terms)
    assert all(v.degree < gamma.degree for v in r.remainder_terms.values())


def test_divmod_example():
    r = divmod(P("1 + x1*x2 + x2*x1"), P("1 + x1*x2"))
    assert r.quotient == P("1")
    assert r.remainder_terms == {(2, 1): P("1")}
    assert not r.exact


def test_non_divisible():
    with pytest.raises(NotDivisible):
        left_quotient(P("1 + x2"), P("1 + x1"))
    with pytest.raises(ZeroConstantTerm):
        right_divides(P("x1"), P("x1^2"))
    assert not right_divides(P("1 + x1"), P("1 + x2 + x1*x2"))


def test_witness():
    assert divisibility_witness(P("1 + x1^2 + x2^2"), P("1 + x1 + x1^2")) == ((1, 1), P("-x1"))
    assert divisibility_witness(P("1 + x1"), P("(1 + x2)*(1 + x1)")) is None


@given(st.data())
def test_gcd_divides_inputs(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS + [QQ]))
    common = data.draw(comonic(F, nvars=2, max_deg=2, min_deg=0))
    a = data.draw(comonic(F, nvars=2, max_deg=2, min_deg=0)) * common
    b = data.draw(comonic(F, nvars=2, max_deg=2, min_deg=0)) * common
    r = gcd([a, b], want_certificate=True)
    assert r.gcd.is_comonic()
    assert right_divides(r.gcd, a) and right_divides(r.gcd, b)
    assert right_divides(common, r.gcd)
    assert verify_certificate([a, b], r.certificate, r.gcd)
    assert gcd([b, a]).gcd == r.gcd
    k = data.draw(scalars(F, nonzero=True))
    assert gcd([a.scale(k), b]).gcd == r.gcd


@given(st.data())
def test_gcd_of_single_comonic(data):
    F = data.draw(field)
    lam = data.draw(comonic(F, nvars=2))
    assert gcd([lam, lam]).gcd == lam


@given(st.data())
def test_zero_constant_certificates(data):
    F = data.draw(st.sampled_from(SMALL_FIELDS))
    lam = data.draw(polys(F, nvars=2, max_deg=3, constant=F.zero).filter(lambda p: not p.is_zero()))
    mu = data.draw(comonic(F, nvars=2, max_deg=2))
    r = gcd([lam, mu], want_certificate=True)
    assert verify_certificate([lam, mu], r.certificate, r.gcd)
    assert right_divides(r.gcd, mu)


def test_gcd_examples():
    a = P("1 + x1^2 + x2^2")
    assert gcd([a, P("1 + x1 + x1^2")]).gcd == P("1")
    assert gcd([a, P("(1 + x2)*(1 + x1^2 + x2^2)")]).gcd == a
    assert gcd([P("x1 + x1^3 + x1*x2^2 + x2 + x2*x1^2 + x2^3")]).gcd == a
    assert gcd([P("x1")]).gcd == P("1")
    with pytest.raises(ZeroPolynomial):
        gcd([P("0"), a])
    with pytest.raises(ValueError):
        gcd([])


def test_gcd_three_inputs():
    g = P("1 + x1*x2")
    r = gcd([P("(1 + x1)") * g, P("(1 + x2)") * g, P("(1 - x1*x1)") * g], want_certificate=True)
    assert r.gcd == g


def test_reduce_zero_constant():
    out = reduce_zero_constant(P("x1 + x1^3 + x1*x2^2 + x2 + x2*x1^2 + x2^3"))
    assert out == [P("1 + x1^2 + x2^2")]
    assert reduce_zero_constant(P("x1*x2 + x2")) == [P("1")]
    with pytest.raises(ZeroPolynomial):
        reduce_zero_constant(P("0"))


def test_divmod_linear_example():
    r = divmod(P("1 - x2"), P("1 - x1"))
    assert r.remainder_terms == {(1,): P("1"), (2,): P("-1")}
    assert r.quotient == P("1")


def test_divmod_remainder_contains_witness():
    r = divmod(P("1 + x1 + x1^2"), P("1 + x1^2 + x2^2"))
    assert not r.exact
    assert P("-x1") in r.remainder_terms.values()
