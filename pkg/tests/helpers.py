"""Hypothesis strategies and brute-force oracles shared by the tests."""

import itertools

from hypothesis import strategies as st

from ncfactor import GF, QQ, Poly

FIELDS = [QQ, GF(2), GF(3), GF(5)]
SMALL_FIELDS = [GF(2), GF(3)]


def scalars(F, nonzero=False):
    if F.order is None:
        s = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    else:
        s = st.integers(0, F.order - 1).map(F)
    return s.filter(lambda c: c != 0) if nonzero else s


def words(nvars=3, max_len=3, min_len=0):
    return st.lists(st.integers(1, nvars), min_size=min_len, max_size=max_len).map(tuple)


@st.composite
def polys(draw, F, nvars=3, max_deg=3, max_terms=5, comonic=False, constant=None):
    terms = draw(st.dictionaries(words(nvars, max_deg), scalars(F), max_size=max_terms))
    if comonic:
        terms[()] = F.one
    elif constant is not None:
        terms[()] = constant
    return Poly(F, terms)


def comonic(F, nvars=2, max_deg=3, max_terms=5, min_deg=1):
    return polys(F, nvars, max_deg, max_terms, comonic=True).filter(
        lambda p: p.degree >= min_deg)


def naive_mul(p, q):
    """Schoolbook product straight from the definition."""
    out = {}
    for (u, a), (v, b) in itertools.product(p.terms(), q.terms()):
        out[u + v] = out.get(u + v, 0) + a * b
    return Poly(p.field, out)


def all_comonic(F, letters, max_deg):
    """Every comonic polynomial of degree between 1 and ``max_deg``."""
    from ncfactor.freealg import words_of_length
    ws = [w for d in range(1, max_deg + 1) for w in words_of_length(letters, d)]
    for coeffs in itertools.product(list(F.elements()), repeat=len(ws)):
        if any(coeffs):
            terms = {(): F.one}
            terms.update(zip(ws, coeffs))
            yield Poly(F, terms)


def span_contains(F, basis, p):
    from ncfactor.linalg import Echelon
    ws = sorted({w for q in list(basis) + [p] for w in q.words()})
    e = Echelon(F, len(ws))
    for q in basis:
        e.add([q.coeff(w) for w in ws])
    return e.contains([p.coeff(w) for w in ws])
