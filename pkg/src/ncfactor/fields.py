"""Exact coefficient fields.

Scalars are plain Python values: :class:`fractions.Fraction` over the
rationals and ``int`` in ``range(p)`` over a prime field.  A field object
knows how to coerce, invert, print and enumerate its scalars; arithmetic is
done with the ordinary operators followed by a call to the field, which
reduces the result (``F(a * b - c)``).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import InfeasibleEnumeration


class RationalField:
    characteristic = 0
    order = None
    descriptor = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if type(x) is Fraction:
            return x
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    def inv(self, a) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def random(self, rng, bound: int = 3) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def elements(self):
        raise InfeasibleEnumeration("the rational field cannot be enumerated")

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.descriptor = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def __call__(self, x) -> int:
        if type(x) is int:
            return x % self.p
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng, bound: int = 0) -> int:
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def vectors(self, k: int):
        """All vectors of length ``k`` in lexicographic order."""
        return product(range(self.p), repeat=k)

    def format(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(text: str):
    """Parse ``rational`` / ``QQ`` / ``fp:P`` / ``GF(P)``."""
    t = text.strip()
    if t.lower() in ("rational", "qq", "q"):
        return QQ
    if t.lower().startswith("fp:"):
        return PrimeField(int(t[3:]))
    if t.upper().startswith("GF(") and t.endswith(")"):
        return PrimeField(int(t[3:-1]))
    raise ValueError(f"unknown field descriptor {text!r}")
