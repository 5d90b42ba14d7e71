"""Coefficient fields for exact computation: the rationals and prime fields.

Every rank and homology computation in this package is parameterized by one
of these field objects.  Elements are ordinary Python numbers (int/Fraction
for the rationals, canonical residues for GF(p)); the field object only
carries the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

DEFAULT_PRIME = 32003


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin; the base set is exact for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers."""

    name = "Q"

    def reduce(self, x):
        return x if isinstance(x, (int, Fraction)) else Fraction(x)

    def is_zero(self, x) -> bool:
        return self.reduce(x) == 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class PrimeField:
    """The finite field with p elements, p prime."""

    def __init__(self, p: int):
        if not _is_probable_prime(p):
            raise InputError(f"field characteristic must be prime, got {p}")
        self.p = p
        self.name = f"GF({p})"

    def reduce(self, x):
        if isinstance(x, Fraction):
            den = pow(x.denominator % self.p, -1, self.p)
            return x.numerator % self.p * den % self.p
        return x % self.p

    def is_zero(self, x) -> bool:
        return self.reduce(x) == 0

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field_spec(spec: str):
    """Parse a ``--field`` value: ``q`` for the rationals, ``p:NNN`` for GF(NNN)."""
    s = spec.strip().lower()
    if s == "q":
        return QQ
    if s.startswith("p:"):
        body = s[2:]
        if not body.isdigit():
            raise InputError(f"bad field spec {spec!r}: expected q or p:<prime>")
        return PrimeField(int(body))
    if s == "p":
        return PrimeField(DEFAULT_PRIME)
    raise InputError(f"bad field spec {spec!r}: expected q or p:<prime>")
