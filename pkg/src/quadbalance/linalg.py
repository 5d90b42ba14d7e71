"""Linear forms, products of linear forms, and exact rank computation.

Ranks over the rationals are computed by fraction-free (Bareiss) elimination
on integer rows; rational entries are cleared to integers row by row first,
which does not change the rank.  Ranks over GF(p) use ordinary modular
elimination.  No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InputError
from .fields import QQ, PrimeField


@dataclass(frozen=True)
class LinearForm:
    """A linear form, stored as its coefficient vector over the ambient ring."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def support(self) -> tuple:
        return tuple(j for j, c in enumerate(self.coefficients) if c != 0)

    @staticmethod
    def variable(j: int, n: int) -> "LinearForm":
        return LinearForm(tuple(1 if i == j else 0 for i in range(n)))


@dataclass(frozen=True)
class ProductOfLinearForms:
    """A product of linear forms; each factor must be nonzero."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.is_zero():
                raise InputError("zero linear form used as a factor")
        if len({f.n for f in self.factors}) > 1:
            raise InputError("factors live in different ambient rings")

    @property
    def degree(self) -> int:
        return len(self.factors)


def _integer_rows(rows) -> list:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in rows:
        row = list(row)
        dens = [c.denominator for c in row if isinstance(c, Fraction)]
        if dens:
            m = lcm(*dens)
            row = [int(c * m) if isinstance(c, Fraction) else c * m for c in row]
        out.append([int(c) for c in row])
    return out


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by one-step fraction-free elimination."""
    mat = [list(r) for r in rows]
    m = len(mat)
    if m == 0:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        p = pr[c]
        for i in range(rank + 1, m):
            ri = mat[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                ri[j] = (ri[j] * p - f * pr[j]) // prev
            ri[c] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def modular_rank(rows, p: int) -> int:
    mat = [[int(c) % p for c in r] for r in rows]
    m = len(mat)
    if m == 0:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        inv = pow(pr[c], -1, p)
        for i in range(rank + 1, m):
            ri = mat[i]
            if ri[c]:
                f = ri[c] * inv % p
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * pr[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def rank_of_rows(rows, field=QQ) -> int:
    """Exact rank of a list of coefficient rows over the given field."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    if isinstance(field, PrimeField):
        fr = [[field.reduce(c) for c in r] for r in rows]
        return modular_rank(fr, field.p)
    return bareiss_rank(_integer_rows(rows))


def rank_of_forms(forms, field=QQ) -> int:
    """Rank of the coefficient matrix of a family of linear forms."""
    forms = list(forms)
    if not forms:
        return 0
    if len({f.n for f in forms}) > 1:
        raise InputError("forms live in different ambient rings")
    return rank_of_rows([f.coefficients for f in forms], field)
