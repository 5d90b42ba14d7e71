"""Minimal primes of a monomial ideal via minimal vertex covers.

A prime monomial ideal is generated by variables, and the minimal primes of
a monomial ideal are exactly the minimal transversals of the hypergraph of
generator supports.  The enumeration is a branch and bound over an uncovered
support, followed by an antichain filter; every minimal transversal appears
in the branch tree, so the filter leaves exactly the minimal ones.
"""

from __future__ import annotations

from .errors import InputError
from .monomials import MonomialIdeal


def _minimal_transversals(supports) -> list:
    supports = [frozenset(s) for s in supports]
    results: set = set()
    seen: set = set()

    def branch(chosen: frozenset):
        if chosen in seen:
            return
        seen.add(chosen)
        for s in supports:
            if not (s & chosen):
                for v in sorted(s):
                    branch(chosen | {v})
                return
        results.add(chosen)

    branch(frozenset())
    minimal = [c for c in results if not any(o < c for o in results)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def minimal_primes(ideal: MonomialIdeal) -> tuple:
    """All minimal primes, each as a frozenset of variable indices.

    Sorted by cardinality then lexicographically, so the first entry is the
    canonical choice of a smallest minimal prime.
    """
    if ideal.is_zero():
        raise InputError("the zero ideal has no associated support hypergraph")
    if not ideal.is_proper():
        raise InputError("the unit ideal has no minimal primes")
    return tuple(_minimal_transversals(g.support() for g in ideal.generators))


def height(ideal: MonomialIdeal) -> int:
    """Height = size of a smallest minimal prime; the zero ideal has height 0."""
    if ideal.is_zero():
        return 0
    return len(minimal_primes(ideal)[0])
