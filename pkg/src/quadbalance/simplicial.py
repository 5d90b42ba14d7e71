"""Simplicial complexes on an ambient vertex set, and their combinatorics.

A complex is stored by its facets (inclusion-maximal faces) over vertices
0..n-1.  The void complex (no faces at all) and the empty complex {∅} are
distinct: the former has no facets, the latter has the single facet ∅.
Ambient vertices may be absent from every face; such a vertex shows up as a
size-1 minimal non-face.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .covers import _minimal_transversals, minimal_primes
from .errors import InputError
from .monomials import Monomial, MonomialIdeal


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: frozenset = frozenset()

    def __post_init__(self):
        n = self.n_vertices
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        raw = [frozenset(f) for f in self.facets]
        for f in raw:
            for v in f:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} out of range 0..{n - 1}")
        maximal = frozenset(f for f in raw if not any(f < g for g in raw))
        object.__setattr__(self, "facets", maximal)

    @classmethod
    def from_faces(cls, n: int, faces) -> "SimplicialComplex":
        return cls(n, frozenset(frozenset(f) for f in faces))

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset([frozenset(range(n))]))

    @classmethod
    def empty_complex(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset([frozenset()]))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void():
            raise InputError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> set:
        """All faces, including the empty face when the complex is nonvoid."""
        out: set = set()
        for fac in self.facets:
            fs = sorted(fac)
            for k in range(len(fs) + 1):
                out.update(frozenset(c) for c in combinations(fs, k))
        return out

    def faces_by_dim(self) -> dict:
        by: dict = {}
        for f in self.faces():
            by.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
        for k in by:
            by[k].sort()
        return by

    def has_face(self, face) -> bool:
        face = frozenset(face)
        return any(face <= fac for fac in self.facets)

    def link(self, face) -> "SimplicialComplex":
        face = frozenset(face)
        if not self.has_face(face):
            raise InputError("link of a non-face")
        return SimplicialComplex(
            self.n_vertices, frozenset(fac - face for fac in self.facets if face <= fac)
        )

    def restriction(self, vertices) -> "SimplicialComplex":
        sigma = frozenset(vertices)
        return SimplicialComplex(self.n_vertices, frozenset(fac & sigma for fac in self.facets))

    def cone(self) -> "SimplicialComplex":
        """Cone with a fresh apex vertex appended after the ambient ones."""
        if self.is_void():
            raise InputError("cone over the void complex")
        apex = self.n_vertices
        return SimplicialComplex(
            apex + 1, frozenset(fac | {apex} for fac in self.facets)
        )

    def used_vertices(self) -> frozenset:
        out: set = set()
        for f in self.facets:
            out |= f
        return frozenset(out)


def f_vector(cx: SimplicialComplex) -> tuple:
    """(f_-1, f_0, ..., f_dim); f_-1 = 1 counts the empty face."""
    if cx.is_void():
        raise InputError("the void complex has no f-vector")
    counts = [0] * (cx.dim + 2)
    for f in cx.faces():
        counts[len(f)] += 1
    return tuple(counts)


def h_vector(cx: SimplicialComplex) -> tuple:
    """(h_0, ..., h_d) with d = dim + 1, by the binomial transform of f."""
    f = f_vector(cx)
    d = cx.dim + 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def minimal_non_faces(cx: SimplicialComplex) -> tuple:
    """All inclusion-minimal non-faces, sorted; each has size <= dim + 2."""
    if cx.is_void():
        return (frozenset(),)
    faces = cx.faces()
    out = []
    top = cx.dim + 2
    for size in range(1, min(top, cx.n_vertices) + 1):
        for cand in combinations(range(cx.n_vertices), size):
            cs = frozenset(cand)
            if cs in faces:
                continue
            if all(cs - {v} in faces for v in cand):
                out.append(cs)
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


def is_flag(cx: SimplicialComplex) -> bool:
    """True when every minimal non-face is an edge (size exactly 2)."""
    return all(len(m) == 2 for m in minimal_non_faces(cx))


def stanley_reisner(cx: SimplicialComplex) -> MonomialIdeal:
    """The squarefree ideal generated by the minimal non-faces."""
    n = cx.n_vertices
    gens = []
    for nf in minimal_non_faces(cx):
        if not nf:
            # void complex: even the empty set is not a face
            return MonomialIdeal(max(n, 1), (Monomial((0,) * max(n, 1)),))
        gens.append(Monomial(tuple(1 if j in nf else 0 for j in range(n))))
    return MonomialIdeal(n, tuple(gens))


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Inverse correspondence: faces are the squarefree monomials outside I.

    Facets are the complements of the minimal primes.
    """
    if not ideal.is_squarefree():
        raise InputError("the correspondence needs a squarefree ideal")
    n = ideal.n
    if not ideal.is_proper():
        return SimplicialComplex(n, frozenset())
    if ideal.is_zero():
        return SimplicialComplex.full_simplex(n)
    everything = frozenset(range(n))
    return SimplicialComplex(
        n, frozenset(everything - p for p in minimal_primes(ideal))
    )


def independence_complex(n: int, edges) -> SimplicialComplex:
    """Faces are the independent sets of the graph; always a flag complex."""
    clean = []
    for e in edges:
        e = tuple(e)
        if len(e) != 2 or e[0] == e[1]:
            raise InputError(f"bad edge {e}: need two distinct endpoints")
        for v in e:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range 0..{n - 1}")
        clean.append(frozenset(e))
    if not clean:
        return SimplicialComplex.full_simplex(n)
    everything = frozenset(range(n))
    return SimplicialComplex(
        n, frozenset(everything - c for c in _minimal_transversals(clean))
    )


def check_balanced(cx: SimplicialComplex, coloring=None):
    """Verify or find a proper (dim+1)-coloring: no face repeats a color.

    Colors are 1..dim+1, given as a tuple indexed by vertex.  Returns the
    verified coloring, or None when the given one is improper / none exists.
    """
    if cx.is_void():
        raise InputError("the void complex cannot be colored")
    d = cx.dim + 1
    n = cx.n_vertices
    edges = {tuple(sorted(e)) for fac in cx.facets for e in combinations(sorted(fac), 2)}
    if coloring is not None:
        colors = tuple(coloring)
        if len(colors) != n:
            raise InputError("coloring must assign a color to every ambient vertex")
        if any(not 1 <= c <= max(d, 1) for c in colors):
            return None
        for a, b in edges:
            if colors[a] == colors[b]:
                return None
        return colors
    if d == 0:
        return (1,) * n if not cx.used_vertices() else None
    # backtracking proper coloring of the 1-skeleton; faces are cliques in it
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    colors_arr = [0] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in range(1, d + 1):
            if all(colors_arr[u] != c for u in adj[v]):
                colors_arr[v] = c
                if assign(i + 1):
                    return True
                colors_arr[v] = 0
        return False

    return tuple(colors_arr) if assign(0) else None
