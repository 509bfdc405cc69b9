"""The independence complex of a trim lattice (the family of down-label
sets), the canonical join complex/graph of a semidistributive lattice,
flagness, independent-set enumeration, and the complementation between the
independence graph and the Galois graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import NotExtremal, NotSemidistributive, NotTrim, SizeLimitExceeded
from .galois import GaloisGraph, galois_graph, index_irreducibles
from .labelling import (
    down_up_labels,
    left_modular_labelling,
    semidistributive_labelling,
)
from .lattice import Lattice, is_extremal, is_semidistributive, is_trim
from .poset import DEFAULT_MAX_ELEMENTS


@dataclass(frozen=True)
class SimplicialComplex:
    """Explicit face-set complex on integer vertices."""

    vertices: frozenset[int]
    faces: frozenset[frozenset[int]]

    def skeleton_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(tuple(sorted(f)) for f in self.faces if len(f) == 2)


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph on vertices 1..n, edges as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"edge ({a}, {b}) out of range")

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges


def undirected(g: GaloisGraph) -> SimpleGraph:
    """Forget edge directions of a Galois graph."""
    return SimpleGraph(g.n, frozenset((k, i) for i, k in g.edges))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def complement_graph(g: SimpleGraph) -> SimpleGraph:
    return SimpleGraph(
        g.n,
        frozenset(e for e in combinations(range(1, g.n + 1), 2)
                  if e not in g.edges),
    )


def independence_complex(l: Lattice) -> SimplicialComplex:
    """The complex of down-label sets of a trim lattice; checked on the fly
    to equal the family of up-label sets and to be closed under subsets."""
    if not is_trim(l):
        raise NotTrim("the independence complex is defined for trim lattices")
    gamma = left_modular_labelling(l)
    sets = down_up_labels(l, gamma)
    faces = frozenset(sets.down)
    assert faces == frozenset(sets.up), "down/up label families differ"
    for f in faces:
        for v in f:
            assert f - {v} in faces, "label family not closed under subsets"
    n = len(l.join_irr)
    return SimplicialComplex(frozenset(range(1, n + 1)), faces)


def is_flag(c: SimplicialComplex) -> bool:
    """True iff every clique of the 1-skeleton is a face."""
    edges = c.skeleton_edges()
    verts = sorted(c.vertices)

    def adjacent(a, b):
        return (min(a, b), max(a, b)) in edges

    cliques = [[]]
    for k in range(1, len(verts) + 1):
        new = []
        for cl in cliques:
            start = verts.index(cl[-1]) + 1 if cl else 0
            for v in verts[start:]:
                if all(adjacent(u, v) for u in cl):
                    new.append(cl + [v])
        if not new:
            break
        for cl in new:
            if frozenset(cl) not in c.faces:
                return False
        cliques = new
    return frozenset() in c.faces or not c.faces


def independent_sets(g: SimpleGraph,
                     max_count: int = DEFAULT_MAX_ELEMENTS) -> frozenset[frozenset[int]]:
    """All vertex subsets containing no edge, including the empty set."""
    adj = {v: set() for v in range(1, g.n + 1)}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []
    chosen: list[int] = []

    def rec(start: int):
        out.append(frozenset(chosen))
        if len(out) > max_count:
            raise SizeLimitExceeded(len(out), max_count, "independent sets")
        for v in range(start, g.n + 1):
            if not adj[v] & set(chosen):
                chosen.append(v)
                rec(v + 1)
                chosen.pop()

    rec(1)
    return frozenset(out)


def complement_check(l: Lattice) -> bool:
    """Whether the undirected Galois graph and the independence graph of a
    trim lattice partition the edges of the complete graph."""
    if not is_trim(l):
        raise NotTrim("complement check is defined for trim lattices")
    gal = undirected(galois_graph(l))
    indep = independence_complex(l).skeleton_edges()
    if gal.edges & indep:
        return False
    return gal.edges | indep == complete_graph(gal.n).edges


def canonical_join_graph(l: Lattice) -> SimpleGraph:
    """Edges {a, b} of irreducible labels such that {j_a, j_b} is a canonical
    join representation, for an extremal semidistributive lattice."""
    if not is_semidistributive(l):
        raise NotSemidistributive((l.bottom, l.top), "lattice", ())
    if not is_extremal(l):
        raise NotExtremal("canonical join graph here uses the Galois indexing")
    idx = index_irreducibles(l)
    sdl = semidistributive_labelling(l)
    sets = down_up_labels(l, sdl.gamma_j)
    edges = set()
    for d in sets.down:
        labs = sorted(idx.beta_j(j) for j in d)
        for a, b in combinations(labs, 2):
            edges.add((a, b))
    return SimpleGraph(idx.n, frozenset(edges))


def canonical_join_graph_elements(l: Lattice) -> SimpleGraph:
    """Canonical join graph of any semidistributive lattice, with vertices
    1..|J| numbering the join-irreducibles in element order (no Galois
    indexing required)."""
    if not is_semidistributive(l):
        raise NotSemidistributive((l.bottom, l.top), "lattice", ())
    sdl = semidistributive_labelling(l)
    sets = down_up_labels(l, sdl.gamma_j)
    label = {j: i + 1 for i, j in enumerate(l.join_irr)}
    edges = set()
    for d in sets.down:
        labs = sorted(label[j] for j in d)
        for a, b in combinations(labs, 2):
            edges.add((a, b))
    return SimpleGraph(len(l.join_irr), frozenset(edges))


def graph_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """Brute-force undirected graph isomorphism (intended for n <= 12)."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    verts = list(range(1, g1.n + 1))
    target = g2.edges
    for perm in permutations(verts):
        relabel = dict(zip(verts, perm))
        if all((min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) in target
               for a, b in g1.edges):
            return True
    return False
