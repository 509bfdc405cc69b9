"""Shared test collections and independent brute-force oracles.

The sweep collections are deliberately exhaustive at desk scale: all posets
on <= 5 elements up to relabelling (enumerated as the transitively closed
subsets of the upper-triangular pair set, so every isomorphism class
appears), and all Galois graphs on <= 5 vertices.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from trimlat import (
    GaloisGraph,
    Poset,
    fixture,
    lattice_from_graph,
    order_ideals,
    poset_from_relations,
    tamari,
)
from trimlat.lattice import Lattice, is_trim


def naturally_labeled_posets(n: int) -> list[Poset]:
    """All posets on 0..n-1 whose index order is a linear extension."""
    pairs = list(combinations(range(n), 2))
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if (bits >> i) & 1}
        if all((a, c) in rel
               for a, b in rel for b2, c in rel if b == b2 and a != c):
            out.append(poset_from_relations(n, sorted(rel)))
    return out


def all_galois_graphs(n: int) -> list[GaloisGraph]:
    pairs = [(i, k) for i in range(1, n + 1) for k in range(1, i)]
    out = []
    for bits in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if (bits >> i) & 1)
        out.append(GaloisGraph(n, edges))
    return out


@pytest.fixture(scope="session")
def small_posets() -> list[Poset]:
    out = []
    for n in range(1, 6):
        out.extend(naturally_labeled_posets(n))
    return out


@pytest.fixture(scope="session")
def small_graphs() -> list[GaloisGraph]:
    out = []
    for n in range(0, 6):
        out.extend(all_galois_graphs(n))
    return out


@pytest.fixture(scope="session")
def graph_lattices(small_graphs) -> list[tuple[GaloisGraph, Lattice]]:
    return [(g, lattice_from_graph(g)[0]) for g in small_graphs]


TRIM_FIXTURES = ("fig1", "fig2", "fig3_left", "fig4", "fig8")


@pytest.fixture(scope="session")
def fixture_trim_lattices() -> list[tuple[str, Lattice]]:
    out = [(name, fixture(name)) for name in TRIM_FIXTURES]
    for name in ("fig9_grid_tamari", "fig9_2cambrian"):
        out.append((name, lattice_from_graph(fixture(name))[0]))
    return out


@pytest.fixture(scope="session")
def trim_collection(small_posets, graph_lattices, fixture_trim_lattices):
    """Every trim test lattice: figure fixtures, J(Q) for all small posets,
    tamari(n <= 5), and the trim lattices of all small Galois graphs."""
    out = list(fixture_trim_lattices)
    out.extend((f"J(poset{i})", order_ideals(q))
               for i, q in enumerate(small_posets))
    out.extend((f"tamari({n})", tamari(n)) for n in range(1, 6))
    out.extend((f"L({sorted(g.edges)} on {g.n})", lat)
               for g, lat in graph_lattices if is_trim(lat))
    return out


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def brute_distributive(l: Lattice) -> bool:
    n = l.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if l.meet_of(x, l.join_of(y, z)) != \
                        l.join_of(l.meet_of(x, y), l.meet_of(x, z)):
                    return False
    return True


def brute_left_modular(l: Lattice, x: int) -> bool:
    """Left modularity straight from the definition, over all pairs y <= z
    (not just covers)."""
    for y in range(l.n):
        for z in range(l.n):
            if l.leq(y, z):
                if l.meet_of(l.join_of(y, x), z) != l.join_of(y, l.meet_of(x, z)):
                    return False
    return True


def brute_canonical_join_rep(l: Lattice, x: int):
    """Canonical join representation straight from the definition: the
    irredundant set of join-irreducibles joining to x that refines every
    other join-irreducible representation of x.  None if there is none;
    asserts uniqueness when one exists."""
    irr = l.join_irr
    representations = []
    irredundant = []
    for r in range(len(irr) + 1):
        for combo in combinations(irr, r):
            if l.join_all(combo) != x:
                continue
            representations.append(combo)
            if not any(l.join_all(c for c in combo if c != skip) == x
                       for skip in combo):
                irredundant.append(frozenset(combo))
    # refinement-least: every member of the representation lies below some
    # member of any competing representation
    winners = [
        a for a in irredundant
        if all(any(l.leq(e, b) for b in bset) for bset in representations
               for e in a)
    ]
    assert len(winners) <= 1
    return winners[0] if winners else None


def irreducible_pair_oracle(l: Lattice):
    """All pairs (X, Y) with Y the meet-irreducibles above everything in X
    and X the join-irreducibles below everything in Y (brute force over
    subsets of the join-irreducibles)."""
    out = []
    for r in range(len(l.join_irr) + 1):
        for xs in combinations(l.join_irr, r):
            y = frozenset(m for m in l.meet_irr
                          if all(l.leq(j, m) for j in xs))
            x = frozenset(j for j in l.join_irr
                          if all(l.leq(j, m) for m in y))
            if x == frozenset(xs):
                out.append((x, y))
    return out


def brute_independent_sets(n: int, undirected_edges) -> set[frozenset[int]]:
    out = set()
    verts = range(1, n + 1)
    for r in range(n + 1):
        for combo in combinations(verts, r):
            if not any((min(a, b), max(a, b)) in undirected_edges
                       for a, b in combinations(combo, 2)):
                out.add(frozenset(combo))
    return out
