"""The representation theory of extremal lattices: indexing irreducibles
along a maximal-length chain, the Galois graph, maximal orthogonal pairs,
reconstruction, overlapping covers, and the two-interval decomposition of a
trim lattice.

Labels are 1..n throughout (n = lattice length); label sets are manipulated
as bitmasks with bit i-1 standing for label i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotACover,
    NotExtremal,
    NotTrim,
    SizeLimitExceeded,
)
from .lattice import Chain, Lattice, interval, is_extremal, is_trim, maximal_length_chain
from .poset import DEFAULT_MAX_ELEMENTS, Poset, _bits, poset_from_relations


@dataclass(frozen=True)
class IrreducibleIndexing:
    """Join- and meet-irreducibles indexed along a maximal-length chain:
    chain[i] = j[0] v ... v j[i-1] = m[i] ^ ... ^ m[n-1] (labels are
    1-based, so j[i-1] is the irreducible with label i)."""

    chain: Chain
    j: tuple[int, ...]
    m: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.j)

    def beta_j(self, element: int) -> int:
        """Label of a join-irreducible element."""
        return self.j.index(element) + 1

    def beta_m(self, element: int) -> int:
        return self.m.index(element) + 1


@dataclass(frozen=True)
class GaloisGraph:
    """Loop-free digraph on labels 1..n with every edge i -> k having
    i > k."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, k in self.edges:
            if not (1 <= k < i <= self.n):
                raise ValueError(f"edge {i}->{k} violates i > k >= 1")

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def delete_vertices(self, gone) -> "GaloisGraph":
        """Induced subgraph with surviving labels compressed to 1..m,
        preserving relative order."""
        keep = [v for v in range(1, self.n + 1) if v not in set(gone)]
        relabel = {v: i + 1 for i, v in enumerate(keep)}
        edges = frozenset(
            (relabel[i], relabel[k]) for i, k in self.edges
            if i in relabel and k in relabel
        )
        return GaloisGraph(len(keep), edges)


@dataclass(frozen=True)
class MaxOrthPair:
    """Disjoint label sets (X, Y) with no X -> Y arrow, each maximal given
    the other.  One lattice element."""

    X: frozenset[int]
    Y: frozenset[int]


def index_irreducibles(l: Lattice, chain: Chain | None = None) -> IrreducibleIndexing:
    """Index the irreducibles of an extremal lattice along a maximal-length
    chain (default: the deterministic one).  Each chain step introduces
    exactly one new join-irreducible from below and retires exactly one
    meet-irreducible from above."""
    if not is_extremal(l):
        raise NotExtremal("irreducible indexing requires an extremal lattice")
    if chain is None:
        chain = maximal_length_chain(l)
    xs = chain.elements
    if xs[0] != l.bottom or xs[-1] != l.top or any(
            xs[i + 1] not in l.upper_covers(xs[i]) for i in range(len(xs) - 1)):
        raise ValueError("chain must be saturated from bottom to top")
    n = len(xs) - 1
    j: list[int] = []
    m: list[int] = []
    for i in range(1, n + 1):
        new_j = [t for t in l.join_irr
                 if l.leq(t, xs[i]) and not l.leq(t, xs[i - 1])]
        if len(new_j) != 1:
            raise NotExtremal(
                f"chain step {i} introduces {len(new_j)} join-irreducibles")
        j.append(new_j[0])
        new_m = [t for t in l.meet_irr
                 if l.leq(xs[i - 1], t) and not l.leq(xs[i], t)]
        if len(new_m) != 1:
            raise NotExtremal(
                f"chain step {i} retires {len(new_m)} meet-irreducibles")
        m.append(new_m[0])
    acc = l.bottom
    for i in range(n):
        acc = l.join_of(acc, j[i])
        assert acc == xs[i + 1], "join-prefix identity failed"
    acc = l.top
    for i in range(n - 1, -1, -1):
        assert acc == xs[i + 1], "meet-suffix identity failed"
        acc = l.meet_of(acc, m[i])
    assert acc == xs[0]
    return IrreducibleIndexing(chain, tuple(j), tuple(m))


def pair_masks(l: Lattice, idx: IrreducibleIndexing) -> tuple[list[int], list[int]]:
    """Per element x: bitmask of {i : j_i <= x} and of {k : m_k >= x}
    (bit i-1 is label i)."""
    n = idx.n
    xj = [0] * l.n
    ym = [0] * l.n
    for x in range(l.n):
        a = b = 0
        for i in range(n):
            if l.leq(idx.j[i], x):
                a |= 1 << i
            if l.leq(x, idx.m[i]):
                b |= 1 << i
        xj[x] = a
        ym[x] = b
    return xj, ym


def element_pair(l: Lattice, x: int,
                 idx: IrreducibleIndexing | None = None) -> MaxOrthPair:
    """The maximal orthogonal pair representing element x."""
    if idx is None:
        idx = index_irreducibles(l)
    X = frozenset(i + 1 for i in range(idx.n) if l.leq(idx.j[i], x))
    Y = frozenset(k + 1 for k in range(idx.n) if l.leq(x, idx.m[k]))
    return MaxOrthPair(X, Y)


def galois_graph(l: Lattice, idx: IrreducibleIndexing | None = None) -> GaloisGraph:
    """Digraph on 1..n with an edge i -> k when j_i is not below m_k."""
    if idx is None:
        idx = index_irreducibles(l)
    n = idx.n
    edges = set()
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if i != k and not l.leq(idx.j[i - 1], idx.m[k - 1]):
                if i < k:
                    raise NotExtremal(
                        f"indexing inconsistent: edge {i}->{k} with i < k")
                edges.add((i, k))
    return GaloisGraph(n, frozenset(edges))


def galois_poset(g: GaloisGraph) -> Poset:
    """The transitive closure of the Galois graph as a poset on 0..n-1
    (label i is element i-1; an edge i -> k puts k below i)."""
    return poset_from_relations(
        g.n, [(k - 1, i - 1) for i, k in g.edges])


def _closure_tables(g: GaloisGraph) -> tuple[list[int], list[int]]:
    """out[v] = mask of targets of v's out-edges; inn[v] dually (bit k-1
    for label k)."""
    out = [0] * (g.n + 1)
    inn = [0] * (g.n + 1)
    for i, k in g.edges:
        out[i] |= 1 << (k - 1)
        inn[k] |= 1 << (i - 1)
    return out, inn


def orth_complete_y(g: GaloisGraph, x_mask: int, out) -> int:
    """Largest Y disjoint from X with no X -> Y arrow."""
    forbidden = x_mask
    for i in _bits(x_mask):
        forbidden |= out[i + 1]
    return ~forbidden & ((1 << g.n) - 1)


def orth_complete_x(g: GaloisGraph, y_mask: int, inn) -> int:
    """Largest X disjoint from Y with no X -> Y arrow."""
    forbidden = y_mask
    for k in _bits(y_mask):
        forbidden |= inn[k + 1]
    return ~forbidden & ((1 << g.n) - 1)


def _closed_x_masks(g: GaloisGraph, max_elements: int) -> list[int]:
    """All X-components of maximal orthogonal pairs, via NextClosure on the
    closure X |-> completion(completion(X))."""
    out, inn = _closure_tables(g)
    full = (1 << g.n) - 1

    def close(x: int) -> int:
        return orth_complete_x(g, orth_complete_y(g, x, out), inn)

    masks = []
    a = close(0)
    masks.append(a)
    while a != full:
        for i in range(g.n - 1, -1, -1):
            if not (a >> i) & 1:
                b = close((a & ((1 << i) - 1)) | (1 << i))
                if b & ((1 << i) - 1) & ~a == 0:
                    a = b
                    break
        else:
            break
        masks.append(a)
        if len(masks) > max_elements:
            raise SizeLimitExceeded(len(masks), max_elements,
                                    "maximal orthogonal pairs")
    return sorted(masks, key=lambda m: (m.bit_count(), m))


def max_orth_pairs(g: GaloisGraph,
                   max_elements: int = DEFAULT_MAX_ELEMENTS) -> tuple[MaxOrthPair, ...]:
    """All maximal orthogonal pairs of g, sorted by (|X|, X)."""
    out, _ = _closure_tables(g)
    pairs = []
    for xm in _closed_x_masks(g, max_elements):
        ym = orth_complete_y(g, xm, out)
        pairs.append(MaxOrthPair(
            frozenset(i + 1 for i in _bits(xm)),
            frozenset(k + 1 for k in _bits(ym)),
        ))
    return tuple(pairs)


def lattice_from_graph(g: GaloisGraph,
                       max_elements: int = DEFAULT_MAX_ELEMENTS
                       ) -> tuple[Lattice, tuple[MaxOrthPair, ...]]:
    """The extremal lattice of maximal orthogonal pairs of g, ordered by
    containment of the X components.  Element i of the lattice is pairs[i];
    meets intersect the first components, joins intersect the second."""
    out, inn = _closure_tables(g)
    x_masks = _closed_x_masks(g, max_elements)
    y_masks = [orth_complete_y(g, xm, out) for xm in x_masks]
    index = {xm: i for i, xm in enumerate(x_masks)}
    n = len(x_masks)

    up = [0] * n
    down = [0] * n
    for a in range(n):
        for b in range(n):
            if x_masks[a] & ~x_masks[b] == 0:
                up[a] |= 1 << b
                down[b] |= 1 << a
    covers = []
    for a in range(n):
        strict = up[a] ^ (1 << a)
        for b in _bits(strict):
            if strict & down[b] & ~(1 << b) == 0:
                covers.append((a, b))
    poset = Poset(n, covers, up, down)

    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    y_index = {ym: i for i, ym in enumerate(y_masks)}
    for a in range(n):
        for b in range(a, n):
            m = index[x_masks[a] & x_masks[b]]
            j = y_index[y_masks[a] & y_masks[b]]
            meet[a, b] = meet[b, a] = m
            join[a, b] = join[b, a] = j
    pairs = tuple(MaxOrthPair(
        frozenset(i + 1 for i in _bits(xm)),
        frozenset(k + 1 for k in _bits(ym)),
    ) for xm, ym in zip(x_masks, y_masks))
    names = tuple(
        "({" + ",".join(map(str, sorted(p.X))) + "},{"
        + ",".join(map(str, sorted(p.Y))) + "})" for p in pairs)
    # the closure of the empty set is contained in every closed set, and the
    # full label set is closed, so after sorting they sit at the two ends
    lat = Lattice(poset, meet, join, 0, n - 1, names=names)
    assert lat.poset.minimal_elements() == (0,)
    assert lat.poset.maximal_elements() == (n - 1,)
    return lat, pairs


def is_overlapping(l: Lattice, y: int, z: int,
                   idx: IrreducibleIndexing | None = None) -> bool:
    """Whether the cover y covered-by z has y_M meeting z_J."""
    if z not in l.upper_covers(y):
        raise NotACover(y, z)
    if idx is None:
        idx = index_irreducibles(l)
    xj, ym = pair_masks(l, idx)
    return ym[y] & xj[z] != 0


def overlap_label(l: Lattice, y: int, z: int,
                  idx: IrreducibleIndexing | None = None) -> int:
    """The unique label in y_M intersect z_J (trim lattices only)."""
    if z not in l.upper_covers(y):
        raise NotACover(y, z)
    if idx is None:
        idx = index_irreducibles(l)
    xj, ym = pair_masks(l, idx)
    inter = ym[y] & xj[z]
    if inter == 0:
        raise NotTrim(f"cover ({y}, {z}) is non-overlapping")
    if inter & (inter - 1):
        raise NotTrim(f"cover ({y}, {z}) overlaps in more than one label")
    return inter.bit_length()


def decompose(l: Lattice) -> tuple[tuple[Lattice, tuple[int, ...]],
                                   tuple[Lattice, tuple[int, ...]]]:
    """Split a trim lattice into the disjoint intervals [bottom, m_1] and
    [j_1, top].  Returns ((L1, map1), (L_up, map_up)) where the maps carry
    sublattice indices back to l."""
    if not is_trim(l):
        raise NotTrim("decomposition requires a trim lattice")
    idx = index_irreducibles(l)
    lower = interval(l, l.bottom, idx.m[0])
    upper = interval(l, idx.j[0], l.top)
    members = set(lower[1]) | set(upper[1])
    assert len(lower[1]) + len(upper[1]) == l.n and len(members) == l.n
    return lower, upper
