"""Validated finite lattices: meet/join tables, irreducibles, chains, and the
structural predicates (distributive, extremal, left modular, semidistributive,
trim), plus congruence validation and quotients.

Meet and join tables are dense n-by-n numpy arrays computed once at
construction; all predicates are exact table scans, no sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    NotACongruence,
    NotALattice,
    NotComparable,
    NotExtremal,
)
from .poset import Poset, _bits, canonical_extension, poset_from_relations


@dataclass(frozen=True)
class Chain:
    """A strictly increasing sequence of lattice elements."""

    elements: tuple[int, ...]
    saturated: bool

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def length(self) -> int:
        """Number of steps (one less than the number of elements)."""
        return len(self.elements) - 1


class Lattice:
    """Immutable finite lattice with precomputed meet/join tables.

    Attributes:
        poset: the underlying order.
        meet, join: read-only n-by-n int32 tables.
        bottom, top: indices of the least and greatest elements.
        join_irr: elements (other than bottom) covering exactly one element.
        meet_irr: elements (other than top) covered by exactly one element.
        names: optional per-element display strings.
    """

    __slots__ = ("poset", "meet", "join", "bottom", "top",
                 "join_irr", "meet_irr", "names")

    def __init__(self, poset: Poset, meet, join, bottom: int, top: int,
                 names=None):
        self.poset = poset
        meet = np.asarray(meet, dtype=np.int32)
        join = np.asarray(join, dtype=np.int32)
        meet.setflags(write=False)
        join.setflags(write=False)
        self.meet = meet
        self.join = join
        self.bottom = bottom
        self.top = top
        self.join_irr = tuple(
            x for x in range(poset.n)
            if x != bottom and len(poset.lower_covers(x)) == 1
        )
        self.meet_irr = tuple(
            x for x in range(poset.n)
            if x != top and len(poset.upper_covers(x)) == 1
        )
        self.names = tuple(names) if names is not None else None

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def lt(self, a: int, b: int) -> bool:
        return self.poset.lt(a, b)

    def upper_covers(self, x: int) -> tuple[int, ...]:
        return self.poset.upper_covers(x)

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self.poset.lower_covers(x)

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.poset.covers

    def meet_of(self, a: int, b: int) -> int:
        return int(self.meet[a, b])

    def join_of(self, a: int, b: int) -> int:
        return int(self.join[a, b])

    def join_all(self, elements) -> int:
        out = self.bottom
        for x in elements:
            out = int(self.join[out, x])
        return out

    def meet_all(self, elements) -> int:
        out = self.top
        for x in elements:
            out = int(self.meet[out, x])
        return out

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, length={length(self)})"


def lattice_from_poset(p: Poset, names=None) -> Lattice:
    """Compute meet/join tables for p; raises NotALattice(x, y) naming a
    pair with no unique meet or join."""
    n = p.n
    if n == 0:
        raise NotALattice(0, 0, "bottom")
    mins = p.minimal_elements()
    maxs = p.maximal_elements()
    if len(mins) > 1:
        raise NotALattice(mins[0], mins[1], "meet")
    if len(maxs) > 1:
        raise NotALattice(maxs[0], maxs[1], "join")
    bottom, top = mins[0], maxs[0]

    # Work in a topologically sorted label space so the least element of any
    # candidate mask is its lowest set bit.
    order = canonical_extension(p)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    def to_topo(mask: int) -> int:
        out = 0
        for v in _bits(mask):
            out |= 1 << pos[v]
        return out

    up_t = [0] * n
    down_t = [0] * n
    for v in range(n):
        up_t[v] = to_topo(p.up_mask(v))
        down_t[v] = to_topo(p.down_mask(v))

    join = np.zeros((n, n), dtype=np.int32)
    meet = np.zeros((n, n), dtype=np.int32)
    for x in range(n):
        for y in range(x, n):
            if p.leq(x, y):
                j, m = y, x
            elif p.leq(y, x):
                j, m = x, y
            else:
                common_up = up_t[x] & up_t[y]
                if common_up == 0:
                    raise NotALattice(x, y, "join")
                low = common_up & -common_up
                j = order[low.bit_length() - 1]
                if common_up & ~up_t[j]:
                    raise NotALattice(x, y, "join")
                common_down = down_t[x] & down_t[y]
                if common_down == 0:
                    raise NotALattice(x, y, "meet")
                m = order[common_down.bit_length() - 1]
                if common_down & ~down_t[m]:
                    raise NotALattice(x, y, "meet")
            join[x, y] = join[y, x] = j
            meet[x, y] = meet[y, x] = m
    return Lattice(p, meet, join, bottom, top, names=names)


def lattice_from_ideal_masks(q: Poset, masks: tuple[int, ...]) -> Lattice:
    """Distributive lattice on the given ideal bitmasks of q (meet/join are
    intersection/union; masks must be closed under both)."""
    index = {m: i for i, m in enumerate(masks)}
    n = len(masks)
    covers = []
    strict_down = [q.down_mask(x) ^ (1 << x) for x in range(q.n)]
    for i, ideal in enumerate(masks):
        free = ~ideal & ((1 << q.n) - 1)
        for x in _bits(free):
            if strict_down[x] & ~ideal == 0:
                covers.append((i, index[ideal | (1 << x)]))
    up = [0] * n
    down = [0] * n
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if a & ~b == 0:
                up[i] |= 1 << j
                down[j] |= 1 << i
    poset = Poset(n, covers, up, down)
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(masks):
        for j in range(i, n):
            b = masks[j]
            mi = index[a & b]
            jo = index[a | b]
            meet[i, j] = meet[j, i] = mi
            join[i, j] = join[j, i] = jo
    names = tuple("{" + ",".join(map(str, _bits(m))) + "}" for m in masks)
    return Lattice(poset, meet, join, 0, n - 1, names=names)


def _heights(l: Lattice) -> list[int]:
    """Longest-path distance from bottom, per element."""
    h = [0] * l.n
    for v in canonical_extension(l.poset):
        for w in l.upper_covers(v):
            h[w] = max(h[w], h[v] + 1)
    return h


def _coheights(l: Lattice) -> list[int]:
    co = [0] * l.n
    for v in reversed(canonical_extension(l.poset)):
        for w in l.lower_covers(v):
            co[w] = max(co[w], co[v] + 1)
    return co


def length(l: Lattice) -> int:
    """The maximum length of a chain in l."""
    return _heights(l)[l.top]


def maximal_length_chain(l: Lattice) -> Chain:
    """The deterministic maximal-length chain: follow covers that stay on a
    longest bottom-to-top path, tie-breaking on smallest element index."""
    co = _coheights(l)
    chain = [l.bottom]
    cur = l.bottom
    while cur != l.top:
        cur = min(w for w in l.upper_covers(cur) if co[w] == co[cur] - 1)
        chain.append(cur)
    return Chain(tuple(chain), saturated=True)


def is_graded(l: Lattice) -> bool:
    """True iff all maximal chains share the same length."""
    h = _heights(l)
    return all(h[z] == h[y] + 1 for y, z in l.covers)


def is_distributive(l: Lattice, witness: bool = False):
    """Exact check of x ^ (y v z) == (x ^ y) v (x ^ z) over all triples."""
    M, J = l.meet, l.join
    for x in range(l.n):
        lhs = M[x][J]
        rhs = J[M[x][:, None], M[x][None, :]]
        if not np.array_equal(lhs, rhs):
            if witness:
                ys, zs = np.nonzero(lhs != rhs)
                return False, (x, int(ys[0]), int(zs[0]))
            return False
    return (True, None) if witness else True


def is_extremal(l: Lattice) -> bool:
    n = length(l)
    return len(l.join_irr) == n and len(l.meet_irr) == n


def is_left_modular_element(l: Lattice, x: int) -> bool:
    """True iff (y v x) ^ z == y v (x ^ z) for every cover y covered-by z
    (which suffices for all y <= z)."""
    M, J = l.meet, l.join
    for y, z in l.covers:
        if M[J[y, x], z] != J[y, M[x, z]]:
            return False
    return True


def left_modular_elements(l: Lattice) -> tuple[int, ...]:
    return tuple(x for x in range(l.n) if is_left_modular_element(l, x))


def is_left_modular_lattice(l: Lattice) -> Chain | None:
    """A saturated bottom-to-top chain of left-modular elements if one
    exists, else None.  The search walks covers inside the set of
    left-modular elements, smallest index first."""
    lm = set(left_modular_elements(l))
    if l.bottom not in lm or l.top not in lm:
        return None
    # DFS over covers restricted to left-modular elements
    stack = [(l.bottom, (l.bottom,))]
    seen = set()
    while stack:
        cur, path = stack.pop()
        if cur == l.top:
            return Chain(path, saturated=True)
        for w in sorted(l.upper_covers(cur), reverse=True):
            if w in lm and (w, len(path)) not in seen:
                seen.add((w, len(path)))
                stack.append((w, path + (w,)))
    return None


def is_trim(l: Lattice) -> bool:
    """Fast trimness test: extremal with every cover overlapping in the
    maximal-orthogonal-pair representation.

    The definitional route (extremal and some maximal chain is left modular)
    is available as :func:`is_trim_definitional`; the two must agree.
    """
    from .galois import index_irreducibles, pair_masks

    if not is_extremal(l):
        return False
    idx = index_irreducibles(l)
    xj, ym = pair_masks(l, idx)
    return all(ym[y] & xj[z] for y, z in l.covers)


def is_trim_definitional(l: Lattice) -> bool:
    return is_extremal(l) and is_left_modular_lattice(l) is not None


def is_semidistributive(l: Lattice, witness: bool = False):
    """Exact check of both cancellation implications over all triples."""
    M, J = l.meet, l.join
    for x in range(l.n):
        jx, mx = J[x], M[x]
        eq = jx[:, None] == jx[None, :]
        bad = eq & (jx[M] != jx[:, None])
        if bad.any():
            if witness:
                ys, zs = np.nonzero(bad)
                return False, ("join", x, int(ys[0]), int(zs[0]))
            return False
        eq = mx[:, None] == mx[None, :]
        bad = eq & (mx[J] != mx[:, None])
        if bad.any():
            if witness:
                ys, zs = np.nonzero(bad)
                return False, ("meet", x, int(ys[0]), int(zs[0]))
            return False
    return (True, None) if witness else True


def interval(l: Lattice, a: int, b: int) -> tuple[Lattice, tuple[int, ...]]:
    """The induced lattice on {x : a <= x <= b} and the element map back to
    l (sublattice element i is original element map[i])."""
    if not l.leq(a, b):
        raise NotComparable(a, b)
    members = tuple(sorted(_bits(l.poset.up_mask(a) & l.poset.down_mask(b))))
    index = {x: i for i, x in enumerate(members)}
    k = len(members)
    # covers of an interval of a lattice are exactly the restricted covers
    covers = [(index[y], index[z]) for y, z in l.covers
              if y in index and z in index]
    up = [0] * k
    down = [0] * k
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            if l.leq(x, y):
                up[i] |= 1 << j
                down[j] |= 1 << i
    poset = Poset(k, covers, up, down)
    meet = np.empty((k, k), dtype=np.int32)
    join = np.empty((k, k), dtype=np.int32)
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            meet[i, j] = index[int(l.meet[x, y])]
            join[i, j] = index[int(l.join[x, y])]
    names = tuple(l.name_of(x) for x in members) if l.names else None
    sub = Lattice(poset, meet, join, index[a], index[b], names=names)
    return sub, members


def spine(l: Lattice) -> tuple[int, ...]:
    """Elements lying on some maximal-length chain of an extremal lattice."""
    if not is_extremal(l):
        raise NotExtremal("spine requires an extremal lattice")
    h = _heights(l)
    co = _coheights(l)
    n = h[l.top]
    return tuple(x for x in range(l.n) if h[x] + co[x] == n)


@dataclass(frozen=True)
class Congruence:
    """A validated lattice congruence, stored as its partition into classes
    (each class sorted, classes sorted by least element)."""

    classes: tuple[tuple[int, ...], ...]


def congruence(l: Lattice, classes) -> Congruence:
    """Validate that the partition is a lattice congruence.

    Compatibility is checked one side at a time (x1 ~ x2 implies
    x1 ^ y ~ x2 ^ y and dually), which suffices by transitivity.  Raises
    NotACongruence with the witness triple on failure.
    """
    cls = [tuple(sorted(c)) for c in classes]
    cls.sort(key=lambda c: c[0])
    seen = [x for c in cls for x in c]
    if sorted(seen) != list(range(l.n)):
        raise ValueError("classes do not partition the elements")
    of = {}
    for i, c in enumerate(cls):
        for x in c:
            of[x] = i
    M, J = l.meet, l.join
    for c in cls:
        for x1, x2 in combinations(c, 2):
            for y in range(l.n):
                if of[int(M[x1, y])] != of[int(M[x2, y])]:
                    raise NotACongruence(x1, x2, y, "meet")
                if of[int(J[x1, y])] != of[int(J[x2, y])]:
                    raise NotACongruence(x1, x2, y, "join")
    return Congruence(tuple(cls))


def all_congruences(l: Lattice) -> list[Congruence]:
    """Brute-force enumeration of all congruences (set partitions filtered
    by compatibility).  Exponential; intended for small test lattices."""
    out = []
    for part in _set_partitions(list(range(l.n))):
        try:
            out.append(congruence(l, part))
        except NotACongruence:
            pass
    return out


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def quotient(l: Lattice, c: Congruence) -> tuple[Lattice, tuple[tuple[int, ...], ...]]:
    """The lattice on the congruence classes, plus the class list (class i of
    the result collects the original elements c.classes[i])."""
    of = {}
    for i, cl in enumerate(c.classes):
        for x in cl:
            of[x] = i
    k = len(c.classes)
    relations = {(of[a], of[b]) for a, b in l.covers if of[a] != of[b]}
    p = poset_from_relations(k, sorted(relations))
    names = None
    if l.names is not None:
        names = tuple("|".join(l.name_of(x) for x in cl) for cl in c.classes)
    return lattice_from_poset(p, names=names), c.classes
