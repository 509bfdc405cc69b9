"""Cover labellings: the left-modular labelling (three equivalent formulas,
asserted equal), descriptive/EL/interpolating predicates, down/up label sets,
semidistributive labellings with the kappa bijection, and canonical join and
meet representations.

A labelling is a map from Hasse edges (y, z) to hashable labels, distinct
around each element.  Left-modular labellings use integer labels 1..n carrying
the Galois poset; semidistributive labellings use irreducible elements as
labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotLeftModular,
    NotSemidistributive,
    ThreeWayMismatch,
)
from .galois import galois_graph, galois_poset, index_irreducibles, pair_masks
from .lattice import Chain, Lattice, is_extremal, is_left_modular_lattice
from .poset import Poset


@dataclass(frozen=True)
class CoverLabelling:
    """An edge labelling together with the partial order on its labels
    (None means labels are unordered/discrete)."""

    labels: dict[tuple[int, int], int]
    label_poset: Poset | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", dict(self.labels))

    def label_set(self) -> frozenset:
        return frozenset(self.labels.values())


@dataclass(frozen=True)
class LabelSets:
    """Per-element downward and upward label sets."""

    down: tuple[frozenset, ...]
    up: tuple[frozenset, ...]


def _label_dict(labelling) -> dict:
    return labelling.labels if isinstance(labelling, CoverLabelling) else labelling


def down_up_labels(l: Lattice, labelling) -> LabelSets:
    labels = _label_dict(labelling)
    down = [set() for _ in range(l.n)]
    up = [set() for _ in range(l.n)]
    for (y, z), lab in labels.items():
        up[y].add(lab)
        down[z].add(lab)
    for x in range(l.n):
        if len(down[x]) != len(l.lower_covers(x)) or len(up[x]) != len(l.upper_covers(x)):
            raise ValueError(f"labelling not defined (or not distinct) around {x}")
    return LabelSets(tuple(map(frozenset, down)), tuple(map(frozenset, up)))


def left_modular_labelling(l: Lattice, chain: Chain | None = None) -> CoverLabelling:
    """The label of each cover y covered-by z along a left-modular chain
    x_0 < ... < x_n, computed three ways and asserted equal:

    1. min over join-irreducibles j with y v j = z of beta_J(j),
    2. min i with y v (x_i ^ z) = z,
    3. max over meet-irreducibles m with z ^ m = y of beta_M(m).

    When no chain is supplied, the deterministic maximal-length chain is used
    for extremal lattices; otherwise a chain of left-modular elements is
    searched for.  For trim lattices the label is also checked against the
    unique overlap label of the cover.
    """
    extremal = is_extremal(l)
    idx = None
    if chain is None:
        if extremal:
            idx = index_irreducibles(l)
            chain = idx.chain
        else:
            chain = is_left_modular_lattice(l)
            if chain is None:
                raise NotLeftModular("no maximal chain of left-modular elements")
    xs = chain.elements
    n = len(xs) - 1
    beta_j = {}
    for j in l.join_irr:
        beta_j[j] = min(i for i in range(1, n + 1) if l.leq(j, xs[i]))
    beta_m = {}
    for m in l.meet_irr:
        beta_m[m] = max(i for i in range(1, n + 1) if l.leq(xs[i - 1], m))

    if extremal and idx is None:
        idx = index_irreducibles(l, chain)
    check_overlap = False
    if idx is not None:
        xj, ym = pair_masks(l, idx)
        # all covers overlapping means trim, where overlap labels apply
        check_overlap = all(ym[y] & xj[z] for y, z in l.covers)

    labels: dict[tuple[int, int], int] = {}
    for y, z in l.covers:
        v1 = min(beta_j[j] for j in l.join_irr if l.join_of(y, j) == z)
        v2 = min(i for i in range(1, n + 1)
                 if l.join_of(y, l.meet_of(xs[i], z)) == z)
        v3 = max(beta_m[m] for m in l.meet_irr if l.meet_of(z, m) == y)
        if not (v1 == v2 == v3):
            raise ThreeWayMismatch((y, z), (v1, v2, v3))
        if check_overlap:
            inter = ym[y] & xj[z]
            if inter & (inter - 1) or inter.bit_length() != v1:
                raise ThreeWayMismatch((y, z), (v1, v1, inter.bit_length()))
        labels[(y, z)] = v1

    if extremal:
        label_poset = galois_poset(galois_graph(l, idx))
    else:
        label_poset = Poset(n, (), tuple(1 << i for i in range(n)),
                            tuple(1 << i for i in range(n)))
    return CoverLabelling(labels, label_poset)


def is_descriptive(l: Lattice, labelling) -> bool:
    """Whether down-label sets and up-label sets each determine elements and
    coincide as families of sets.  Labellings that repeat a label around an
    element (possible on non-extremal left-modular lattices) are not
    descriptive."""
    try:
        sets = down_up_labels(l, labelling)
    except ValueError:
        return False
    downs = set(sets.down)
    ups = set(sets.up)
    return len(downs) == l.n and len(ups) == l.n and downs == ups


def _lex_min_chain(l: Lattice, labels, x: int, z: int) -> list:
    """Greedy lexicographically-least saturated chain from x to z; returns
    the label word."""
    word = []
    cur = x
    while cur != z:
        step = min((labels[(cur, w)], w) for w in l.upper_covers(cur)
                   if l.leq(w, z))
        word.append(step[0])
        cur = step[1]
    return word


def _count_increasing(l: Lattice, labels, x: int, z: int) -> int:
    """Number of saturated chains from x to z with weakly increasing words."""
    memo: dict[tuple[int, int], int] = {}

    def rec(y: int, lo) -> int:
        if y == z:
            return 1
        key = (y, lo)
        if key in memo:
            return memo[key]
        total = 0
        for w in l.upper_covers(y):
            if l.leq(w, z):
                lab = labels[(y, w)]
                if lo is None or lab >= lo:
                    total += rec(w, lab)
        memo[key] = total
        return total

    return rec(x, None)


def _count_word(l: Lattice, labels, x: int, z: int, word) -> int:
    """Number of saturated chains from x to z realizing the exact word."""

    def rec(y: int, i: int) -> int:
        if i == len(word):
            return 1 if y == z else 0
        total = 0
        for w in l.upper_covers(y):
            if l.leq(w, z) and labels[(y, w)] == word[i]:
                total += rec(w, i + 1)
        return total

    return rec(x, 0)


def is_EL(l: Lattice, labelling) -> bool:
    """EL property: in every interval, exactly one saturated chain has a
    weakly increasing label word, and that word strictly lexicographically
    precedes the word of every other saturated chain."""
    labels = _label_dict(labelling)
    for x in range(l.n):
        for z in range(l.n):
            if not l.lt(x, z):
                continue
            if _count_increasing(l, labels, x, z) != 1:
                return False
            word = _lex_min_chain(l, labels, x, z)
            # the unique increasing chain must realize the lex-least word,
            # and no second chain may share that word
            if sorted(word) != word:
                return False
            if _count_word(l, labels, x, z, word) != 1:
                return False
    return True


def is_interpolating(l: Lattice, labelling) -> bool:
    """Interpolating property (assumes is_EL): for every x < y < z by covers,
    either the two labels increase, or the increasing chain from x to z
    starts with the label of (y, z) and ends with the label of (x, y)."""
    labels = _label_dict(labelling)
    for x, y in l.covers:
        for z in l.upper_covers(y):
            a, b = labels[(x, y)], labels[(y, z)]
            if a < b:
                continue
            word = _lex_min_chain(l, labels, x, z)
            if word[0] != b or word[-1] != a:
                return False
    return True


@dataclass(frozen=True)
class SemidistributiveLabelling:
    """gamma_j: cover -> minimal z with x v z = y (a join-irreducible);
    gamma_m: cover -> maximal z with z ^ y = x (a meet-irreducible);
    kappa: the induced bijection from join- to meet-irreducibles."""

    gamma_j: dict[tuple[int, int], int]
    gamma_m: dict[tuple[int, int], int]
    kappa: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "gamma_j", dict(self.gamma_j))
        object.__setattr__(self, "gamma_m", dict(self.gamma_m))
        object.__setattr__(self, "kappa", dict(self.kappa))


def _unique_min(l: Lattice, candidates: list[int], cover, side: str) -> int:
    m = l.meet_all(candidates)
    if m not in candidates:
        mins = [c for c in candidates
                if not any(l.lt(d, c) for d in candidates)]
        raise NotSemidistributive(cover, side, tuple(mins))
    return m


def _unique_max(l: Lattice, candidates: list[int], cover, side: str) -> int:
    j = l.join_all(candidates)
    if j not in candidates:
        maxs = [c for c in candidates
                if not any(l.lt(c, d) for d in candidates)]
        raise NotSemidistributive(cover, side, tuple(maxs))
    return j


def semidistributive_labelling(l: Lattice) -> SemidistributiveLabelling:
    """Compute gamma_j, gamma_m and kappa; raises NotSemidistributive with
    the defining witness whenever a min/max fails to be unique, so a
    successful run certifies the covers it touched."""
    gamma_j = {}
    gamma_m = {}
    for x, y in l.covers:
        cand_j = [z for z in range(l.n) if l.join_of(x, z) == y]
        gj = _unique_min(l, cand_j, (x, y), "minimal-join")
        cand_m = [z for z in range(l.n) if l.meet_of(z, y) == x]
        gm = _unique_max(l, cand_m, (x, y), "maximal-meet")
        if gj not in l.join_irr:
            raise NotSemidistributive((x, y), "join-irreducible", (gj,))
        if gm not in l.meet_irr:
            raise NotSemidistributive((x, y), "meet-irreducible", (gm,))
        gamma_j[(x, y)] = gj
        gamma_m[(x, y)] = gm

    kappa = {}
    for j in l.join_irr:
        j_star = l.lower_covers(j)[0]
        cand = [z for z in range(l.n) if l.leq(j_star, z) and not l.leq(j, z)]
        kappa[j] = _unique_max(l, cand, (j_star, j), "kappa")
    if sorted(kappa.values()) != sorted(l.meet_irr):
        raise NotSemidistributive((l.bottom, l.top), "kappa-bijection",
                                  tuple(kappa.values()))
    for e, gj in gamma_j.items():
        if kappa[gj] != gamma_m[e]:
            raise NotSemidistributive(e, "kappa-consistency",
                                      (kappa[gj], gamma_m[e]))
    return SemidistributiveLabelling(gamma_j, gamma_m, kappa)


def canonical_join_rep(l: Lattice, x: int,
                       sdl: SemidistributiveLabelling | None = None) -> frozenset[int]:
    """The canonical join representation of x: the gamma_j labels of its
    lower covers (empty for the bottom element)."""
    if sdl is None:
        sdl = semidistributive_labelling(l)
    return frozenset(sdl.gamma_j[(y, x)] for y in l.lower_covers(x))


def canonical_meet_rep(l: Lattice, x: int,
                       sdl: SemidistributiveLabelling | None = None) -> frozenset[int]:
    """The canonical meet representation of x: kappa applied to the gamma_j
    labels of its upper covers."""
    if sdl is None:
        sdl = semidistributive_labelling(l)
    return frozenset(sdl.gamma_m[(x, z)] for z in l.upper_covers(x))
