"""Posets, ideals, antichains, linear extensions."""

from __future__ import annotations

from itertools import permutations

import pytest

from trimlat import (
    CycleDetected,
    SizeLimitExceeded,
    antichains,
    canonical_extension,
    ideal_masks,
    linear_extensions,
    order_ideals,
    poset_from_relations,
)
V_POSET = poset_from_relations(3, [(0, 2), (1, 2)])


def test_from_relations_v_poset():
    assert V_POSET.covers == ((0, 2), (1, 2))
    assert V_POSET.leq(0, 2) and V_POSET.leq(1, 2)
    assert not V_POSET.leq(0, 1) and not V_POSET.leq(2, 0)


def test_from_relations_singleton():
    p = poset_from_relations(1, [])
    assert p.n == 1 and p.covers == ()


def test_from_relations_chain_reduction():
    p = poset_from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert p.covers == ((0, 1), (1, 2))


def test_from_relations_cycle():
    with pytest.raises(CycleDetected):
        poset_from_relations(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CycleDetected):
        poset_from_relations(2, [(0, 0)])


def test_reduction_closure_roundtrip(small_posets):
    # rebuilding from the full set of strict relations recovers the covers
    for q in small_posets:
        rels = [(a, b) for a in range(q.n) for b in range(q.n) if q.lt(a, b)]
        assert poset_from_relations(q.n, rels).covers == q.covers


def test_order_ideals_antichain_is_boolean():
    l = order_ideals(poset_from_relations(2, []))
    assert l.n == 4
    assert len(l.poset.covers) == 4


def test_order_ideals_fig1_poset():
    l = order_ideals(V_POSET)
    assert l.n == 5
    # masks sorted by (size, value): {}, {0}, {1}, {0,1}, {0,1,2}
    assert ideal_masks(V_POSET) == (0, 1, 2, 3, 7)


def test_order_ideals_chain():
    chain = poset_from_relations(3, [(0, 1), (1, 2)])
    l = order_ideals(chain)
    assert l.n == 4
    assert l.poset.covers == ((0, 1), (1, 2), (2, 3))


def test_order_ideals_size_cap():
    with pytest.raises(SizeLimitExceeded):
        order_ideals(poset_from_relations(6, []), max_elements=10)


def test_linear_extensions_antichain2():
    q = poset_from_relations(2, [])
    assert linear_extensions(q, 10) == [(0, 1), (1, 0)]


def test_linear_extensions_chain():
    q = poset_from_relations(3, [(0, 1), (1, 2)])
    assert linear_extensions(q, 10) == [(0, 1, 2)]


def test_linear_extensions_fig1_poset():
    # oracle: filter all 3! total orders by the order relation
    want = [p for p in permutations(range(3))
            if all(not V_POSET.lt(p[j], p[i])
                   for i in range(3) for j in range(i + 1, 3))]
    got = linear_extensions(V_POSET, 10)
    assert sorted(got) == sorted(want)
    assert len(got) == 2


def test_linear_extensions_limit_and_canonical():
    q = poset_from_relations(4, [])
    exts = linear_extensions(q, 3)
    assert len(exts) == 3
    assert exts[0] == canonical_extension(q) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        linear_extensions(q, 0)


def test_extensions_refine_order(small_posets):
    for q in small_posets:
        for ext in linear_extensions(q, 30):
            pos = {x: i for i, x in enumerate(ext)}
            assert all(pos[a] < pos[b]
                       for a in range(q.n) for b in range(q.n) if q.lt(a, b))
        assert canonical_extension(q) == linear_extensions(q, 1)[0]


def test_antichains_fig1_poset():
    # oracle: brute force over all 2^3 subsets
    subsets = [frozenset(s) for k in range(4)
               for s in __import__("itertools").combinations(range(3), k)]
    want = {s for s in subsets
            if not any(V_POSET.lt(a, b) or V_POSET.lt(b, a)
                       for a in s for b in s)}
    got = antichains(V_POSET)
    assert set(got) == want
    assert len(got) == 5


def test_antichains_chain_and_antichain():
    chain = poset_from_relations(3, [(0, 1), (1, 2)])
    assert len(antichains(chain)) == 4
    for k in (1, 2, 3, 4):
        assert len(antichains(poset_from_relations(k, []))) == 2 ** k


def test_ideals_equal_antichains(small_posets):
    for q in small_posets:
        assert len(ideal_masks(q)) == len(antichains(q))


def test_dual_involution(small_posets):
    for q in small_posets:
        assert q.dual().dual() == q
