import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecast.errors import TooLargeError
from treecast.families import gen_double_spider, gen_perfect_kary, gen_spider
from treecast.model import (
    is_independent,
    is_multicover,
    is_packing,
    is_valid,
    weight,
)
from treecast.oracle import alpha_b_exact, alpha_b_tiny, max_independent_set, mc_exact, pb_exact
from treecast.tree import build_tree
from util import seeded_tree


@given(st.integers(2, 8), st.integers(0, 10_000))
@settings(max_examples=120, deadline=None)
def test_two_alpha_searches_agree(n, seed):
    # subset scan vs direct power-vector enumeration
    t = seeded_tree(n, seed)
    assert alpha_b_exact(t).value == alpha_b_tiny(t).value


def test_alpha_frozen_values():
    assert alpha_b_exact(gen_perfect_kary(2, 1).tree).value == 2
    assert alpha_b_exact(gen_perfect_kary(2, 2).tree).value == 6
    assert alpha_b_exact(gen_perfect_kary(2, 3).tree).value == 12
    assert alpha_b_exact(gen_perfect_kary(3, 1).tree).value == 3
    assert alpha_b_exact(gen_perfect_kary(3, 2).tree).value == 10
    assert alpha_b_exact(gen_spider((1, 1, 5)).tree).value == 10


def test_alpha_witness_is_feasible():
    t = gen_spider((2, 2, 3)).tree
    r = alpha_b_exact(t)
    assert is_valid(t, r.broadcast) and is_independent(t, r.broadcast)
    assert weight(r.broadcast) == r.value
    assert r.explored > 0


def test_alpha_leaf_restriction_matches_full_scan():
    # restricting candidates to the leaves must not lose the optimum on spiders
    for legs in [(1, 1, 3), (2, 2, 2), (2, 2, 3), (1, 2, 4)]:
        lt = gen_spider(legs)
        full = alpha_b_exact(lt.tree)
        leaves_only = alpha_b_exact(lt.tree, allowed=lt.meta["leaf"])
        assert full.value == leaves_only.value


def test_pb_mc_frozen_values():
    cases = [
        (gen_perfect_kary(2, 2).tree, 4),
        (gen_perfect_kary(2, 3).tree, 6),
        (gen_perfect_kary(3, 2).tree, 4),
        (gen_spider((2, 2, 2)).tree, 4),
        (gen_spider((2, 2, 3)).tree, 5),
        (gen_spider((3, 3, 3)).tree, 7),
        (gen_spider((2, 2, 2, 2)).tree, 5),
        (gen_double_spider((1, 2), (1, 2), 3).tree, 7),
        (gen_double_spider((2, 2), (2, 2), 1).tree, 6),
        (gen_double_spider((2, 2), (2, 2), 4).tree, 8),
        (gen_double_spider((1, 1, 3), (2, 2), 2).tree, 7),
    ]
    for t, want in cases:
        assert pb_exact(t).value == want
        assert mc_exact(t).value == want


def test_pb_witness_is_feasible():
    t = gen_spider((2, 2, 3)).tree
    r = pb_exact(t)
    assert is_valid(t, r.broadcast) and is_packing(t, r.broadcast)
    assert weight(r.broadcast) == r.value


def test_mc_witness_is_feasible():
    t = gen_double_spider((2, 2), (2, 2), 4).tree
    r = mc_exact(t)
    assert is_multicover(t, r.tokens)
    assert len(r.tokens.vertices) == r.value


@given(st.integers(2, 11), st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_packing_never_beats_any_cover(n, seed):
    # weak duality, from scratch, on random trees
    t = seeded_tree(n, seed)
    p = pb_exact(t)
    m = mc_exact(t)
    assert p.value <= m.value
    assert p.value >= t.diameter()  # diametral broadcast is always feasible


def test_size_limits():
    t = gen_perfect_kary(2, 4).tree  # n = 31
    with pytest.raises(TooLargeError):
        alpha_b_exact(t, limit=16)
    with pytest.raises(TooLargeError):
        pb_exact(t, limit=16)
    with pytest.raises(TooLargeError):
        mc_exact(t, limit=16)
    with pytest.raises(TooLargeError):
        alpha_b_tiny(t)


def brute_mis(t):
    best = 0
    n = t.n
    for mask in range(1 << n):
        ok = True
        for u, v in t.edges():
            if mask >> u & 1 and mask >> v & 1:
                ok = False
                break
        if ok:
            best = max(best, bin(mask).count("1"))
    return best


@given(st.integers(2, 10), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_mis_dp_matches_brute_force(n, seed):
    t = seeded_tree(n, seed)
    assert max_independent_set(t) == brute_mis(t)


def test_mis_known_shapes():
    path6 = build_tree(6, [(i, i + 1) for i in range(5)])
    assert max_independent_set(path6) == 3
    star = build_tree(6, [(0, i) for i in range(1, 6)])
    assert max_independent_set(star) == 5
