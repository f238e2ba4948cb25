"""The compiled extension and the pure fallback must be twins: same values,
same witnesses, same number of search nodes. Any drift means one of them
changed alone."""

import random

import numpy as np
import pytest

from treecast import _pykernels
from treecast.families import gen_double_spider, gen_perfect_kary, gen_spider
from treecast.kernels import BACKEND, COMPILED
from treecast.oracle import _ball_constraints, mc_exact
from treecast.tree import random_tree

_kernels = pytest.importorskip("treecast._kernels")

pytestmark = pytest.mark.skipif(not COMPILED, reason="compiled backend not active")


def both(fn_name, *args):
    a = getattr(_kernels, fn_name)(*args)
    b = getattr(_pykernels, fn_name)(*args)
    return a, b


def sample_trees():
    yield gen_perfect_kary(2, 3).tree
    yield gen_spider((2, 2, 3)).tree
    yield gen_double_spider((2, 2), (2, 2), 1).tree
    for seed in (1, 2, 3, 4, 5):
        yield random_tree(random.Random(seed).randint(4, 14), random.Random(seed))


def edge_arrays(t):
    ed = np.asarray(t.edges(), dtype=np.int32)
    return ed[:, 0].copy(), ed[:, 1].copy()


def test_backend_is_compiled():
    assert BACKEND == "compiled"


def test_bfs_all_pairs_parity():
    for t in sample_trees():
        eu, ev = edge_arrays(t)
        a, b = both("bfs_all_pairs", t.n, eu, ev)
        assert np.array_equal(a, b)
        assert a.dtype == b.dtype == np.int16


def test_violation_checks_parity():
    for t in sample_trees():
        d = t.dist_matrix()
        eccs = np.asarray(t.eccentricities(), dtype=np.int32)
        rng = random.Random(t.n * 31)
        for _ in range(25):
            powers = np.zeros(t.n, dtype=np.int32)
            for v in range(t.n):
                if rng.random() < 0.4:
                    powers[v] = rng.randint(1, int(eccs[v]))
            assert both("packing_violation", d, powers)[0] == both("packing_violation", d, powers)[1]
            assert (
                both("independence_violation", d, powers)[0]
                == both("independence_violation", d, powers)[1]
            )
            tokens = np.zeros(t.n, dtype=np.uint8)
            for v in range(t.n):
                if rng.random() < 0.5:
                    tokens[v] = 1
            a, b = both("multicover_violation", d, tokens, eccs)
            assert a == b


def test_alpha_scans_parity():
    for t in sample_trees():
        d = t.dist_matrix()
        full = (1 << t.n) - 1
        a, b = both("alpha_subset_scan", d, full)
        assert a == b  # value, witness mask, explored count
        if t.n <= 8:
            eccs = np.asarray(t.eccentricities(), dtype=np.int32)
            a, b = both("alpha_tiny_scan", d, eccs)
            assert a[0] == b[0] and a[2] == b[2]
            assert list(a[1]) == list(b[1])


def test_pb_search_parity():
    for t in sample_trees():
        d = t.dist_matrix()
        eccs = np.asarray(t.eccentricities(), dtype=np.int32)
        seed_powers = np.zeros(t.n, dtype=np.int32)
        seed_powers[t.diametral_path()[0]] = t.diameter()
        a, b = both("pb_search", d, eccs, t.diameter(), seed_powers)
        assert a[0] == b[0] and a[2] == b[2]
        assert list(a[1]) == list(b[1])


def test_mc_complete_parity():
    for t in sample_trees():
        masks, needs = _ball_constraints(t)
        budget = mc_exact(t).value
        a, b = both("mc_complete", masks, needs, t.n, budget, 0)
        assert a == b
        # one token short must fail identically on both backends
        a, b = both("mc_complete", masks, needs, t.n, budget - 1, 0)
        assert a[0] == b[0] == -1
