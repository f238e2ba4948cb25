"""Benchmark the compiled kernels against their pure-Python twins.

Both backends are imported directly (the selector in treecast.kernels is
bypassed) so one process can time identical inputs on each. Run:

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from treecast import _pykernels
from treecast.families import gen_perfect_kary, gen_spider
from treecast.oracle import _ball_constraints, mc_exact
from treecast.tree import random_tree

try:
    from treecast import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    """Yields (name, call_on_backend) pairs; call_on_backend(mod) runs the kernel."""
    big = gen_perfect_kary(2, 9).tree  # n = 1023
    ed = np.asarray(big.edges(), dtype=np.int32)
    eu, ev = ed[:, 0].copy(), ed[:, 1].copy()
    yield "bfs_all_pairs n=1023", lambda m: m.bfs_all_pairs(big.n, eu, ev)

    dist = big.dist_matrix()
    rng = random.Random(1)
    powers = np.zeros(big.n, dtype=np.int32)
    for v in rng.sample(range(big.n), 40):
        powers[v] = rng.randint(1, 4)
    eccs = np.asarray(big.eccentricities(), dtype=np.int32)
    yield "packing_violation n=1023", lambda m: m.packing_violation(dist, powers)
    yield "independence_violation n=1023", lambda m: m.independence_violation(dist, powers)

    tokens = np.zeros(big.n, dtype=np.uint8)
    for v in rng.sample(range(big.n), 200):
        tokens[v] = 1
    yield "multicover_violation n=1023", lambda m: m.multicover_violation(dist, tokens, eccs)

    sp = gen_spider((3, 3, 4)).tree  # n = 11, heavy branch-and-bound
    dsp = sp.dist_matrix()
    esp = np.asarray(sp.eccentricities(), dtype=np.int32)
    seed_powers = np.zeros(sp.n, dtype=np.int32)
    seed_powers[sp.diametral_path()[0]] = sp.diameter()
    yield "pb_search spider(3,3,4)", lambda m: m.pb_search(dsp, esp, sp.diameter(), seed_powers)

    rt = random_tree(17, random.Random(5))
    drt = rt.dist_matrix()
    allowed = (1 << rt.n) - 1
    yield "alpha_subset_scan n=17", lambda m: m.alpha_subset_scan(drt, allowed)

    yield "alpha_tiny_scan n=8", (
        lambda t=random_tree(8, random.Random(9)): (
            lambda m, d=t.dist_matrix(), e=np.asarray(t.eccentricities(), dtype=np.int32): m.alpha_tiny_scan(d, e)
        )
    )()

    masks, needs = _ball_constraints(rt)
    budget = mc_exact(rt, limit=20).value
    yield "mc_complete n=17", lambda m: m.mc_complete(masks, needs, rt.n, budget, 0)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled backend not built; nothing to compare")
        return

    rows = []
    for name, call in cases():
        # warm up once per backend, then best-of timing
        call(_kernels)
        call(_pykernels)
        tc = best_of(lambda: call(_kernels), args.repeat)
        tp = best_of(lambda: call(_pykernels), args.repeat)
        rows.append((name, tc, tp, tp / tc if tc > 0 else float("inf")))

    w = max(len(r[0]) for r in rows)
    print(f"{'kernel'.ljust(w)}  {'compiled':>12}  {'pure':>12}  {'speedup':>8}")
    for name, tc, tp, s in rows:
        print(f"{name.ljust(w)}  {tc * 1e3:>10.3f}ms  {tp * 1e3:>10.3f}ms  {s:>7.1f}x")


if __name__ == "__main__":
    main()
