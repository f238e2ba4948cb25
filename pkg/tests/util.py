"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from treecast.model import Broadcast
from treecast.tree import Tree, random_tree

# verdict lines from the acceptance sweeps; conftest prints them at the end
ACCEPTANCE_LINES: list[str] = []


def leg_multisets(max_total: int, min_legs: int = 3, min_leg: int = 1):
    """Sorted leg tuples with at least min_legs legs, each >= min_leg,
    total length between the implied minimum and max_total."""
    out = []

    def rec(rem, lo, acc):
        if len(acc) >= min_legs:
            out.append(tuple(acc))
        if rem < lo:
            return
        for leg in range(lo, rem + 1):
            acc.append(leg)
            rec(rem - leg, leg, acc)
            acc.pop()

    rec(max_total, min_leg, [])
    return sorted(out)


def caterpillar_shapes(max_n: int):
    """All caterpillars with 2 <= n <= max_n, one spine/pendants encoding per
    isomorphism class: the spine is the internal path, so both end spine
    vertices carry a pendant (>= 2 on a one-vertex spine), mirrors deduped."""
    yield 2, (0, 0)
    for m in range(1, max_n - 1):
        def rec(i, rem, acc):
            if i == m:
                yield tuple(acc)
                return
            start = (2 if m == 1 else 1) if i == 0 else (1 if i == m - 1 else 0)
            for p in range(start, rem + 1):
                acc.append(p)
                yield from rec(i + 1, rem - p, acc)
                acc.pop()

        for pend in rec(0, max_n - m, []):
            if pend > tuple(reversed(pend)):
                continue
            yield m, pend


def seeded_tree(n: int, seed: int) -> Tree:
    return random_tree(n, random.Random(seed))


def random_valid_broadcast(t: Tree, rng: random.Random, density: float = 0.4) -> Broadcast:
    eccs = t.eccentricities()
    powers = [0] * t.n
    for v in range(t.n):
        if rng.random() < density:
            powers[v] = rng.randint(1, eccs[v])
    return Broadcast(tuple(powers))
