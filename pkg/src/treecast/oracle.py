"""Exact brute-force solvers for small trees.

These are the independent ground truth the closed forms and constructions are
tested against, so they are written for transparency and determinism, not
speed: fixed exploration orders, explicit tie-breaking, and hard size caps
(TooLargeError beyond). Witnesses are canonical: among all optima, the one
whose (sorted broadcaster/token ids, powers) tuple is smallest.

The heavy inner loops live in the kernel backends (compiled when available);
this module builds inputs, applies seeds and bounds that are provably safe,
and assembles witnesses:

* alpha_b_exact scans broadcaster subsets. For a fixed independent set A the
  best power at v in A is min(d(v, A - v)) - 1 (any more and some other
  member hears v), so scanning sets is exhaustive. Singletons are handled
  separately: a lone broadcaster at power ecc(v) is always independent.
* pb_exact runs depth-first over vertices with per-vertex power caps against
  all chosen broadcasters, seeded with the always-feasible single diametral
  broadcaster (weight = diameter).
* mc_exact iteratively deepens the token budget starting from the diameter
  (the ball around a diametral endpoint at radius ecc = diameter alone needs
  that many tokens), then rebuilds the lexicographically least witness by
  forced-inclusion probes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import TooLargeError
from .model import Broadcast, TokenSet
from .tree import Tree

_MASK_MAX = 62  # subset encodings use single machine words


@dataclass(frozen=True)
class OracleResult:
    value: int
    explored: int
    broadcast: Broadcast | None = None
    tokens: TokenSet | None = None


def _dist16(t: Tree) -> np.ndarray:
    return np.ascontiguousarray(t.dist_matrix(), dtype=np.int16)


def _guard(t: Tree, limit: int, what: str) -> None:
    cap = min(limit, _MASK_MAX)
    if t.n > cap:
        raise TooLargeError(f"{what} is exhaustive; n={t.n} exceeds the limit {cap}")


def _witness_key(powers) -> tuple:
    senders = tuple(v for v, p in enumerate(powers) if p > 0)
    return (senders, tuple(powers[v] for v in senders))


def alpha_b_exact(t: Tree, limit: int = 20, allowed=None) -> OracleResult:
    """Maximum-weight independent broadcast by subset scan.

    allowed optionally restricts which vertices may broadcast (e.g. leaves
    only); the optimum reported is over broadcaster sets within it.
    """
    _guard(t, limit, "independent-broadcast search")
    n = t.n
    dist = _dist16(t)
    ecc = t.eccentricities()
    if allowed is None:
        allowed_list = list(range(n))
    else:
        allowed_list = sorted({int(v) for v in allowed})
        for v in allowed_list:
            t._check_vertex(v)
        if not allowed_list:
            raise ValueError("allowed must name at least one vertex")
    allowed_mask = 0
    for v in allowed_list:
        allowed_mask |= 1 << v
    val, mask, explored = kernels.alpha_subset_scan(dist, allowed_mask)
    explored += len(allowed_list)
    # best singleton: highest eccentricity, smallest id on ties
    sv = max(allowed_list, key=lambda v: (int(ecc[v]), -v))
    s_powers = [0] * n
    s_powers[sv] = int(ecc[sv])
    best_val, best_powers = int(ecc[sv]), s_powers
    if val >= best_val:
        m_powers = _subset_powers(dist, mask, n)
        if val > best_val or _witness_key(m_powers) < _witness_key(s_powers):
            best_val, best_powers = val, m_powers
    return OracleResult(best_val, explored, broadcast=Broadcast(tuple(best_powers)))


def _subset_powers(dist, mask: int, n: int) -> list[int]:
    members = [v for v in range(n) if (mask >> v) & 1]
    powers = [0] * n
    for v in members:
        others = [int(dist[v, u]) for u in members if u != v]
        powers[v] = min(others) - 1
    return powers


def alpha_b_tiny(t: Tree, limit: int = 8) -> OracleResult:
    """Maximum-weight independent broadcast by raw power-vector enumeration.

    Exponential in a worse way than the subset scan; exists purely as an
    independent cross-check of alpha_b_exact on very small trees.
    """
    _guard(t, limit, "power-vector enumeration")
    dist = _dist16(t)
    ecc = np.asarray(t.eccentricities(), dtype=np.int32)
    val, powers, explored = kernels.alpha_tiny_scan(dist, ecc)
    return OracleResult(int(val), int(explored), broadcast=Broadcast(tuple(powers)))


def pb_exact(t: Tree, limit: int = 16) -> OracleResult:
    """Maximum-weight packing by branch and bound over per-vertex powers."""
    _guard(t, limit, "packing search")
    n = t.n
    dist = _dist16(t)
    ecc = np.asarray(t.eccentricities(), dtype=np.int32)
    diam = t.diameter()
    seed = [0] * n
    # smallest-id vertex realising the diameter: always a feasible packing
    sv = int(np.flatnonzero(np.asarray(ecc) == diam)[0])
    seed[sv] = diam
    val, powers, explored = kernels.pb_search(dist, ecc, diam, seed)
    return OracleResult(int(val), int(explored), broadcast=Broadcast(tuple(powers)))


def _ball_constraints(t: Tree) -> tuple[np.ndarray, np.ndarray]:
    n = t.n
    dist = t.dist_matrix()
    ecc = t.eccentricities()
    masks = []
    needs = []
    for v in range(n):
        row = dist[v]
        for k in range(1, int(ecc[v]) + 1):
            m = 0
            for u in range(n):
                if int(row[u]) <= k:
                    m |= 1 << u
            masks.append(m)
            needs.append(k)
    return np.asarray(masks, dtype=np.uint64), np.asarray(needs, dtype=np.int32)


def mc_exact(t: Tree, limit: int = 16) -> OracleResult:
    """Minimum layered cover by iterative deepening plus witness rebuild."""
    _guard(t, limit, "cover search")
    n = t.n
    masks, needs = _ball_constraints(t)
    explored = 0
    budget = t.diameter()  # provably a lower bound, see module docstring
    while True:
        found, ex = kernels.mc_complete(masks, needs, n, budget, 0)
        explored += int(ex)
        if found != -1:
            break
        budget += 1
    # lexicographically least witness of the optimal size
    forced = 0
    for v in range(n):
        if bin(forced).count("1") == budget:
            break
        cand, ex = kernels.mc_complete(masks, needs, n, budget, forced | (1 << v))
        explored += int(ex)
        if cand != -1:
            forced |= 1 << v
    assert bin(forced).count("1") == budget
    tokens = frozenset(v for v in range(n) if (forced >> v) & 1)
    return OracleResult(budget, explored, tokens=TokenSet(tokens))


def max_independent_set(t: Tree) -> int:
    """Classic two-state tree DP; used to sanity-check the k-ary rule that
    the best independent broadcast weight equals the independence number."""
    n = t.n
    adj = t.adj
    order = [0]
    parent = [-1] * n
    parent[0] = 0
    for x in order:
        for y in adj[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    take = [1] * n
    skip = [0] * n
    # children of v are its neighbours other than parent[v]; the root's
    # sentinel parent is itself, which no neighbour equals
    for v in reversed(order):
        for c in adj[v]:
            if c == parent[v]:
                continue
            take[v] += skip[c]
            skip[v] += max(take[c], skip[c])
    return max(take[0], skip[0])
