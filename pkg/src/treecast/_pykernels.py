"""Pure-Python kernels: reference implementations of every hot routine.

treecast._kernels (Cython) mirrors this module function for function. Both
backends must explore search nodes in the same order and break ties with the
same keys, so that witnesses are byte-identical whichever backend is loaded.
Keep the two files in sync; the parity tests compare them directly.

Conventions shared by both backends:
* dist is the full int16 distance matrix, so every routine here is limited to
  trees small enough to hold one (enforced by the callers).
* subset search encodes vertex sets as bitmasks, so n <= 62 throughout.
* witness order for equal-weight broadcasts: smaller tuple of broadcaster ids
  first, then smaller tuple of their powers.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def backend() -> str:
    return "pure"


# -- distances --------------------------------------------------------------


def bfs_all_pairs(n, eu, ev):
    """All-pairs hop distances of a tree given as edge arrays; int16 matrix."""
    adj = [[] for _ in range(n)]
    for u, v in zip(eu, ev):
        u = int(u)
        v = int(v)
        adj[u].append(v)
        adj[v].append(u)
    out = np.empty((n, n), dtype=np.int16)
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        q = deque([src])
        while q:
            x = q.popleft()
            dx = dist[x] + 1
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dx
                    q.append(y)
        out[src] = dist
    return out


# -- feasibility checks (matrix flavour) ------------------------------------


def packing_violation(dist, powers):
    """First vertex that hears two broadcasters, or -1 if none does."""
    n = dist.shape[0]
    d = dist.tolist()
    p = [int(x) for x in powers]
    senders = [v for v in range(n) if p[v] > 0]
    for u in range(n):
        du = d[u]
        heard = 0
        for v in senders:
            if du[v] <= p[v]:
                heard += 1
                if heard == 2:
                    return u
    return -1


def independence_violation(dist, powers):
    """First broadcaster that hears another broadcaster, or -1."""
    n = dist.shape[0]
    d = dist.tolist()
    p = [int(x) for x in powers]
    senders = [v for v in range(n) if p[v] > 0]
    for v in senders:
        dv = d[v]
        for u in senders:
            if u != v and dv[u] <= p[u]:
                return v
    return -1


def multicover_violation(dist, tokens, eccs):
    """First (v, k, count) with fewer than k tokens within distance k of v.

    k runs over 1..ecc(v) for every vertex v. Returns None when covered.
    """
    n = dist.shape[0]
    d = dist.tolist()
    tok = [v for v in range(n) if tokens[v]]
    ecc = [int(x) for x in eccs]
    for v in range(n):
        e = ecc[v]
        cnt = [0] * (e + 1)
        dv = d[v]
        for t in tok:
            dd = dv[t]
            if dd <= e:
                cnt[dd] += 1
        run = cnt[0]
        for k in range(1, e + 1):
            run += cnt[k]
            if run < k:
                return (v, k, run)
    return None


# -- exhaustive searches -----------------------------------------------------


def _mask_lex_smaller(a: int, b: int) -> bool:
    """Compare two vertex sets by their sorted member tuples."""
    x = a ^ b
    if not x:
        return False
    j = (x & -x).bit_length() - 1
    if (a >> j) & 1:
        return (b >> j) == 0  # b ran out first: b is a strict prefix of a
    return (a >> j) == 0


def _witness_key(powers):
    senders = tuple(i for i, p in enumerate(powers) if p > 0)
    return (senders, tuple(powers[i] for i in senders))


def alpha_subset_scan(dist, allowed_mask):
    """Best weight over broadcaster sets A, |A| >= 2, A within allowed_mask.

    For a fixed independent set of broadcasters A the best feasible power at
    v in A is (min distance to the rest of A) - 1, so scanning sets suffices.
    Sets with two adjacent members can never be independent and are skipped.
    Returns (best_weight, best_mask, masks_examined); best is -1 if no mask
    with >= 2 members is feasible.
    """
    n = dist.shape[0]
    d = dist.tolist()
    adj = [0] * n
    for u in range(n):
        du = d[u]
        m = 0
        for v in range(n):
            if du[v] == 1:
                m |= 1 << v
        adj[u] = m
    best_val = -1
    best_mask = 0
    explored = 0
    s = 0
    while True:
        s = (s - allowed_mask) & allowed_mask  # next submask, ascending
        if s == 0:
            break
        if s & (s - 1) == 0:
            continue  # need at least two broadcasters
        explored += 1
        mm = s
        val = 0
        ok = True
        while mm:
            b = mm & -mm
            v = b.bit_length() - 1
            mm ^= b
            if adj[v] & s:
                ok = False  # adjacent pair: one always hears the other
                break
            dv = d[v]
            rest = s ^ (1 << v)
            mind = 1 << 30
            while rest:
                b2 = rest & -rest
                u = b2.bit_length() - 1
                rest ^= b2
                dd = dv[u]
                if dd < mind:
                    mind = dd
            val += mind - 1
        if ok:
            if val > best_val:
                best_val = val
                best_mask = s
            elif val == best_val and _mask_lex_smaller(s, best_mask):
                best_mask = s
    return best_val, best_mask, explored


def alpha_tiny_scan(dist, eccs):
    """Exhaustive vertex-by-vertex power assignment (very small trees only).

    Assigns each vertex a power 0..ecc in id order, pruning any assignment in
    which two broadcasters can hear each other. Powers are tried descending
    before 0 and equal-weight completions are pruned, so the witness is the
    first optimum in that fixed order on both backends.
    """
    n = dist.shape[0]
    d = dist.tolist()
    ecc = [int(x) for x in eccs]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ecc[i]
    best_val = -1
    best_powers = None
    powers = [0] * n
    explored = 0

    def rec(i: int, cur: int) -> None:
        nonlocal best_val, best_powers, explored
        explored += 1
        if cur + suffix[i] <= best_val:
            return
        if i == n:
            best_val = cur
            best_powers = tuple(powers)
            return
        di = d[i]
        cap = ecc[i]
        blocked = False
        for j in range(i):
            pj = powers[j]
            if pj:
                if di[j] <= pj:
                    blocked = True  # i would hear j, so i must stay silent
                    break
                if di[j] - 1 < cap:
                    cap = di[j] - 1  # j must not hear i
        if not blocked:
            for p in range(cap, 0, -1):
                powers[i] = p
                rec(i + 1, cur + p)
            powers[i] = 0
        rec(i + 1, cur)

    rec(0, 0)
    return best_val, best_powers, explored


def pb_search(dist, eccs, seed_val, seed_powers):
    """Exact max-weight mutually-silent broadcast by branch and bound.

    Vertices are decided in id order. cap[j] tracks the largest power vertex
    j may still take against every already-chosen broadcaster i, namely
    min(ecc(j), d(i,j) - 1 - p(i)); the pairwise slack condition
    p(i) + p(j) <= d(i,j) - 1 characterises feasibility. Branches try powers
    descending, then 0. The bound prunes only strictly worse partial sums so
    ties survive to the leaf comparison, which keeps the smallest witness.
    """
    n = dist.shape[0]
    d = dist.tolist()
    cap = [int(x) for x in eccs]
    powers = [0] * n
    best_val = seed_val
    best_powers = tuple(int(x) for x in seed_powers)
    best_key = _witness_key(best_powers)
    explored = 0

    def rec(i: int, cur: int) -> None:
        nonlocal best_val, best_powers, best_key, explored
        explored += 1
        rem = 0
        for j in range(i, n):
            c = cap[j]
            if c > 0:
                rem += c
        if cur + rem < best_val:
            return
        if i == n:
            if cur > best_val:
                best_val = cur
                best_powers = tuple(powers)
                best_key = _witness_key(best_powers)
            elif cur == best_val:
                key = _witness_key(powers)
                if key < best_key:
                    best_powers = tuple(powers)
                    best_key = key
            return
        di = d[i]
        c0 = cap[i]
        for p in range(c0, 0, -1):
            powers[i] = p
            saved = []
            for j in range(i + 1, n):
                nc = di[j] - 1 - p
                if nc < cap[j]:
                    saved.append((j, cap[j]))
                    cap[j] = nc
            rec(i + 1, cur + p)
            for j, old in saved:
                cap[j] = old
        powers[i] = 0
        rec(i + 1, cur)

    rec(0, 0)
    return best_val, best_powers, explored


def mc_complete(ball_masks, needs, n, budget, forced):
    """Find any token set of size <= budget meeting every ball demand.

    ball_masks[i] is the vertex bitmask of some ball, needs[i] how many tokens
    that ball must contain. forced is a bitmask of tokens that must be in the
    set. Search picks the most-deficient ball (first on ties) and branches on
    its uncovered vertices in ascending id order. Returns (mask, explored)
    with mask = -1 when no completion exists within budget.
    """
    balls = [int(x) for x in ball_masks]
    need = [int(x) for x in needs]
    C = len(balls)
    memo: dict[int, int] = {}
    explored = 0
    start = int(forced)
    left0 = budget - bin(start).count("1")
    if left0 < 0:
        return -1, 0

    def rec(S: int, left: int) -> int:
        nonlocal explored
        explored += 1
        worst = -1
        wdef = 0
        for idx in range(C):
            have = bin(S & balls[idx]).count("1")
            deficit = need[idx] - have
            if deficit > wdef:
                wdef = deficit
                worst = idx
        if worst == -1:
            return S
        if wdef > left:
            return -1
        prev = memo.get(S, -1)
        if prev >= left:
            return -1
        memo[S] = left
        cand = balls[worst] & ~S
        while cand:
            b = cand & -cand
            cand ^= b
            r = rec(S | b, left - 1)
            if r != -1:
                return r
        return -1

    return rec(start, left0), explored
