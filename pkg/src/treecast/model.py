"""Broadcast assignments, token sets, and the feasibility predicates.

Definitions used throughout (T a tree, d the hop distance):

* A broadcast assigns every vertex v an integer power 0 <= f(v) <= ecc(v).
  Vertices with f(v) >= 1 are broadcasters. Vertex u hears broadcaster v when
  d(u, v) <= f(v). The weight of f is the sum of all powers.
* f is dominating when every vertex hears at least one broadcaster.
* f is independent when no broadcaster hears another broadcaster.
* f is mutually silent (a packing) when NO vertex hears two broadcasters,
  equivalently f(u) + f(v) <= d(u, v) - 1 for every broadcaster pair u != v,
  equivalently the balls B(v, f(v)) are pairwise disjoint.
* A token set S is a layered cover when for every vertex v and every radius
  k = 1..ecc(v) the ball B(v, k) contains at least k tokens.

Max-weight independent broadcasts, max-weight packings and min-size layered
covers are the three optimisation problems the rest of the package computes.
Packings and layered covers are weakly dual: any packing weight is a lower
bound on any cover size, so exhibiting one of each with equal value proves
both optimal. That equal pair is what Certificate stores.

Predicates run in one of two regimes picked by the tree (see tree.py): index
the cached distance matrix through the kernels, or, for big trees, linear
passes that never materialise distances (a bucketed two-best signal
propagation for hearing counts, and a truncated k-nearest-token DP for cover
checking).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidBroadcastError, ParseError, VertexOutOfRangeError
from .tree import Tree

# -- data types ----------------------------------------------------------------


@dataclass(frozen=True)
class Broadcast:
    """Dense power vector; index = vertex id."""

    powers: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Broadcast":
        powers = [0] * n
        for v, p in dict(pairs).items():
            if not (0 <= int(v) < n):
                raise VertexOutOfRangeError(f"broadcast vertex {v} outside 0..{n - 1}")
            powers[int(v)] = int(p)
        return cls(tuple(powers))


@dataclass(frozen=True)
class TokenSet:
    vertices: frozenset[int]

    @classmethod
    def of(cls, ids) -> "TokenSet":
        return cls(frozenset(int(v) for v in ids))


@dataclass(frozen=True)
class Certificate:
    """A packing and a layered cover asserted to share the same value."""

    packing: Broadcast
    cover: TokenSet
    value: int


def weight(b: Broadcast) -> int:
    return int(sum(b.powers))


def broadcasters(b: Broadcast) -> tuple[int, ...]:
    return tuple(v for v, p in enumerate(b.powers) if p > 0)


# -- validity -------------------------------------------------------------------


def is_valid(t: Tree, b: Broadcast) -> bool:
    """Right length, integral, non-negative, and every power <= ecc(vertex)."""
    if len(b.powers) != t.n:
        return False
    ecc = t.eccentricities()
    for v, p in enumerate(b.powers):
        if not isinstance(p, int) or p < 0 or p > int(ecc[v]):
            return False
    return True


def _require_valid(t: Tree, b: Broadcast) -> None:
    if len(b.powers) != t.n:
        raise InvalidBroadcastError(f"power vector has length {len(b.powers)}, tree has n={t.n}")
    ecc = t.eccentricities()
    for v, p in enumerate(b.powers):
        if not isinstance(p, int) or p < 0:
            raise InvalidBroadcastError(f"power at vertex {v} must be a non-negative int, got {p!r}")
        if p > int(ecc[v]):
            raise InvalidBroadcastError(
                f"power {p} at vertex {v} exceeds its eccentricity {int(ecc[v])}"
            )


def _require_tokens(t: Tree, s: TokenSet) -> None:
    for v in s.vertices:
        if not (0 <= v < t.n):
            raise VertexOutOfRangeError(f"token at vertex {v} outside 0..{t.n - 1}")


# -- hearing (two-best signal propagation, matrix free) --------------------------


def _top2(t: Tree, powers) -> tuple[list[int], list[int]]:
    """For every vertex, the sources of its two strongest distinct signals.

    A broadcaster v injects slack f(v) at itself and slack drops by 1 per
    hop, so the slack of v's signal at u is f(v) - d(u, v) and u hears v iff
    that slack is >= 0. Signals are propagated bucket by bucket in descending
    slack order and only slacks >= 0 ever enter a bucket; an accepted entry
    can never be evicted later (later arrivals are never stronger), so each
    vertex accepts at most two entries and total work is O(n + max power).

    Returns (src1, src2): per vertex the strongest and second strongest
    distinct broadcasters audible there, -1 where there is no such source.
    """
    n = t.n
    adj = t.adj
    src1 = [-1] * n
    src2 = [-1] * n
    s1 = [-1] * n
    s2 = [-1] * n
    maxp = 0
    for p in powers:
        if p > maxp:
            maxp = p
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(maxp + 1)]

    def offer(u: int, src: int, s: int) -> bool:
        if src == src1[u] or src == src2[u]:
            return False
        if s > s1[u]:
            s2[u], src2[u] = s1[u], src1[u]
            s1[u], src1[u] = s, src
        elif s > s2[u]:
            s2[u], src2[u] = s, src
        else:
            return False
        return True

    for v, p in enumerate(powers):
        if p > 0 and offer(v, v, p):
            buckets[p].append((v, v))
    for s in range(maxp, 0, -1):
        for u, src in buckets[s]:
            ns = s - 1
            for w in adj[u]:
                if offer(w, src, ns):
                    buckets[ns].append((w, src))
    return src1, src2


def hearers(t: Tree, b: Broadcast, u: int) -> frozenset[int]:
    """All broadcasters audible at u."""
    _require_valid(t, b)
    t._check_vertex(u)
    row = t.dist_row(u)
    return frozenset(v for v, p in enumerate(b.powers) if p > 0 and int(row[v]) <= p)


def _powers_array(b: Broadcast) -> np.ndarray:
    return np.asarray(b.powers, dtype=np.int32)


def is_dominating(t: Tree, b: Broadcast) -> bool:
    _require_valid(t, b)
    if t.uses_matrix:
        d = t.dist_matrix()
        send = [v for v, p in enumerate(b.powers) if p > 0]
        if not send:
            return False
        p = np.asarray([b.powers[v] for v in send], dtype=np.int16)
        return bool((d[:, send] <= p).any(axis=1).all())
    src1, _ = _top2(t, b.powers)
    return all(s != -1 for s in src1)


def is_independent(t: Tree, b: Broadcast) -> bool:
    """No broadcaster hears another broadcaster."""
    _require_valid(t, b)
    return independence_violation_witness(t, b) is None


def independence_violation_witness(t: Tree, b: Broadcast) -> tuple[int, int] | None:
    """(v, u): broadcaster v hears broadcaster u; None if independent."""
    _require_valid(t, b)
    if t.uses_matrix:
        v = int(kernels.independence_violation(t.dist_matrix(), _powers_array(b)))
        if v < 0:
            return None
        row = t.dist_row(v)
        for u, p in enumerate(b.powers):
            if u != v and p > 0 and int(row[u]) <= p:
                return (v, u)
        raise AssertionError("kernel reported a violation it cannot re-derive")
    src1, src2 = _top2(t, b.powers)
    for v, p in enumerate(b.powers):
        if p <= 0:
            continue
        if src1[v] != v and src1[v] != -1:
            return (v, src1[v])
        if src1[v] == v and src2[v] != -1:
            return (v, src2[v])
    return None


def is_packing(t: Tree, b: Broadcast) -> bool:
    """No vertex anywhere hears two broadcasters."""
    _require_valid(t, b)
    return packing_violation_witness(t, b) is None


def packing_violation_witness(t: Tree, b: Broadcast) -> tuple[int, int, int] | None:
    """(u, v1, v2): vertex u hears both v1 and v2; None if mutually silent."""
    _require_valid(t, b)
    if t.uses_matrix:
        u = int(kernels.packing_violation(t.dist_matrix(), _powers_array(b)))
        if u < 0:
            return None
        row = t.dist_row(u)
        heard = [v for v, p in enumerate(b.powers) if p > 0 and int(row[v]) <= p]
        return (u, heard[0], heard[1])
    src1, src2 = _top2(t, b.powers)
    for u in range(t.n):
        if src2[u] != -1:
            return (u, min(src1[u], src2[u]), max(src1[u], src2[u]))
    return None


def is_packing_pairwise(t: Tree, b: Broadcast) -> bool:
    """Slack form of the packing condition: f(u) + f(v) <= d(u,v) - 1 over
    broadcaster pairs. Equivalent to is_packing; kept as a cross-check."""
    _require_valid(t, b)
    send = broadcasters(b)
    for i, u in enumerate(send):
        row = t.dist_row(u)
        pu = b.powers[u]
        for v in send[i + 1 :]:
            if pu + b.powers[v] > int(row[v]) - 1:
                return False
    return True


# -- layered cover ----------------------------------------------------------------


def is_multicover(t: Tree, s: TokenSet) -> bool:
    """Every ball B(v, k), k = 1..ecc(v), holds at least k tokens."""
    return multicover_violation_witness(t, s) is None


def multicover_violation_witness(t: Tree, s: TokenSet) -> tuple[int, int, int] | None:
    """(v, k, count): ball B(v, k) holds only count < k tokens; None if covered."""
    _require_tokens(t, s)
    if t.uses_matrix:
        flags = np.zeros(t.n, dtype=np.uint8)
        for v in s.vertices:
            flags[v] = 1
        out = kernels.multicover_violation(
            t.dist_matrix(), flags, np.asarray(t.eccentricities(), dtype=np.int32)
        )
        return None if out is None else (int(out[0]), int(out[1]), int(out[2]))
    return _multicover_violation_linear(t, s.vertices)


def _merge_trunc(a: list[int], b: list[int], shift: int, cap: int) -> list[int]:
    """Merge sorted a with (b + shift), keeping the cap smallest."""
    out: list[int] = []
    i = j = 0
    la, lb = len(a), len(b)
    while len(out) < cap and (i < la or j < lb):
        if j >= lb:
            out.append(a[i])
            i += 1
        elif i >= la or b[j] + shift < a[i]:
            out.append(b[j] + shift)
            j += 1
        else:
            out.append(a[i])
            i += 1
    return out


def _multicover_violation_linear(t: Tree, tokens) -> tuple[int, int, int] | None:
    """Matrix-free cover check: per vertex the D nearest token distances.

    Two tree-DP passes (into the subtree, then out of it) maintain sorted
    distance lists truncated at D = diam; prefix/suffix merges over the
    children keep the out-pass linear in total list length. Ball B(v, k) has
    >= k tokens iff the k-th nearest token distance is <= k, and only
    k <= ecc(v) <= D matter, so truncating at D is lossless.
    """
    n = t.n
    adj = t.adj
    flag = bytearray(n)
    for v in tokens:
        flag[v] = 1
    D = t.diameter()
    ecc = t.eccentricities()
    # BFS order from 0; parent[] to derive children
    order = [0]
    parent = [-1] * n
    parent[0] = 0
    for x in order:
        for y in adj[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    down: list[list[int]] = [[] for _ in range(n)]
    for v in reversed(order):
        lst = [0] if flag[v] else []
        for c in children[v]:
            lst = _merge_trunc(lst, down[c], 1, D)
        down[v] = lst

    up: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        kids = children[v]
        if not kids:
            continue
        base = [x + 1 for x in up[v]]
        if flag[v]:
            base = _merge_trunc(base, [1], 0, D)
        if len(kids) == 1:
            up[kids[0]] = base[:D]
            continue
        pre: list[list[int]] = [[]]
        for c in kids:
            pre.append(_merge_trunc(pre[-1], down[c], 2, D))
        suf: list[list[int]] = [[] for _ in range(len(kids) + 1)]
        for i in range(len(kids) - 1, -1, -1):
            suf[i] = _merge_trunc(suf[i + 1], down[kids[i]], 2, D)
        for i, c in enumerate(kids):
            merged = _merge_trunc(base, pre[i], 0, D)
            up[c] = _merge_trunc(merged, suf[i + 1], 0, D)

    for v in range(n):
        full = _merge_trunc(down[v], up[v], 0, D)
        e = int(ecc[v])
        for k in range(1, e + 1):
            if k - 1 >= len(full) or full[k - 1] > k:
                return (v, k, bisect_right(full, k))
    return None


# -- certificates -------------------------------------------------------------------


def certificate_problems(t: Tree, cert: Certificate) -> list[str]:
    """Every way the certificate fails; empty list means it proves optimality."""
    problems: list[str] = []
    try:
        _require_valid(t, cert.packing)
    except InvalidBroadcastError as exc:
        return [f"packing side ill-formed: {exc}"]
    try:
        _require_tokens(t, cert.cover)
    except VertexOutOfRangeError as exc:
        return [f"cover side ill-formed: {exc}"]
    w = weight(cert.packing)
    viol = packing_violation_witness(t, cert.packing)
    if viol is not None:
        u, a, bb = viol
        problems.append(f"packing violated: vertex {u} hears both {a} and {bb}")
    mviol = multicover_violation_witness(t, cert.cover)
    if mviol is not None:
        v, k, cnt = mviol
        problems.append(f"cover violated: ball({v}, {k}) holds {cnt} tokens, needs {k}")
    size = len(cert.cover.vertices)
    if w != size:
        problems.append(f"weight mismatch: packing weighs {w}, cover has {size} tokens")
    if cert.value != w:
        problems.append(f"value mismatch: certificate claims {cert.value}, packing weighs {w}")
    if cert.value != size:
        problems.append(f"value mismatch: certificate claims {cert.value}, cover has {size} tokens")
    return problems


def check_certificate(t: Tree, cert: Certificate) -> bool:
    """True iff packing feasible, cover feasible, and weights agree.

    Weak duality (every packing weight <= every layered cover size) then pins
    both optima to the shared value."""
    return not certificate_problems(t, cert)


# -- json -----------------------------------------------------------------------------


def broadcast_to_dict(b: Broadcast) -> dict:
    return {"powers": {str(v): int(p) for v, p in enumerate(b.powers) if p > 0}}


def broadcast_from_dict(data: dict, n: int) -> Broadcast:
    if not isinstance(data, dict) or "powers" not in data or not isinstance(data["powers"], dict):
        raise ParseError(f"broadcast payload must be {{'powers': {{id: power}}}}, got {data!r}")
    pairs = {}
    for key, val in data["powers"].items():
        try:
            v = int(key)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"broadcast vertex id {key!r} is not an integer") from exc
        if isinstance(val, bool) or not isinstance(val, int) or val < 0:
            raise ParseError(f"broadcast power for vertex {key} must be an int >= 0, got {val!r}")
        pairs[v] = val
    return Broadcast.from_pairs(n, pairs)


def tokens_to_dict(s: TokenSet) -> dict:
    return {"tokens": sorted(int(v) for v in s.vertices)}


def tokens_from_dict(data: dict, n: int) -> TokenSet:
    if not isinstance(data, dict) or "tokens" not in data or not isinstance(data["tokens"], list):
        raise ParseError(f"token payload must be {{'tokens': [ids]}}, got {data!r}")
    out = set()
    for v in data["tokens"]:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"token id must be an integer, got {v!r}")
        if not (0 <= v < n):
            raise VertexOutOfRangeError(f"token at vertex {v} outside 0..{n - 1}")
        out.add(v)
    return TokenSet(frozenset(out))


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "value": int(cert.value),
        "packing": broadcast_to_dict(cert.packing),
        "cover": tokens_to_dict(cert.cover),
    }


def certificate_from_dict(data: dict, n: int) -> Certificate:
    if not isinstance(data, dict):
        raise ParseError(f"certificate payload must be a JSON object, got {data!r}")
    for key in ("value", "packing", "cover"):
        if key not in data:
            raise ParseError(f"certificate missing {key!r}")
    val = data["value"]
    if isinstance(val, bool) or not isinstance(val, int):
        raise ParseError(f"certificate value must be an integer, got {val!r}")
    return Certificate(
        packing=broadcast_from_dict(data["packing"], n),
        cover=tokens_from_dict(data["cover"], n),
        value=val,
    )
