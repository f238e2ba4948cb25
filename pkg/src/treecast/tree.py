"""Tree structure with hop-distance queries.

Vertices are dense integer ids 0..n-1 and edges are unordered pairs. Distances
are unweighted hop counts. Two storage regimes, chosen by size:

* n <= MATRIX_MAX: the full n x n distance matrix (int16) is computed once and
  cached; predicates and oracles index it directly.
* larger trees: no matrix is ever materialised. Single rows come from BFS on
  demand and the model-level checks switch to linear-time algorithms that only
  walk the adjacency structure.

Edge-list text format: first line n, then n-1 lines "u v" with 0-based ids.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import NotATreeError, ParseError, TooLargeError, VertexOutOfRangeError

# Above this the n x n matrix is not worth its memory; checks go linear.
MATRIX_MAX = 4096
# Pure-Python all-pairs BFS is fine up to here; beyond, scipy does the sweep.
_PURE_ALL_PAIRS_MAX = 256
# Hard refusal for an explicit dist_matrix() call on a matrix-free tree.
_MATRIX_HARD_MAX = 16384


class Tree:
    """Immutable unweighted tree on vertices 0..n-1."""

    __slots__ = (
        "n",
        "_adj",
        "_eu",
        "_ev",
        "_dist",
        "_ecc",
        "_end_a",
        "_end_b",
        "_row_cache",
    )

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 2:
            raise NotATreeError(f"need at least 2 vertices, got n={n}")
        pairs = []
        for u, v in edges:
            u = int(u)
            v = int(v)
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            pairs.append((u, v))
        if len(pairs) != n - 1:
            raise NotATreeError(f"a tree on {n} vertices has {n - 1} edges, got {len(pairs)}")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        # connectivity check; n-1 edges + connected == tree
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        if count != n:
            raise NotATreeError(f"graph is disconnected ({count} of {n} vertices reachable)")
        self.n = n
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._eu = np.fromiter((p[0] for p in pairs), dtype=np.int32, count=n - 1)
        self._ev = np.fromiter((p[1] for p in pairs), dtype=np.int32, count=n - 1)
        self._dist: np.ndarray | None = None
        self._ecc: np.ndarray | None = None
        self._end_a = -1
        self._end_b = -1
        self._row_cache: dict[int, np.ndarray] = {}

    # -- basic structure -------------------------------------------------

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency lists; neighbours sorted ascending."""
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def leaves(self) -> tuple[int, ...]:
        """All vertices of degree 1, ascending."""
        return tuple(v for v in range(self.n) if len(self._adj[v]) == 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in zip(self._eu, self._ev)]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")

    # -- distances --------------------------------------------------------

    @property
    def uses_matrix(self) -> bool:
        """Whether model checks should go through the cached distance matrix."""
        return self.n <= MATRIX_MAX

    def dist_matrix(self) -> np.ndarray:
        """Full n x n hop-distance matrix (int16), cached after first call."""
        if self._dist is None:
            if self.n > _MATRIX_HARD_MAX:
                raise TooLargeError(
                    f"refusing to build a {self.n}x{self.n} distance matrix; "
                    "use dist_row / the linear checks instead"
                )
            self._dist = self._compute_matrix()
        return self._dist

    def _compute_matrix(self) -> np.ndarray:
        from . import kernels

        if kernels.COMPILED or self.n <= _PURE_ALL_PAIRS_MAX:
            return kernels.bfs_all_pairs(self.n, self._eu, self._ev)
        # pure-Python fallback on a mid-sized tree: let scipy do the BFS sweep
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import shortest_path

        n = self.n
        row = np.concatenate([self._eu, self._ev])
        col = np.concatenate([self._ev, self._eu])
        data = np.ones(len(row), dtype=np.int8)
        g = csr_matrix((data, (row, col)), shape=(n, n))
        d = shortest_path(g, method="D", unweighted=True)
        return d.astype(np.int16)

    def dist_row(self, v: int) -> np.ndarray:
        """Distances from v to every vertex, as an int16 vector."""
        self._check_vertex(v)
        if self._dist is not None:
            return self._dist[v]
        if self.uses_matrix:
            return self.dist_matrix()[v]
        if v in self._row_cache:
            return self._row_cache[v]
        row = self._bfs_row(v)
        if len(self._row_cache) < 8:  # keep a few hot rows (diametral endpoints)
            self._row_cache[v] = row
        return row

    def _bfs_row(self, src: int) -> np.ndarray:
        n = self.n
        dist = np.full(n, -1, dtype=np.int16)
        dist_l = [-1] * n
        dist_l[src] = 0
        q = deque([src])
        adj = self._adj
        while q:
            x = q.popleft()
            dx = dist_l[x] + 1
            for y in adj[x]:
                if dist_l[y] < 0:
                    dist_l[y] = dx
                    q.append(y)
        dist[:] = dist_l
        return dist

    def dist(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return int(self.dist_row(u)[v])

    def eccentricities(self) -> np.ndarray:
        """Vector of eccentricities (int16).

        Matrix-free path uses the standard tree fact: with (a, b) a diametral
        pair found by double BFS, ecc(v) = max(d(v,a), d(v,b)) for every v.
        """
        if self._ecc is None:
            if self.uses_matrix:
                d = self.dist_matrix()
                self._ecc = d.max(axis=1).astype(np.int16)
                row0 = d[0]
                a = int(np.argmax(row0))
                b = int(np.argmax(d[a]))
                self._end_a, self._end_b = a, b
            else:
                row0 = self._bfs_row(0)
                a = int(np.argmax(row0))
                ra = self.dist_row(a)
                b = int(np.argmax(ra))
                rb = self.dist_row(b)
                self._ecc = np.maximum(ra, rb)
                self._end_a, self._end_b = a, b
        return self._ecc

    def eccentricity(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.eccentricities()[v])

    def diameter(self) -> int:
        return int(self.eccentricities().max())

    def diametral_pair(self) -> tuple[int, int]:
        """A fixed diametral pair (found by double BFS from vertex 0)."""
        self.eccentricities()
        return self._end_a, self._end_b

    def diametral_path(self) -> tuple[int, ...]:
        """Canonical diametral path, listed from its smaller-id endpoint."""
        a, b = self.diametral_pair()
        # parents of a BFS tree rooted at a, then walk back from b
        n = self.n
        parent = [-1] * n
        parent[a] = a
        q = deque([a])
        adj = self._adj
        while q:
            x = q.popleft()
            for y in adj[x]:
                if parent[y] < 0:
                    parent[y] = x
                    q.append(y)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        if path[0] > path[-1]:
            path.reverse()
        return tuple(path)

    def ball(self, v: int, r: int) -> frozenset[int]:
        """All vertices within hop distance r of v."""
        if r < 0:
            return frozenset()
        row = self.dist_row(v)
        return frozenset(int(x) for x in np.flatnonzero(row <= r))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Tree(n={self.n})"


def build_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validating constructor; raises NotATreeError / VertexOutOfRangeError."""
    return Tree(n, edges)


# -- edge-list text io ----------------------------------------------------


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format: line "n", then n-1 lines "u v"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    if len(lines) - 1 != max(n - 1, 0):
        raise ParseError(f"expected {n - 1} edge lines for n={n}, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be two ids, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer vertex id in line {ln!r}") from exc
    return Tree(n, edges)


def format_edge_list(tree: Tree) -> str:
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Tree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(tree: Tree, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(tree))


def is_caterpillar(tree: Tree) -> bool:
    """True when the non-leaf vertices induce a path (or nothing).

    In a tree the internal vertices always induce a subtree, so it is enough
    to check that no internal vertex has 3 or more internal neighbours.
    """
    internal = [v for v in range(tree.n) if tree.degree(v) >= 2]
    if len(internal) <= 1:
        return True
    mark = bytearray(tree.n)
    for v in internal:
        mark[v] = 1
    for v in internal:
        if sum(1 for w in tree.adj[v] if mark[w]) > 2:
            return False
    return True


def random_tree(n: int, rng) -> Tree:
    """Uniform random labelled tree on n vertices via a random parent walk
    decoded from a Pruefer-style sequence."""
    if n < 2:
        raise NotATreeError(f"need at least 2 vertices, got n={n}")
    if n == 2:
        return Tree(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Tree(n, edges)
