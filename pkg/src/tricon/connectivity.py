"""Vertex connectivity via unit-capacity flows, with an exhaustive oracle.

The flow network splits every vertex ``x`` into ``x_in -> x_out`` with
capacity one (the two terminals are not split). Arc ``x_out -> y_in`` exists
for every edge ``xy``. A maximum flow from ``u`` to ``v`` decomposes into
internally disjoint paths (Menger).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

ORACLE_BOUND = 10


@dataclass(frozen=True)
class PathsWitness:
    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    def is_valid(self, g: Graph) -> bool:
        """Check each path is a real u-v path and the family is internally disjoint."""
        seen: set[int] = set()
        for p in self.paths:
            if len(p) < 2 or p[0] != self.u or p[-1] != self.v or len(set(p)) != len(p):
                return False
            if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
                return False
            inner = set(p[1:-1])
            if inner & seen:
                return False
            seen |= inner
        return len(set(self.paths)) == len(self.paths)


@dataclass(frozen=True)
class CutWitness:
    vertices: tuple[int, ...]

    def is_valid(self, g: Graph) -> bool:
        rest = g.induced_without(self.vertices)
        return rest.order >= 2 and not is_connected(rest)


def _reach(adj: tuple[int, ...], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected_without(g: Graph, removed_mask: int) -> bool:
    allowed = ((1 << g.order) - 1) & ~removed_mask
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return _reach(g.adj, start, allowed) == allowed


def is_connected(g: Graph) -> bool:
    return _connected_without(g, 0)


def _max_flow_paths(g: Graph, u: int, v: int, skip_direct: bool, limit: int | None) -> list[tuple[int, ...]]:
    n = g.order
    # node ids: x_in = 2x, x_out = 2x + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n
    for x in range(n):
        arc(2 * x, 2 * x + 1, big if x in (u, v) else 1)
    for x, y in g.sorted_edges():
        if skip_direct and {x, y} == {u, v}:
            continue
        for a, b in ((x, y), (y, x)):
            if b == u or a == v:
                continue
            arc(2 * a + 1, 2 * b, 1)

    source, sink = 2 * u + 1, 2 * v
    flow = 0
    while limit is None or flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    # decompose: an edge arc carries flow when its reverse residual is positive
    used = {}
    for x, y in g.sorted_edges():
        for a, b in ((x, y), (y, x)):
            key = (2 * a + 1, 2 * b)
            if key in cap and cap[(2 * b, 2 * a + 1)] > 0 and cap[key] == 0:
                used.setdefault(a, []).append(b)
    paths = []
    for _ in range(flow):
        path = [u]
        x = u
        while x != v:
            y = used[x].pop(0)
            path.append(y)
            x = y
        paths.append(tuple(path))
    return paths


def max_disjoint_paths(g: Graph, u: int, v: int, limit: int | None = None) -> PathsWitness:
    """Maximum family of internally disjoint u-v paths.

    For adjacent ``u, v`` the direct edge counts as one path and the rest are
    found with that edge removed. ``limit`` stops after that many paths.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    direct = g.has_edge(u, v)
    if direct and limit is not None:
        limit -= 1
    paths = _max_flow_paths(g, u, v, direct, limit) if limit is None or limit > 0 else []
    if direct:
        paths = [(u, v)] + paths
    return PathsWitness(u, v, tuple(sorted(paths, key=lambda p: (len(p), p))))


def vertex_connectivity(g: Graph) -> int:
    """Minimum over non-adjacent pairs of the disjoint-path count; ``n - 1`` for complete graphs."""
    n = g.order
    if n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    best = n - 1
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v):
            continue
        k = len(max_disjoint_paths(g, u, v, limit=best))
        best = min(best, k)
        if best == 0:
            break
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Decide ``kappa(g) >= k`` with capped flows.

    Uses the Esfahanian-Hakimi pair reduction: with ``x`` a vertex of minimum
    degree, it suffices to test pairs ``(x, w)`` for non-neighbours ``w`` and
    non-adjacent pairs of neighbours of ``x``.
    """
    n = g.order
    if n < k + 1:
        return False
    degrees = g.degrees()
    if min(degrees) < k:
        return False
    if k <= 0:
        return True
    x = min(range(n), key=lambda w: (degrees[w], w))
    nbrs = g.neighbors(x)
    pairs = [(x, w) for w in range(n) if w != x and not g.has_edge(x, w)]
    pairs += [(a, b) for a, b in combinations(nbrs, 2) if not g.has_edge(a, b)]
    return all(len(max_disjoint_paths(g, a, b, limit=k)) >= k for a, b in pairs)


def is_3_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


def find_small_cut(g: Graph, limit: int) -> CutWitness | None:
    """Smallest separating set of size ``<= limit``; lexicographically first on ties."""
    n = g.order
    for size in range(0, min(limit, n - 2) + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for w in combo:
                mask |= 1 << w
            if not _connected_without(g, mask):
                return CutWitness(combo)
    return None


def oracle_connectivity(g: Graph) -> int:
    """Exhaustive separator search: the size of the first separating subset found."""
    n = g.order
    if n > ORACLE_BOUND:
        raise ValueError(f"order {n} exceeds oracle bound {ORACLE_BOUND}")
    for size in range(0, n - 1):
        for combo in combinations(range(n), size):
            rest = g.induced_without(combo)
            if not _bfs_connected(rest):
                return size
    return max(n - 1, 0)


def _bfs_connected(g: Graph) -> bool:
    # deliberately plain adjacency-list BFS, independent of the bitmask helpers
    if g.order == 0:
        return True
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.order)}
    for a, b in g.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == g.order


def oracle_is_k_connected(g: Graph, k: int) -> bool:
    """Exhaustive check that no set of fewer than ``k`` vertices separates ``g``."""
    n = g.order
    if n > ORACLE_BOUND:
        raise ValueError(f"order {n} exceeds oracle bound {ORACLE_BOUND}")
    if n < k + 1:
        return False
    for size in range(0, k):
        for combo in combinations(range(n), size):
            if not _bfs_connected(g.induced_without(combo)):
                return False
    return True
