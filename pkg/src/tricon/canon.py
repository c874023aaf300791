"""Canonical codes for small graphs.

A code is the minimum, over a relabeling-invariant family of vertex orders,
of the upper-triangle adjacency bits read column by column (the graph6 bit
order). The family is the set of leaves of an individualization-refinement
search tree: the vertex partition is refined by neighbour counts (degrees
first), and the first non-singleton cell is split by individualizing each of
its vertices in turn. Branches that an already-discovered automorphism maps
onto an explored branch are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .graph import Graph

MAX_CANON_ORDER = 10


class OrderTooLargeError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class CanonicalCode:
    order: int
    bits: int

    def __lt__(self, other: CanonicalCode) -> bool:
        return (self.order, self.bits) < (other.order, other.bits)

    def bitstring(self) -> str:
        width = self.order * (self.order - 1) // 2
        return format(self.bits, f"0{width}b") if width else ""

    def to_graph(self) -> Graph:
        """The canonical representative whose labels realise this code."""
        edges = []
        width = self.order * (self.order - 1) // 2
        k = width - 1
        for j in range(1, self.order):
            for i in range(j):
                if self.bits >> k & 1:
                    edges.append((i, j))
                k -= 1
        return Graph(self.order, frozenset(edges))


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_rep(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best: int | None = None
        self.best_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def run(self, cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(self.adj, cells)
        pos = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if pos is None:
            self._leaf([c[0] for c in cells])
            return
        target = cells[pos]
        explored: list[int] = []
        for v in target:
            if explored and self._same_orbit(fixed, v, explored):
                continue
            explored.append(v)
            rest = [w for w in target if w != v]
            self.run(cells[:pos] + [[v], rest] + cells[pos + 1:], fixed + [v])

    def _same_orbit(self, fixed: list[int], v: int, explored: list[int]) -> bool:
        gens = [g for g in self.autos if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        parent = list(range(self.n))
        for g in gens:
            for x in range(self.n):
                a, b = _orbit_rep(parent, x), _orbit_rep(parent, g[x])
                if a != b:
                    parent[a] = b
        rv = _orbit_rep(parent, v)
        return any(_orbit_rep(parent, w) == rv for w in explored)

    def _leaf(self, order: list[int]) -> None:
        code = _leaf_code(self.adj, order)
        if self.best is None or code < self.best:
            self.best, self.best_order = code, order
        elif code == self.best:
            gamma = [0] * self.n
            for a, b in zip(order, self.best_order):
                gamma[a] = b
            if any(gamma[x] != x for x in range(self.n)):
                self.autos.append(tuple(gamma))


def canonical_labeling(g: Graph, bound: int = MAX_CANON_ORDER) -> tuple[CanonicalCode, list[int]]:
    """Return the code and the vertex order realising it.

    ``order[k]`` is the original label placed at canonical position ``k``.
    """
    if g.order > bound:
        raise OrderTooLargeError(f"order {g.order} exceeds canonicalization bound {bound}")
    if g.order == 0:
        return CanonicalCode(0, 0), []
    search = _Search(g.adj)
    search.run([list(range(g.order))], [])
    assert search.best is not None
    return CanonicalCode(g.order, search.best), search.best_order


def canonical_code(g: Graph, bound: int = MAX_CANON_ORDER) -> CanonicalCode:
    return canonical_labeling(g, bound)[0]


def canonical_form(g: Graph, bound: int = MAX_CANON_ORDER) -> Graph:
    return canonical_code(g, bound).to_graph()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    return canonical_code(g) == canonical_code(h)
