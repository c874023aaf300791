"""Finite simple undirected graphs as immutable values.

Vertices are the labels ``0..order-1``. The edge set is the defining datum;
per-vertex adjacency bit rows are mirrored for constant-time adjacency tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph edits and constructions."""


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise LoopError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[Edge]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise GraphError("order must be non-negative")
        rows = [0] * self.order
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (0 <= u < v < self.order):
                raise VertexRangeError(f"edge ({u}, {v}) is not normalized or out of range for order {self.order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from unnormalized pairs; duplicate pairs are rejected."""
        es: set[Edge] = set()
        for u, v in edges:
            e = normalize_edge(u, v)
            if not (0 <= e[0] and e[1] < order):
                raise VertexRangeError(f"edge {e} out of range for order {order}")
            if e in es:
                raise DuplicateEdgeError(f"edge {e} listed twice")
            es.add(e)
        return cls(order, frozenset(es))

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [w for w in range(self.order) if row >> w & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.order), 2) if not self.adj[u] >> v & 1]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling must be a permutation of the vertex labels")
        return Graph(self.order, frozenset(normalize_edge(perm[u], perm[v]) for u, v in self.edges))

    def induced_without(self, removed: Iterable[int]) -> Graph:
        """Delete vertices and relabel the survivors in increasing order."""
        gone = set(removed)
        keep = [v for v in range(self.order) if v not in gone]
        index = {v: k for k, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[u], index[v]) for u, v in self.edges if u not in gone and v not in gone),
        )

    def __str__(self) -> str:
        return f"Graph(order={self.order}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class DegreeSequence:
    """A list of degrees; valid when non-increasing with every term >= 1."""

    terms: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        """Parse ``"3,3,3,3"``; terms are sorted into non-increasing order."""
        parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
        if not parts:
            raise ValueError("empty degree sequence")
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def of(cls, *terms: int) -> DegreeSequence:
        return cls(tuple(terms))

    @property
    def is_valid(self) -> bool:
        t = self.terms
        return len(t) > 0 and all(x >= 1 for x in t) and all(t[k] >= t[k + 1] for k in range(len(t) - 1))

    @property
    def max_degree(self) -> int:
        return self.terms[0]

    @property
    def min_degree(self) -> int:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.terms)) + "}"


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def wheel_graph(n: int) -> Graph:
    """Hub ``0`` joined to a cycle on ``1..n-1``."""
    if n < 4:
        raise GraphError("wheel needs at least four vertices")
    rim = [(k, k % (n - 1) + 1) for k in range(1, n)]
    return Graph.from_edges(n, [(0, k) for k in range(1, n)] + rim)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Non-increasing degrees of ``g``. Check ``.is_valid`` for isolated vertices."""
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    e = normalize_edge(u, v)
    if not (0 <= e[0] and e[1] < g.order):
        raise VertexRangeError(f"edge {e} out of range for order {g.order}")
    if e in g.edges:
        raise DuplicateEdgeError(f"edge {e} already present")
    return Graph(g.order, g.edges | {e})


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    e = normalize_edge(u, v)
    if e not in g.edges:
        raise MissingEdgeError(f"edge {e} not present")
    return Graph(g.order, g.edges - {e})


def subdivide_edge(g: Graph, e: Sequence[int]) -> tuple[Graph, int]:
    """Replace edge ``uw`` by a path ``u-x-w`` through a new vertex ``x = order``."""
    u, w = normalize_edge(*e)
    if (u, w) not in g.edges:
        raise MissingEdgeError(f"edge {(u, w)} not present")
    x = g.order
    return Graph(g.order + 1, (g.edges - {(u, w)}) | {(u, x), (w, x)}), x


def complement(g: Graph) -> Graph:
    return Graph(g.order, frozenset(g.non_edges()))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.edges | {(u + shift, v + shift) for u, v in h.edges})
