"""Barnette-Gruenbaum operations, trace replay and enumeration from K4.

The three basic operations on a 3-connected graph ``H``:

* (0,1): add a missing edge ``ab``.
* (1,2): subdivide an edge ``xy`` by a new vertex ``a`` and join ``a`` to some
  ``b`` other than ``x`` and ``y``.
* (2,3): subdivide two distinct edges by new vertices ``a`` and ``b`` and join
  ``a`` to ``b``.

New vertices take the next free labels (``order``, then ``order + 1``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, NamedTuple

from .canon import CanonicalCode, canonical_code
from .connectivity import is_3_connected
from .graph import (
    DuplicateEdgeError,
    Edge,
    Graph,
    GraphError,
    LoopError,
    VertexRangeError,
    add_edge,
    complete_graph,
    normalize_edge,
    subdivide_edge,
)
from .graph6 import graph6_encode
from .partition_matrix import MatrixIndex, OpKind, graph_index, op_index_delta

ENUM_BOUND = 8


class BgOpError(ValueError):
    pass


class NotThreeConnectedError(BgOpError):
    pass


class AttachmentError(BgOpError):
    pass


class SameEdgeError(BgOpError):
    pass


class TraceError(ValueError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"step {index} is invalid: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class BgStep:
    kind: OpKind
    args: tuple

    def __post_init__(self) -> None:
        ok = {
            OpKind.OP01: lambda a: len(a) == 2 and all(isinstance(x, int) for x in a),
            OpKind.OP12: lambda a: len(a) == 2 and len(a[0]) == 2 and isinstance(a[1], int),
            OpKind.OP23: lambda a: len(a) == 2 and len(a[0]) == 2 and len(a[1]) == 2,
        }[self.kind]
        if not ok(self.args):
            raise BgOpError(f"bad arguments {self.args!r} for {self.kind.value}")

    @classmethod
    def op01(cls, a: int, b: int) -> BgStep:
        return cls(OpKind.OP01, (a, b))

    @classmethod
    def op12(cls, edge: Edge, b: int) -> BgStep:
        return cls(OpKind.OP12, (tuple(edge), b))

    @classmethod
    def op23(cls, e1: Edge, e2: Edge) -> BgStep:
        return cls(OpKind.OP23, (tuple(e1), tuple(e2)))

    def apply(self, g: Graph, check: bool = True) -> Graph:
        if self.kind is OpKind.OP01:
            return apply_op01(g, *self.args, check=check)
        if self.kind is OpKind.OP12:
            return apply_op12(g, self.args[0], self.args[1], check=check)
        return apply_op23(g, self.args[0], self.args[1], check=check)

    def to_json(self) -> dict:
        if self.kind is OpKind.OP01:
            return {"op": self.kind.value, "pair": list(self.args)}
        if self.kind is OpKind.OP12:
            return {"op": self.kind.value, "edge": list(self.args[0]), "attach": self.args[1]}
        return {"op": self.kind.value, "edges": [list(self.args[0]), list(self.args[1])]}

    @classmethod
    def from_json(cls, obj: dict) -> BgStep:
        kind = OpKind(obj["op"])
        if kind is OpKind.OP01:
            return cls.op01(*obj["pair"])
        if kind is OpKind.OP12:
            return cls.op12(tuple(obj["edge"]), obj["attach"])
        e1, e2 = obj["edges"]
        return cls.op23(tuple(e1), tuple(e2))

    def __str__(self) -> str:
        return f"{self.kind.value}{self.args}"


@dataclass(frozen=True)
class BgTrace:
    steps: tuple[BgStep, ...] = ()

    def kinds(self) -> list[OpKind]:
        return [s.kind for s in self.steps]

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, obj: dict) -> BgTrace:
        return cls(tuple(BgStep.from_json(s) for s in obj["steps"]))


def _require_3_connected(g: Graph, check: bool) -> None:
    if check and not is_3_connected(g):
        raise NotThreeConnectedError("BG-operations apply only to 3-connected graphs")


def apply_op01(g: Graph, a: int, b: int, check: bool = True) -> Graph:
    _require_3_connected(g, check)
    return add_edge(g, a, b)


def apply_op12(g: Graph, xy: Edge, b: int, check: bool = True) -> Graph:
    _require_3_connected(g, check)
    x, y = normalize_edge(*xy)
    if not 0 <= b < g.order:
        raise VertexRangeError(f"attachment vertex {b} not in graph")
    if b in (x, y):
        raise AttachmentError(f"attachment vertex {b} is an endpoint of the subdivided edge")
    h, a = subdivide_edge(g, (x, y))
    return add_edge(h, a, b)


def apply_op23(g: Graph, e1: Edge, e2: Edge, check: bool = True) -> Graph:
    _require_3_connected(g, check)
    e1, e2 = normalize_edge(*e1), normalize_edge(*e2)
    if e1 == e2:
        raise SameEdgeError(f"the two subdivided edges must differ, got {e1} twice")
    h, a = subdivide_edge(g, e1)
    h, b = subdivide_edge(h, e2)
    return add_edge(h, a, b)


def legal_steps(g: Graph, kinds: frozenset[OpKind] = frozenset(OpKind)) -> Iterator[BgStep]:
    """Every legal basic step on ``g``, in lexicographic order of arguments per kind."""
    edges = g.sorted_edges()
    if OpKind.OP01 in kinds:
        for a, b in g.non_edges():
            yield BgStep.op01(a, b)
    if OpKind.OP12 in kinds:
        for e in edges:
            for b in range(g.order):
                if b not in e:
                    yield BgStep.op12(e, b)
    if OpKind.OP23 in kinds:
        for e1, e2 in combinations(edges, 2):
            yield BgStep.op23(e1, e2)


class Successor(NamedTuple):
    step: BgStep
    code: CanonicalCode
    graph: Graph


def successors(
    g: Graph, max_order: int | None = None, kinds: frozenset[OpKind] = frozenset(OpKind)
) -> list[Successor]:
    """Results of all legal basic steps, one per isomorphism class (first step wins)."""
    growth = {OpKind.OP01: 0, OpKind.OP12: 1, OpKind.OP23: 2}
    if max_order is not None:
        kinds = frozenset(k for k in kinds if g.order + growth[k] <= max_order)
    seen: dict[CanonicalCode, Successor] = {}
    for step in legal_steps(g, kinds):
        h = step.apply(g, check=False)
        code = canonical_code(h)
        if code not in seen:
            seen[code] = Successor(step, code, h)
    return list(seen.values())


def replay_trace(trace: BgTrace, check: bool = True) -> Graph:
    g = complete_graph(4)
    for k, step in enumerate(trace.steps):
        try:
            g = step.apply(g, check=check)
        except (BgOpError, GraphError) as exc:
            raise TraceError(k, exc) from exc
    return g


class Catalog:
    """Cell-indexed isomorphism classes of 3-connected graphs (canonical forms)."""

    def __init__(self, max_order: int, cells: dict[MatrixIndex, dict[CanonicalCode, Graph]]):
        self.max_order = max_order
        self.cells = cells

    def indices(self) -> list[MatrixIndex]:
        return sorted((idx for idx, b in self.cells.items() if b), key=MatrixIndex.column_major)

    def graphs_in(self, idx: MatrixIndex) -> list[Graph]:
        bucket = self.cells.get(MatrixIndex(*idx), {})
        return [bucket[c] for c in sorted(bucket)]

    def codes_in(self, idx: MatrixIndex) -> list[CanonicalCode]:
        return sorted(self.cells.get(MatrixIndex(*idx), {}))

    def graphs(self, order: int | None = None) -> Iterator[Graph]:
        for idx in self.indices():
            if order is None or idx.j + 4 == order:
                yield from self.graphs_in(idx)

    def codes(self, order: int | None = None) -> set[CanonicalCode]:
        return {c for idx in self.indices() if order is None or idx.j + 4 == order for c in self.cells[idx]}

    def counts_by_order(self) -> dict[int, int]:
        counts = {n: 0 for n in range(4, self.max_order + 1)}
        for idx in self.indices():
            counts[idx.j + 4] += len(self.cells[idx])
        return counts

    def __len__(self) -> int:
        return sum(len(b) for b in self.cells.values())

    def to_json(self) -> dict:
        return {
            "cells": [
                {"i": idx.i, "j": idx.j, "graphs": [graph6_encode(g) for g in self.graphs_in(idx)]}
                for idx in self.indices()
            ]
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _bfs(
    max_order: int,
    allow: Callable[[MatrixIndex], bool] | None = None,
    target: CanonicalCode | None = None,
) -> tuple[dict[MatrixIndex, dict[CanonicalCode, Graph]], dict[CanonicalCode, tuple[CanonicalCode, BgStep] | None]]:
    # cells are expanded column-major (j, then i): every operation moves to a
    # later column or, for (0,1), further down the same column
    root = complete_graph(4)
    root_code = canonical_code(root)
    cells: dict[MatrixIndex, dict[CanonicalCode, Graph]] = {MatrixIndex(0, 0): {root_code: root}}
    prov: dict[CanonicalCode, tuple[CanonicalCode, BgStep] | None] = {root_code: None}
    if target == root_code:
        return cells, prov
    for j in range(0, max_order - 3):
        i = None
        while True:
            rows = [idx.i for idx in cells if idx.j == j and (i is None or idx.i >= i)]
            if not rows:
                break
            i = min(rows)
            here = MatrixIndex(i, j)
            kinds = frozenset(
                k for k in OpKind
                if allow is None or allow(MatrixIndex(i + op_index_delta(k)[0], j + op_index_delta(k)[1]))
            )
            for code in sorted(cells[here]):
                parent = cells[here][code]
                for step, child_code, child in successors(parent, max_order=max_order, kinds=kinds):
                    di, dj = op_index_delta(step.kind)
                    bucket = cells.setdefault(MatrixIndex(i + di, j + dj), {})
                    if child_code not in bucket:
                        bucket[child_code] = child
                        prov[child_code] = (code, step)
                        if child_code == target:
                            return cells, prov
            i += 1
    return cells, prov


@lru_cache(maxsize=None)
def enumerate_3connected(max_order: int) -> Catalog:
    """Every 3-connected class of order ``<= max_order``, reached by BFS from K4.

    The returned catalog is cached and shared; treat it as read-only.
    """
    if max_order > ENUM_BOUND:
        raise ValueError(f"enumeration bound is {ENUM_BOUND}, got {max_order}")
    if max_order < 4:
        return Catalog(max_order, {})
    cells, _ = _bfs(max_order)
    canon = {idx: {c: c.to_graph() for c in bucket} for idx, bucket in cells.items() if bucket}
    return Catalog(max_order, canon)


def _can_reach(src: MatrixIndex, dst: MatrixIndex) -> bool:
    # dst - src must be a non-negative combination of (1,0), (-1,1), (-3,2);
    # with c (2,3)-steps the (0,1) count is di + dj + c, largest at c = dj // 2
    di, dj = dst.i - src.i, dst.j - src.j
    return dj >= 0 and di + dj + dj // 2 >= 0


def find_trace(g: Graph) -> BgTrace:
    """A trace from K4 whose replay is isomorphic to ``g`` (the BFS-first one)."""
    if not is_3_connected(g):
        raise NotThreeConnectedError("only 3-connected graphs have BG traces")
    if g.order > ENUM_BOUND:
        raise ValueError(f"enumeration bound is {ENUM_BOUND}, got order {g.order}")
    target_idx = graph_index(g)
    target = canonical_code(g)
    _, prov = _bfs(g.order, allow=lambda idx: _can_reach(idx, target_idx), target=target)
    if target not in prov:
        raise RuntimeError(f"no BG trace found for {g}")
    steps = []
    code = target
    while prov[code] is not None:
        parent, step = prov[code]
        steps.append(step)
        code = parent
    return BgTrace(tuple(reversed(steps)))
