"""Exhaustive generation of graph isomorphism classes by edge augmentation.

Every graph with ``k + 1`` edges arises from some graph with ``k`` edges by
adding one edge, so closing each level under single-edge additions and
deduplicating by canonical code yields every class exactly once. This route
knows nothing about BG-operations and serves as the independent oracle for
the BG enumerator.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from .canon import CanonicalCode, canonical_code
from .graph import Graph, complement, empty_graph

Level = dict[CanonicalCode, Graph]


def _dominated(degrees: list[int], cap: Sequence[int]) -> bool:
    return all(d <= c for d, c in zip(sorted(degrees, reverse=True), cap))


def graph_classes_by_size(n: int, max_edges: int, degree_cap: Sequence[int] | None = None) -> list[Level]:
    """Classes of order ``n`` with ``0..max_edges`` edges, indexed by edge count.

    With ``degree_cap`` (non-increasing, length ``n``) only graphs whose sorted
    degrees are termwise at most the cap are kept. The restriction survives
    edge deletion, so pruning during augmentation loses nothing.
    """
    cap = None if degree_cap is None else sorted(degree_cap, reverse=True)
    max_edges = min(max_edges, comb(n, 2))
    start = empty_graph(n)
    levels: list[Level] = [{canonical_code(start): start}]
    for _ in range(max_edges):
        nxt: Level = {}
        for g in levels[-1].values():
            for u, v in g.non_edges():
                if cap is not None:
                    degs = g.degrees()
                    degs[u] += 1
                    degs[v] += 1
                    if not _dominated(degs, cap):
                        continue
                h = Graph(n, g.edges | {(u, v)})
                code = canonical_code(h)
                if code not in nxt:
                    nxt[code] = code.to_graph()
        levels.append(nxt)
        if not nxt:
            break
    while len(levels) < max_edges + 1:
        levels.append({})
    return levels


@lru_cache(maxsize=None)
def all_graph_classes(n: int) -> tuple[Graph, ...]:
    """Every isomorphism class of order ``n``, as canonical forms sorted by code.

    Only the sparse half is generated; dense classes are complements.
    """
    total = comb(n, 2)
    half = total // 2
    levels = graph_classes_by_size(n, half)
    found: dict[CanonicalCode, Graph] = {}
    for level in levels:
        for code, g in level.items():
            found[code] = g
            h = complement(g)
            hc = canonical_code(h)
            found[hc] = hc.to_graph()
    return tuple(found[c] for c in sorted(found))


def graphs_with_min_edges(n: int, min_edges: int) -> list[Graph]:
    """All classes of order ``n`` with at least ``min_edges`` edges (via complements)."""
    budget = comb(n, 2) - max(min_edges, 0)
    if budget < 0:
        return []
    out: dict[CanonicalCode, Graph] = {}
    for level in graph_classes_by_size(n, budget):
        for g in level.values():
            h = complement(g)
            code = canonical_code(h)
            out[code] = code.to_graph()
    return [out[c] for c in sorted(out)]
