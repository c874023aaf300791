from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from tricon.connectivity import (
    find_small_cut,
    is_3_connected,
    is_connected,
    is_k_connected,
    max_disjoint_paths,
    oracle_connectivity,
    oracle_is_k_connected,
    vertex_connectivity,
)
from tricon.degree_sequences import boundary_witnesses
from tricon.generate import all_graph_classes
from tricon.graph import (
    Graph,
    add_edge,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    remove_edge,
    wheel_graph,
)

from test_graph import graphs


def test_is_connected():
    assert is_connected(complete_graph(4))
    assert not is_connected(disjoint_union(complete_graph(3), complete_graph(3)))
    assert is_connected(empty_graph(1))


def test_paths_in_k4():
    w = max_disjoint_paths(complete_graph(4), 0, 3)
    assert len(w) == 3 and w.is_valid(complete_graph(4))


def test_paths_boundary_g1():
    g1, _ = boundary_witnesses(6)
    # v_n is the last vertex, v_i = label 2 sits on the far side of the cut
    w = max_disjoint_paths(g1, 5, 2)
    assert len(w) == 2 and w.is_valid(g1)


def test_paths_in_5_cycle():
    c5 = cycle_graph(5)
    w = max_disjoint_paths(c5, 0, 2)
    assert len(w) == 2 and w.is_valid(c5)


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete_graph(4)) == 3
    g1, g2 = boundary_witnesses(7)
    assert vertex_connectivity(g1) == 2
    assert vertex_connectivity(g2) == 3


def test_boundary_n6_g2_is_only_2_connected():
    # verified value: every realization of 5,5,3,3,3,3 has the cut {v1, v2}
    _, g2 = boundary_witnesses(6)
    assert vertex_connectivity(g2) == 2
    assert find_small_cut(g2, 2).vertices == (0, 1)


def test_is_3_connected_examples():
    assert is_3_connected(complete_graph(4))
    assert not is_3_connected(remove_edge(complete_graph(4), 0, 1))
    assert is_3_connected(wheel_graph(8))
    assert oracle_is_k_connected(wheel_graph(8), 3)


def test_find_small_cut_examples():
    g1, _ = boundary_witnesses(6)
    cut = find_small_cut(g1, 2)
    assert cut.vertices == (0, 1) and cut.is_valid(g1)
    assert find_small_cut(complete_graph(5), 3) is None
    assert find_small_cut(path_graph(3), 1).vertices == (1,)


def test_oracle_examples():
    assert oracle_connectivity(complete_graph(4)) == 3
    assert oracle_connectivity(disjoint_union(path_graph(2), path_graph(2))) == 0


def test_order_guard():
    with pytest.raises(ValueError):
        vertex_connectivity(empty_graph(1))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_engine_matches_oracle_on_all_classes(n):
    for g in all_graph_classes(n):
        k = vertex_connectivity(g)
        assert k == oracle_connectivity(g)
        for kk in range(1, 4):
            assert is_k_connected(g, kk) == (k >= kk)
        cut = find_small_cut(g, k)
        if k < n - 1:
            assert cut is not None and len(cut.vertices) == k and cut.is_valid(g)


def brute_separator(g, u, v):
    """Smallest vertex set avoiding u, v whose removal cuts u from v."""
    others = [w for w in range(g.order) if w not in (u, v)]
    for size in range(len(others) + 1):
        for cut in combinations(others, size):
            seen, stack = {u}, [u]
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y not in seen and y not in cut:
                        seen.add(y)
                        stack.append(y)
            if v not in seen:
                return size
    raise AssertionError("adjacent pair")


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=8), st.data())
def test_menger_witnesses_valid(g, data):
    if g.order < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, g.order - 1), min_size=2, max_size=2, unique=True))
    w = max_disjoint_paths(g, u, v)
    assert w.is_valid(g)
    if not g.has_edge(u, v):
        assert len(w) == brute_separator(g, u, v)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=8), st.data())
def test_adding_an_edge_never_lowers_connectivity(g, data):
    missing = g.non_edges()
    if g.order < 2 or not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert vertex_connectivity(add_edge(g, u, v)) >= vertex_connectivity(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=8))
def test_is_3_connected_agrees_with_oracle(g):
    assert is_3_connected(g) == oracle_is_k_connected(g, 3)
