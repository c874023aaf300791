import json

import pytest
from hypothesis import given, settings, strategies as st

from tricon.bg_ops import (
    AttachmentError,
    BgStep,
    BgTrace,
    NotThreeConnectedError,
    SameEdgeError,
    TraceError,
    apply_op01,
    apply_op12,
    apply_op23,
    enumerate_3connected,
    find_trace,
    legal_steps,
    replay_trace,
    successors,
)
from tricon.canon import are_isomorphic, canonical_code
from tricon.connectivity import is_3_connected, oracle_is_k_connected
from tricon.generate import all_graph_classes
from tricon.graph import DuplicateEdgeError, Graph, complete_graph, cycle_graph, degree_sequence, wheel_graph
from tricon.partition_matrix import MatrixIndex, OpKind, graph_index, op_index_delta

K4 = complete_graph(4)
PRISM = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
K33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_op01_errors():
    with pytest.raises(DuplicateEdgeError):
        apply_op01(K4, 0, 1)
    with pytest.raises(NotThreeConnectedError):
        apply_op01(cycle_graph(5), 0, 2)


def test_op01_closes_step_h2(step_h2, step_g2):
    # a and g are labels 0 and 5
    g2 = apply_op01(step_h2, 0, 5)
    assert g2 == step_g2
    assert graph_index(step_h2) == MatrixIndex(-3, 2)
    assert graph_index(g2) == MatrixIndex(-2, 2)


def test_op12_on_k4(step_h1):
    h1 = apply_op12(K4, (0, 1), 2)
    assert (h1.order, h1.size) == (5, 8)
    assert graph_index(h1) == MatrixIndex(-1, 1)
    assert are_isomorphic(h1, step_h1)


def test_op12_twice_gives_step_g1(step_h1, step_g1):
    # subdivide ab by f and join f to d
    g1 = apply_op12(step_h1, (0, 1), 3)
    assert are_isomorphic(g1, step_g1)
    assert graph_index(g1) == MatrixIndex(-2, 2)


@pytest.mark.parametrize("b", [0, 1])
def test_op12_attachment_must_avoid_endpoints(b):
    with pytest.raises(AttachmentError):
        apply_op12(K4, (0, 1), b)


def test_op23_on_k4(step_h2):
    # edges sharing a vertex give the prism
    h2 = apply_op23(K4, (0, 1), (0, 2))
    assert (h2.order, h2.size) == (6, 9)
    assert degree_sequence(h2).terms == (3,) * 6
    assert graph_index(h2) == MatrixIndex(-3, 2)
    assert are_isomorphic(h2, step_h2)
    assert are_isomorphic(apply_op23(K4, (0, 1), (2, 3)), K33)


def test_op23_same_edge():
    with pytest.raises(SameEdgeError):
        apply_op23(K4, (0, 1), (1, 0))


def test_k4_successors():
    succ = successors(K4)
    kinds = {s.step.kind for s in succ}
    assert OpKind.OP01 not in kinds
    # (2,3) yields the prism from adjacent edges and K3,3 from disjoint ones
    expected = {canonical_code(wheel_graph(5)), canonical_code(PRISM), canonical_code(K33)}
    assert {s.code for s in succ} == expected
    assert {s.code for s in succ if s.step.kind is OpKind.OP12} == {canonical_code(wheel_graph(5))}


def test_k5_has_no_op01_successor():
    assert all(s.step.kind is not OpKind.OP01 for s in successors(complete_graph(5), max_order=7))


def test_replay_examples(step_g2):
    assert replay_trace(BgTrace(())) == K4
    two = BgTrace((BgStep.op12((0, 1), 2), BgStep.op12((0, 2), 4)))
    g = replay_trace(two)
    assert (g.order, g.size) == (6, 10) and graph_index(g) == MatrixIndex(-2, 2)
    # same class as the (2,3)-then-(0,1) route
    assert are_isomorphic(g, step_g2)
    bottom = replay_trace(BgTrace((BgStep.op23((0, 1), (0, 2)), BgStep.op01(1, 5))))
    assert (bottom.order, bottom.size) == (6, 10)
    assert are_isomorphic(bottom, step_g2)


def test_replay_reports_failing_step():
    bad = BgTrace((BgStep.op12((0, 1), 2), BgStep.op01(0, 2)))
    with pytest.raises(TraceError) as info:
        replay_trace(bad)
    assert info.value.index == 1


def test_find_trace_k4():
    assert find_trace(K4).steps == ()


def test_find_trace_step_g2(step_g2):
    trace = find_trace(step_g2)
    assert len(trace.steps) == 2
    assert are_isomorphic(replay_trace(trace), step_g2)
    # the route through H2 also reaches it
    h2 = apply_op23(K4, (0, 1), (0, 2))
    assert any(are_isomorphic(apply_op01(h2, a, b), step_g2) for a, b in h2.non_edges())


def test_find_trace_step_g1(step_g1):
    trace = find_trace(step_g1)
    assert trace.kinds() == [OpKind.OP12, OpKind.OP12]
    assert are_isomorphic(replay_trace(trace), step_g1)
    target = canonical_code(step_g1)
    for first in successors(K4, kinds=frozenset({OpKind.OP23})):
        for second in successors(first.graph, kinds=frozenset({OpKind.OP01})):
            assert second.code != target


def test_find_trace_rejects_cycle():
    with pytest.raises(NotThreeConnectedError):
        find_trace(cycle_graph(5))


def test_enumeration_counts_match_oracle():
    catalog = enumerate_3connected(6)
    for n in (4, 5, 6):
        oracle = {canonical_code(g) for g in all_graph_classes(n) if oracle_is_k_connected(g, 3)}
        assert catalog.codes(n) == oracle
    assert catalog.counts_by_order() == {4: 1, 5: 3, 6: 17}


def test_catalog_json_is_deterministic():
    a = enumerate_3connected(6).dumps()
    assert a == enumerate_3connected(6).dumps()
    cells = json.loads(a)["cells"]
    assert {"i": 0, "j": 0, "graphs": ["C~"]} in cells


def test_trace_json_round_trip():
    trace = BgTrace((BgStep.op23((0, 1), (2, 3)), BgStep.op01(0, 1), BgStep.op12((1, 4), 3)))
    assert BgTrace.from_json(json.loads(json.dumps(trace.to_json()))) == trace


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_steps_preserve_3_connectivity_and_deltas(data):
    g = data.draw(st.sampled_from(list(enumerate_3connected(6).graphs())))
    steps = list(legal_steps(g))
    step = data.draw(st.sampled_from(steps))
    h = step.apply(g)
    assert is_3_connected(h)
    di, dj = op_index_delta(step.kind)
    i, j = graph_index(g)
    assert graph_index(h) == MatrixIndex(i + di, j + dj)
    dn = {OpKind.OP01: (0, 1), OpKind.OP12: (1, 2), OpKind.OP23: (2, 3)}[step.kind]
    assert (h.order - g.order, h.size - g.size) == dn
