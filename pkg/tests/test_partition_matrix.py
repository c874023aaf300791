from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tricon.bg_ops import enumerate_3connected
from tricon.canon import canonical_code
from tricon.graph import DegreeSequence, complete_graph
from tricon.partition_matrix import (
    AssociatedPair,
    MatrixIndex,
    OpKind,
    associated_pair,
    cell_parameters,
    column_nonempty_count,
    entry_index,
    enumerate_cell,
    graph_index,
    nonempty_row_range,
    op_index_delta,
)


@pytest.mark.parametrize("text, phi, eps", [("3,3,3,3", 4, 6), ("4,4,4,4,4", 5, 10), ("3,3,3,3,3", 5, Fraction(15, 2))])
def test_associated_pair(text, phi, eps):
    p = associated_pair(DegreeSequence.parse(text))
    assert p.phi == phi and p.epsilon == eps
    assert p.epsilon_is_integral == (isinstance(eps, int))


@pytest.mark.parametrize("n, idx", [(4, (0, 0)), (5, (1, 1)), (6, (3, 2))])
def test_complete_graph_cells(n, idx):
    assert graph_index(complete_graph(n)) == MatrixIndex(*idx)
    assert entry_index(AssociatedPair(n, n * (n - 1))) == MatrixIndex(*idx)


def test_entry_index_rejects_half_edges():
    with pytest.raises(ValueError):
        entry_index(AssociatedPair(5, 15))


def test_cell_parameters():
    assert cell_parameters(MatrixIndex(0, 0)) == (4, 6)
    assert cell_parameters(MatrixIndex(-2, 2)) == (6, 10)


@pytest.mark.parametrize("j, rng, count", [(0, (0, 0), 1), (1, (-1, 1), 3), (2, (-3, 3), 7), (3, (-4, 6), 11)])
def test_row_ranges(j, rng, count):
    assert nonempty_row_range(j) == rng
    assert column_nonempty_count(j) == count


def test_op_deltas():
    assert op_index_delta(OpKind.OP01) == (1, 0)
    assert op_index_delta(OpKind.OP12) == (-1, 1)
    assert op_index_delta(OpKind.OP23) == (-3, 2)


def test_enumerate_cell_examples(step_g1, step_g2):
    catalog = enumerate_3connected(7)
    assert enumerate_cell(MatrixIndex(0, 0), catalog) == [complete_graph(4)]
    cell = {canonical_code(g) for g in enumerate_cell(MatrixIndex(-2, 2), catalog)}
    assert len(cell) == 3
    assert {canonical_code(step_g1), canonical_code(step_g2)} <= cell
    assert canonical_code(step_g1) != canonical_code(step_g2)
    assert enumerate_cell(MatrixIndex(9, 1), catalog) == []
    assert enumerate_cell(MatrixIndex(-2, 1), catalog) == []


def test_enumerate_cell_beyond_catalog():
    with pytest.raises(ValueError):
        enumerate_cell(MatrixIndex(0, 4), enumerate_3connected(7))


def test_cells_match_closed_form_ranges():
    catalog = enumerate_3connected(7)
    for j in range(4):
        rows = sorted(idx.i for idx in catalog.indices() if idx.j == j)
        lo, hi = nonempty_row_range(j)
        assert rows == list(range(lo, hi + 1))


@given(st.integers(-30, 30), st.integers(0, 20))
def test_index_round_trip(i, j):
    order, size = cell_parameters(MatrixIndex(i, j))
    assert entry_index(AssociatedPair(order, 2 * size)) == MatrixIndex(i, j)
