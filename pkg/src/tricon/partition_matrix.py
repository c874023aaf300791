"""Index arithmetic for the partition matrix of 3-connected graphs.

Cell ``(i, j)`` holds the 3-connected graphs with ``j + 4`` vertices and
``i + 3j + 6`` edges. Rows are unbounded signed integers; emptiness is always
computed, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from .graph import DegreeSequence, Graph, degree_sequence

if TYPE_CHECKING:
    from .bg_ops import Catalog


class MatrixIndex(NamedTuple):
    i: int
    j: int

    def column_major(self) -> tuple[int, int]:
        return (self.j, self.i)

    def __str__(self) -> str:
        return f"p[{self.i},{self.j}]"


class OpKind(Enum):
    OP01 = "(0,1)"
    OP12 = "(1,2)"
    OP23 = "(2,3)"


@dataclass(frozen=True)
class AssociatedPair:
    """``(phi, epsilon)`` with epsilon kept exact as the integer degree sum."""

    phi: int
    degree_sum: int

    @property
    def epsilon_is_integral(self) -> bool:
        return self.degree_sum % 2 == 0

    @property
    def epsilon(self) -> int | Fraction:
        if self.epsilon_is_integral:
            return self.degree_sum // 2
        return Fraction(self.degree_sum, 2)


def associated_pair(s: DegreeSequence) -> AssociatedPair:
    return AssociatedPair(len(s.terms), sum(s.terms))


def entry_index(p: AssociatedPair) -> MatrixIndex:
    if not p.epsilon_is_integral:
        raise ValueError(f"epsilon = {p.degree_sum}/2 is not an integer")
    if p.phi < 4:
        raise ValueError(f"phi = {p.phi} < 4 has no cell")
    eps = p.degree_sum // 2
    return MatrixIndex(eps - 3 * p.phi + 6, p.phi - 4)


def graph_index(g: Graph) -> MatrixIndex:
    return entry_index(associated_pair(degree_sequence(g)))


def cell_parameters(idx: MatrixIndex) -> tuple[int, int]:
    """``(order, size)`` of every graph in the cell."""
    i, j = idx
    return j + 4, i + 3 * j + 6


def nonempty_row_range(j: int) -> tuple[int, int]:
    if j < 0:
        raise ValueError("column must be non-negative")
    top = (j * j + j) // 2
    if j % 2 == 0:
        return -3 * j // 2, top
    return (-3 * j + 1) // 2, top


def column_nonempty_count(j: int) -> int:
    if j < 0:
        raise ValueError("column must be non-negative")
    if j % 2:
        return (j * j + 4 * j + 1) // 2
    return (j * j + 4 * j + 2) // 2


def op_index_delta(kind: OpKind) -> tuple[int, int]:
    return {OpKind.OP01: (1, 0), OpKind.OP12: (-1, 1), OpKind.OP23: (-3, 2)}[kind]


def enumerate_cell(idx: MatrixIndex, catalog: Catalog) -> list[Graph]:
    """Isomorphism classes in a cell, as canonical forms sorted by code."""
    order, _ = cell_parameters(idx)
    if order > catalog.max_order:
        raise ValueError(f"catalog covers orders up to {catalog.max_order}, cell needs {order}")
    return catalog.graphs_in(idx)
