"""3-connected graphs: BG-operations, the partition matrix and degree sequences."""

from .bg_ops import (
    BgStep,
    BgTrace,
    Catalog,
    apply_op01,
    apply_op12,
    apply_op23,
    enumerate_3connected,
    find_trace,
    replay_trace,
    successors,
)
from .canon import CanonicalCode, are_isomorphic, canonical_code, canonical_form
from .connectivity import (
    find_small_cut,
    is_3_connected,
    is_connected,
    max_disjoint_paths,
    oracle_connectivity,
    vertex_connectivity,
)
from .degree_sequences import (
    Classification,
    boundary_witnesses,
    classify,
    classify_paper_3connected,
    classify_paper_necessary,
    extremal_sequences,
    is_graphic,
    oracle_realizations,
    realize_3connected,
)
from .graph import (
    DegreeSequence,
    Graph,
    add_edge,
    complement,
    complete_graph,
    degree_sequence,
    subdivide_edge,
)
from .graph6 import graph6_decode, graph6_encode
from .partition_matrix import (
    AssociatedPair,
    MatrixIndex,
    OpKind,
    associated_pair,
    cell_parameters,
    column_nonempty_count,
    entry_index,
    enumerate_cell,
    nonempty_row_range,
    op_index_delta,
)

__version__ = "0.1.0"
