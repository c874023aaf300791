"""Classification and realization of 3-connected degree sequences.

The ``classify_paper_*`` functions implement the stated criteria verbatim
(no graphicality test is folded in); the ``oracle_*`` functions answer the
same questions by exhaustive enumeration so the two can be compared.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .bg_ops import ENUM_BOUND, enumerate_3connected
from .canon import canonical_code
from .connectivity import oracle_connectivity
from .generate import graph_classes_by_size
from .graph import DegreeSequence, Graph, complement, complete_graph, degree_sequence
from .partition_matrix import associated_pair, entry_index

ORACLE_BOUND = 8


def necessary_threshold(phi: int) -> int:
    """Edge count that a necessarily 3-connected sequence must exceed."""
    return comb(phi - 2, 2) + 5


def corollary_threshold(n: int) -> int:
    """Minimum edge count from which every graph is claimed 3-connected."""
    return (n * n - 5 * n + 18) // 2


def is_graphic(s: DegreeSequence) -> bool:
    """Erdos-Gallai test."""
    d = sorted(s.terms, reverse=True)
    n = len(d)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    left = 0
    for k in range(1, n + 1):
        left += d[k - 1]
        right = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if left > right:
            return False
    return True


def classify_paper_3connected(s: DegreeSequence) -> bool:
    if not s.is_valid:
        return False
    p = associated_pair(s)
    if not p.epsilon_is_integral:
        return False
    eps = p.degree_sum // 2
    phi = p.phi
    return 3 * phi <= 2 * eps <= 2 * comb(phi, 2) and s.max_degree <= phi - 1 and s.min_degree >= 3


def classify_paper_necessary(s: DegreeSequence) -> bool:
    if not classify_paper_3connected(s):
        return False
    p = associated_pair(s)
    return p.degree_sum // 2 > necessary_threshold(p.phi)


def oracle_realizations(s: DegreeSequence, bound: int = ORACLE_BOUND) -> list[Graph]:
    """Every isomorphism class with degree sequence ``s``, sorted by canonical code.

    Sparse sequences are generated directly; dense ones through their
    complements, which have at most half the possible edges.
    """
    phi = len(s.terms)
    if phi > bound:
        raise ValueError(f"sequence length {phi} exceeds oracle bound {bound}")
    total = sum(s.terms)
    if phi == 0 or total % 2 or any(x < 0 or x > phi - 1 for x in s.terms):
        return []
    eps = total // 2
    target = tuple(sorted(s.terms, reverse=True))
    if 2 * eps <= comb(phi, 2):
        level = graph_classes_by_size(phi, eps, target)[eps]
        found = [g for g in level.values() if tuple(degree_sequence(g).terms) == target]
    else:
        co = tuple(sorted((phi - 1 - x for x in target), reverse=True))
        m = comb(phi, 2) - eps
        level = graph_classes_by_size(phi, m, co)[m]
        found = []
        for h in level.values():
            if tuple(degree_sequence(h).terms) == co:
                found.append(canonical_code(complement(h)).to_graph())
    return sorted(found, key=canonical_code)


def realize_3connected(s: DegreeSequence) -> Graph | None:
    """A 3-connected realization of ``s`` taken from the BG catalog, if one exists."""
    phi = len(s.terms)
    if phi > ENUM_BOUND:
        raise ValueError(f"sequence length {phi} exceeds enumeration bound {ENUM_BOUND}")
    p = associated_pair(s)
    if not s.is_valid or phi < 4 or not p.epsilon_is_integral:
        return None
    idx = entry_index(p)
    for g in enumerate_3connected(phi).graphs_in(idx):
        if degree_sequence(g) == s:
            return g
    return None


def boundary_witnesses(n: int) -> tuple[Graph, Graph]:
    """The two graphs sharing ``{n-1, n-1, n-3, ..., n-3, 3, 3}``.

    Label ``k - 1`` stands for ``v_k``. ``G1`` glues K4 on
    ``{v1, v2, v_{n-1}, v_n}`` to K_{n-2} on ``{v1..v_{n-2}}`` along ``v1v2``
    and has the 2-cut ``{v1, v2}``. ``G2`` drops ``v_{n-1}v_n`` and
    ``v_3v_4`` (the interior edge ``v_iv_j``) and adds ``v_nv_3`` and
    ``v_{n-1}v_4``.
    """
    if n < 6:
        raise ValueError("boundary witnesses need n >= 6")
    a, b = n - 2, n - 1  # v_{n-1}, v_n
    vi, vj = 2, 3
    k4 = {(0, 1), (0, a), (0, b), (1, a), (1, b), (a, b)}
    big = set(complete_graph(n - 2).edges)
    g1 = Graph(n, frozenset(k4 | big))
    g2 = Graph(n, frozenset((g1.edges - {(a, b), (vi, vj)}) | {(vi, b), (vj, a)}))
    return g1, g2


def extremal_sequences(phi: int) -> tuple[DegreeSequence, DegreeSequence]:
    """Sparsest and densest 3-connected degree sequences of length ``phi``."""
    if phi < 4:
        raise ValueError("phi must be at least 4")
    if phi % 2 == 0:
        low = (3,) * phi
    else:
        low = (4,) + (3,) * (phi - 1)
    return DegreeSequence(low), DegreeSequence((phi - 1,) * phi)


@dataclass(frozen=True)
class Classification:
    graphic: bool
    paper_3connected: bool
    paper_necessary: bool
    oracle_3connected: bool | None = None
    oracle_necessary: bool | None = None

    def to_json(self) -> dict:
        return asdict(self)


def classify(s: DegreeSequence, oracle: bool = False, bound: int = ORACLE_BOUND) -> Classification:
    o3 = on = None
    if oracle and len(s.terms) <= bound:
        kappas = [oracle_connectivity(g) for g in oracle_realizations(s, bound)]
        o3 = any(k >= 3 for k in kappas) and len(s.terms) >= 4
        on = bool(kappas) and all(k >= 3 for k in kappas) and len(s.terms) >= 4
    return Classification(
        graphic=is_graphic(s),
        paper_3connected=classify_paper_3connected(s),
        paper_necessary=classify_paper_necessary(s),
        oracle_3connected=o3,
        oracle_necessary=on,
    )
