"""Envelopes of point configurations and their covector combinatorics.

A point configuration is a d-by-n tropical matrix V whose columns are
points of tropical projective space.  Its envelope is the polyhedron in
R^(d+n) cut out by y_i - z_j <= v_ij over the finite entries; faces of
the envelope are labeled by bipartite covector graphs on [d] | [n], and
the inclusion-maximal covector graphs are the vertex sets of the maximal
cells of a regular subdivision of a subpolytope of a product of two
simplices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .digraph import (
    WeightedDigraph,
    detect_negative_cycle,
    face,
    interior_point,
    kleene_star,
    weak_components,
)
from .errors import CapabilityError, DomainError, EmptyCellError, ShapeError
from .matrix import TropicalMatrix, trop_mat_mul
from .semiring import INF, is_finite


@dataclass(frozen=True)
class PointConfig:
    """A d-by-n matrix over the tropical semiring, no all-infinite column."""

    v: TropicalMatrix

    def __post_init__(self):
        for j in range(1, self.v.cols + 1):
            if all(x is INF for x in self.v.col(j)):
                raise DomainError(f"column {j} is entirely infinite")

    @classmethod
    def make(cls, data: Iterable[Iterable]) -> "PointConfig":
        return cls(TropicalMatrix.make(data))

    @property
    def d(self) -> int:
        return self.v.rows

    @property
    def n(self) -> int:
        return self.v.cols

    def entry(self, i: int, j: int):
        return self.v.entry(i, j)

    def support(self) -> "BipartiteSupportGraph":
        """B(V): the arcs (i,j) with a finite entry."""
        return BipartiteSupportGraph(
            self.d,
            self.n,
            frozenset(
                (i, j)
                for i in range(1, self.d + 1)
                for j in range(1, self.n + 1)
                if is_finite(self.v.entry(i, j))
            ),
        )

    def column_support(self, j: int) -> frozenset[int]:
        return frozenset(
            i for i in range(1, self.d + 1) if is_finite(self.v.entry(i, j))
        )


@dataclass(frozen=True)
class BipartiteSupportGraph:
    """A set of arcs inside [d] x [n], row side first."""

    d: int
    n: int
    arcs: frozenset[tuple[int, int]]

    @classmethod
    def make(cls, d: int, n: int, arcs: Iterable[tuple[int, int]]) -> "BipartiteSupportGraph":
        aset = frozenset((int(i), int(j)) for i, j in arcs)
        for i, j in aset:
            if not (1 <= i <= d and 1 <= j <= n):
                raise DomainError(f"arc ({i},{j}) outside [{d}]x[{n}]")
        return cls(d, n, aset)

    def row_neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for (a, j) in self.arcs if a == i))

    def col_neighbors(self, j: int) -> tuple[int, ...]:
        return tuple(sorted(i for (i, b) in self.arcs if b == j))

    def weak_component_count(self) -> int:
        """Weak components on the full node set [d] | [n], isolated nodes included."""
        shifted = [(i, self.d + j) for (i, j) in self.arcs]
        return len(weak_components(self.d + self.n, shifted))

    def nontrivial_components(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Weak components with at least one arc, as (row set, column set) pairs."""
        shifted = [(i, self.d + j) for (i, j) in self.arcs]
        out = []
        for comp in weak_components(self.d + self.n, shifted):
            if len(comp) > 1:
                rows = frozenset(v for v in comp if v <= self.d)
                cols = frozenset(v - self.d for v in comp if v > self.d)
                out.append((rows, cols))
        return out

    def tuple_string(self) -> str:
        """Human rendering by rows, e.g. ``(13,2,2)``; ``-`` for an empty row."""
        parts = []
        wide = self.n > 9
        for i in range(1, self.d + 1):
            cols = self.row_neighbors(i)
            if not cols:
                parts.append("-")
            elif wide:
                parts.append("|".join(str(c) for c in cols))
            else:
                parts.append("".join(str(c) for c in cols))
        return "(" + ",".join(parts) + ")"

    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))


# A covector graph is a support graph that passes ``is_covector_graph``;
# the closure operation below produces them.
CovectorGraph = BipartiteSupportGraph


def envelope_digraph(v: PointConfig) -> WeightedDigraph:
    """The (d+n)-node digraph whose polyhedron is the envelope of V.

    Node i <= d is the row node i; node d+j is the column node j.  There
    is an arc (i, d+j) of weight v_ij for each finite entry, and nothing
    else, so the digraph is structurally acyclic and always feasible.
    """
    arcs = {
        (i, v.d + j): v.entry(i, j)
        for (i, j) in v.support().arcs
    }
    return WeightedDigraph(v.d + v.n, arcs)


def _face_digraph(v: PointConfig, g: BipartiteSupportGraph) -> WeightedDigraph:
    env = envelope_digraph(v)
    return face(env, {(i, v.d + j) for (i, j) in g.arcs})


def _validate_subgraph(v: PointConfig, g: BipartiteSupportGraph) -> None:
    if (g.d, g.n) != (v.d, v.n):
        raise ShapeError("graph shape does not match the configuration")
    if not g.arcs <= v.support().arcs:
        extra = sorted(g.arcs - v.support().arcs)
        raise DomainError(f"arcs {extra} are not in the support of V")


def covector_closure(v: PointConfig, g: BipartiteSupportGraph) -> CovectorGraph:
    """Smallest covector graph containing G.

    Iteratively adds every support arc lying on a zero-weight cycle of
    the face digraph; fails if the face is empty.
    """
    _validate_subgraph(v, g)
    support = v.support().arcs
    current = set(g.arcs)
    while True:
        wg = _face_digraph(v, BipartiteSupportGraph(v.d, v.n, frozenset(current)))
        cyc = detect_negative_cycle(wg)
        if cyc is not None:
            raise EmptyCellError(f"face is empty: negative cycle {cyc}")
        star = kleene_star(wg)
        added = False
        for (i, j) in support - current:
            back = star.entry(v.d + j, i)
            if back is not INF and v.entry(i, j) + back == 0:
                current.add((i, j))
                added = True
        if not added:
            return BipartiteSupportGraph(v.d, v.n, frozenset(current))


def is_covector_graph(v: PointConfig, g: BipartiteSupportGraph) -> bool:
    """Whether G labels a nonempty face: feasible and closed under zero cycles."""
    _validate_subgraph(v, g)
    if detect_negative_cycle(_face_digraph(v, g)) is not None:
        return False
    return covector_closure(v, g).arcs == g.arcs


def cell_dimension(v: PointConfig, g: CovectorGraph) -> int:
    """Dimension of the cell X_G in the projective torus.

    The face of the envelope has dimension equal to the number of weak
    components of G on the full node set; one is removed by the global
    translation direction.
    """
    if not is_covector_graph(v, g):
        raise DomainError("not a covector graph of this configuration")
    return g.weak_component_count() - 1


def interior_point_of_face(
    v: PointConfig, g: BipartiteSupportGraph
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """A point (y, z) of the envelope whose tight arcs are exactly closure(G)."""
    _validate_subgraph(v, g)
    wg = _face_digraph(v, g)
    pt = interior_point(wg)
    return pt[: v.d], pt[v.d :]


def face_projection_matrix(v: PointConfig, g: CovectorGraph) -> TropicalMatrix:
    """The d-by-d matrix V (x) V[G] describing the projection of F_G to R^d.

    V[G] is the n-by-d matrix with entry (j,i) equal to -v_ij when (i,j)
    is in G and infinite otherwise.
    """
    _validate_subgraph(v, g)
    if detect_negative_cycle(_face_digraph(v, g)) is not None:
        raise EmptyCellError("face is empty")
    vg = TropicalMatrix.make(
        [
            [-v.entry(i, j) if (i, j) in g.arcs else INF for i in range(1, v.d + 1)]
            for j in range(1, v.n + 1)
        ]
    )
    return trop_mat_mul(v.v, vg)


# ---------------------------------------------------------------------------
# enumeration of all covector graphs


def enumerate_covector_graphs(
    v: PointConfig, *, candidate_bound: int = 1_000_000
) -> list[CovectorGraph]:
    """All covector graphs of V, canonically ordered.

    Seeds with the closures of every feasible degree-1 column selection
    (these include all inclusion-minimal graphs of full-dimensional
    cells), then saturates under pairwise union followed by closure.
    """
    supports = [v.column_support(j) for j in range(1, v.n + 1)]
    total = 1
    for s in supports:
        total *= len(s)
        if total > candidate_bound:
            raise CapabilityError(
                f"cell enumeration would scan more than {candidate_bound} seeds"
            )
    found: dict[frozenset[tuple[int, int]], CovectorGraph] = {}
    for choice in itertools.product(*[sorted(s) for s in supports]):
        g = BipartiteSupportGraph(
            v.d, v.n, frozenset((i, j) for j, i in enumerate(choice, start=1))
        )
        if detect_negative_cycle(_face_digraph(v, g)) is not None:
            continue
        closed = covector_closure(v, g)
        found.setdefault(closed.arcs, closed)
    fresh = list(found)
    while fresh:
        new: list[frozenset[tuple[int, int]]] = []
        existing = list(found)
        for a in fresh:
            for b in existing:
                union = a | b
                if union in found:
                    continue
                g = BipartiteSupportGraph(v.d, v.n, union)
                if detect_negative_cycle(_face_digraph(v, g)) is not None:
                    continue
                closed = covector_closure(v, g)
                if closed.arcs not in found:
                    found[closed.arcs] = closed
                    new.append(closed.arcs)
        fresh = new
    return sorted(found.values(), key=lambda g: (len(g.arcs), g.sorted_arcs()))


# ---------------------------------------------------------------------------
# regular subdivision


@dataclass(frozen=True)
class SubdivisionCell:
    """A cell of the regular subdivision, given by its vertex set in [d] x [n]."""

    vertices: frozenset[tuple[int, int]]
    dimension: int


def _subdivision_dimension(g: BipartiteSupportGraph) -> int:
    """Dimension of conv{e_i (+) e_j : (i,j) in G}.

    Each weak component with a nodes contributes a simplex-like factor of
    dimension a - 2, and joining k components adds k - 1.
    """
    comps = g.nontrivial_components()
    touched = sum(len(r) + len(c) for r, c in comps)
    return touched - len(comps) - 1


def regular_subdivision(
    v: PointConfig, *, candidate_bound: int = 1_000_000
) -> list[SubdivisionCell]:
    """Maximal cells of the regular subdivision induced by the heights V.

    The maximal cells are exactly the inclusion-maximal covector graphs,
    which label the minimal faces of the envelope.
    """
    graphs = enumerate_covector_graphs(v, candidate_bound=candidate_bound)
    maximal = [
        g
        for g in graphs
        if not any(h is not g and g.arcs < h.arcs for h in graphs)
    ]
    cells = [SubdivisionCell(g.arcs, _subdivision_dimension(g)) for g in maximal]
    return sorted(cells, key=lambda c: tuple(sorted(c.vertices)))
