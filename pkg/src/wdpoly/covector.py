"""Covector decompositions, tropical cones, halfspaces and signed cells.

The covector of a point x records, for every apex column of a point
configuration, which sectors of that apex contain x.  The cells with a
common covector decompose R^d and, after compactification, tropical
projective space.  This module enumerates those cells, decides
membership in tropical cones and halfspaces, tests pureness, computes
signed cells and tangent digraphs, and decomposes the boundary strata.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .digraph import WeightedDigraph, strong_components
from .envelope import (
    BipartiteSupportGraph,
    CovectorGraph,
    PointConfig,
    enumerate_covector_graphs,
    face_projection_matrix,
    interior_point_of_face,
)
from .errors import CapabilityError, DomainError, ShapeError
from .semiring import INF, TVal, is_finite, tval


# ---------------------------------------------------------------------------
# sectors and projective points


@dataclass(frozen=True)
class Sector:
    """The i-th sector of the apex u: where coordinate i attains the minimum.

    A point z lies in the sector iff z_l - z_i <= u_l - u_i for every l
    in the support of u.
    """

    apex: tuple[TVal, ...]
    index: int

    def __post_init__(self):
        if not (1 <= self.index <= len(self.apex)):
            raise DomainError("sector index out of range")
        if self.apex[self.index - 1] is INF:
            raise DomainError(f"apex coordinate {self.index} is infinite")

    def digraph(self) -> WeightedDigraph:
        """The sector as a weighted digraph polyhedron on [d]."""
        d = len(self.apex)
        i = self.index
        ui = self.apex[i - 1]
        arcs = {
            (l, i): self.apex[l - 1] - ui
            for l in range(1, d + 1)
            if l != i and is_finite(self.apex[l - 1])
        }
        return WeightedDigraph(d, arcs)

    def contains(self, x: Sequence) -> bool:
        pt = [tval(q) for q in x]
        if len(pt) != len(self.apex):
            raise ShapeError("point dimension does not match the apex")
        i = self.index
        ui = self.apex[i - 1]
        for l, ul in enumerate(self.apex, start=1):
            if ul is INF or l == i:
                continue
            if not (pt[l - 1] - pt[i - 1] <= ul - ui):
                return False
        return True


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of tropical projective space: coordinates with a finite entry.

    The canonical representative shifts the first finite coordinate to 0.
    """

    coords: tuple[TVal, ...]

    @classmethod
    def make(cls, coords: Iterable) -> "ProjectivePoint":
        raw = tuple(tval(c) for c in coords)
        shift = next((c for c in raw if c is not INF), None)
        if shift is None:
            raise DomainError("projective point needs at least one finite coordinate")
        return cls(tuple(c - shift if c is not INF else INF for c in raw))

    @property
    def d(self) -> int:
        return len(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(
            i for i, c in enumerate(self.coords, start=1) if c is not INF
        )

    def is_finite(self) -> bool:
        return len(self.support()) == self.d


def _col_support(u: Sequence[TVal]) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(u, start=1) if c is not INF)


def closed_sector_membership(z: ProjectivePoint, u: Sequence[TVal], i: int) -> bool:
    """Whether z lies in the compactified i-th sector of apex u.

    The closure of the sector meets the stratum with infinite set K only
    when K avoids the support of u or contains i; on an admissible
    stratum the finite coordinates obey the sector inequalities with the
    indices in K dropped.
    """
    u = tuple(tval(c) for c in u)
    if len(u) != z.d:
        raise ShapeError("apex dimension does not match the point")
    if u[i - 1] is INF:
        raise DomainError(f"index {i} is not in the support of the apex")
    k = frozenset(range(1, z.d + 1)) - z.support()
    if i in k:
        return True
    if k & _col_support(u):
        return False
    zi = z.coords[i - 1]
    ui = u[i - 1]
    for l in range(1, z.d + 1):
        if l == i or l in k or u[l - 1] is INF:
            continue
        if not (z.coords[l - 1] - zi <= u[l - 1] - ui):
            return False
    return True


# ---------------------------------------------------------------------------
# covectors of points and tropical cone membership


def covector_of_point(v: PointConfig, x: Sequence) -> CovectorGraph:
    """The covector graph of a finite point: per column, the argmin rows."""
    pt = [tval(q) for q in x]
    if len(pt) != v.d:
        raise ShapeError(f"point has length {len(pt)}, configuration has d={v.d}")
    if any(c is INF for c in pt):
        raise DomainError("covector_of_point needs a finite point")
    arcs = set()
    for j in range(1, v.n + 1):
        best: TVal = INF
        rows: list[int] = []
        for i in range(1, v.d + 1):
            vij = v.entry(i, j)
            if vij is INF:
                continue
            val = vij - pt[i - 1]
            if val < best:
                best = val
                rows = [i]
            elif not (best < val):
                rows.append(i)
        arcs.update((i, j) for i in rows)
    return BipartiteSupportGraph(v.d, v.n, frozenset(arcs))


def tcone_witness(v: PointConfig, z: ProjectivePoint) -> tuple[TVal, ...]:
    """The canonical multipliers: lambda_j = max_i (z_i - v_ij) over finite v_ij."""
    lam: list[TVal] = []
    for j in range(1, v.n + 1):
        best: TVal | None = None
        for i in range(1, v.d + 1):
            vij = v.entry(i, j)
            if vij is INF:
                continue
            zi = z.coords[i - 1]
            if zi is INF:
                best = INF
                break
            cand = zi - vij
            if best is None or best is not INF and cand > best:
                best = cand
        lam.append(best if best is not None else INF)
    return tuple(lam)


def tcone_membership(v: PointConfig, z: ProjectivePoint) -> tuple[bool, tuple[TVal, ...]]:
    """Whether z lies in the tropical span of the columns of V.

    Uses the sector criterion: every index in the support of z must see
    some column whose support is contained in supp(z) and whose sector at
    that index contains z.  The returned multipliers reproduce z as a
    tropical combination exactly when the verdict is positive.
    """
    if z.d != v.d:
        raise ShapeError("point dimension does not match the configuration")
    supp_z = z.support()
    col_supports = [v.column_support(j) for j in range(1, v.n + 1)]
    admissible = [j for j in range(1, v.n + 1) if col_supports[j - 1] <= supp_z]
    ok = True
    for i in supp_z:
        hit = False
        for j in admissible:
            if i not in col_supports[j - 1]:
                continue
            # sector inequalities within the stratum of supp(z)
            vij = v.entry(i, j)
            zi = z.coords[i - 1]
            good = True
            for l in col_supports[j - 1]:
                if l == i:
                    continue
                if not (z.coords[l - 1] - zi <= v.entry(l, j) - vij):
                    good = False
                    break
            if good:
                hit = True
                break
        if not hit:
            ok = False
            break
    return ok, tcone_witness(v, z)


# ---------------------------------------------------------------------------
# cell records and enumeration


@dataclass(frozen=True)
class CellRecord:
    """One cell of a covector decomposition, possibly on a boundary stratum.

    The graph keeps the original row and column labels even for boundary
    cells; ``stratum`` lists the rows sent to infinity (empty for torus
    cells).  ``dimension`` is taken inside the cell's own stratum.
    """

    graph: BipartiteSupportGraph
    dimension: int
    bounded: bool
    in_tcone: bool
    stratum: frozenset[int]

    def tuple_string(self) -> str:
        parts = []
        wide = self.graph.n > 9
        for i in range(1, self.graph.d + 1):
            if i in self.stratum:
                parts.append("•")
                continue
            cols = self.graph.row_neighbors(i)
            if not cols:
                parts.append("-")
            elif wide:
                parts.append("|".join(str(c) for c in cols))
            else:
                parts.append("".join(str(c) for c in cols))
        return "(" + ",".join(parts) + ")"

    def sort_key(self):
        return (
            len(self.stratum),
            tuple(sorted(self.stratum)),
            -self.dimension,
            self.graph.sorted_arcs(),
        )


def _is_bounded(v: PointConfig, g: CovectorGraph) -> bool:
    """Bounded mod translation iff the projected digraph is strongly connected."""
    m = face_projection_matrix(v, g)
    arcs = [
        (i, j)
        for i in range(1, v.d + 1)
        for j in range(1, v.d + 1)
        if i != j and is_finite(m.entry(i, j))
    ]
    return len(strong_components(v.d, arcs)) == 1


def _in_tcone(g: CovectorGraph) -> bool:
    rows = {i for (i, _) in g.arcs}
    cols = {j for (_, j) in g.arcs}
    return len(rows) == g.d and len(cols) == g.n


def enumerate_cells(
    v: PointConfig, *, candidate_bound: int = 1_000_000
) -> list[CellRecord]:
    """All cells of the covector decomposition of the projective torus."""
    records = []
    for g in enumerate_covector_graphs(v, candidate_bound=candidate_bound):
        if any(len(g.col_neighbors(j)) == 0 for j in range(1, v.n + 1)):
            continue
        records.append(
            CellRecord(
                graph=g,
                dimension=g.weak_component_count() - 1,
                bounded=_is_bounded(v, g),
                in_tcone=_in_tcone(g),
                stratum=frozenset(),
            )
        )
    records.sort(key=CellRecord.sort_key)
    return records


def maximal_cells(cells: Sequence[CellRecord]) -> list[CellRecord]:
    """Inclusion-maximal cells: those with inclusion-minimal covector graphs."""
    out = [
        c
        for c in cells
        if not any(
            o is not c and o.stratum == c.stratum and o.graph.arcs < c.graph.arcs
            for o in cells
        )
    ]
    return sorted(out, key=CellRecord.sort_key)


def cell_sample_point(v: PointConfig, cell: CellRecord) -> tuple[TVal, ...]:
    """A relative-interior point of the cell, infinite on its stratum."""
    if cell.stratum:
        lab = boundary_matrix(v, cell.stratum)
        if lab.config is None:
            coords: list[TVal] = [
                Fraction(0) if i not in cell.stratum else INF
                for i in range(1, v.d + 1)
            ]
            return tuple(coords)
        row_pos = {r: t for t, r in enumerate(lab.row_labels, start=1)}
        col_pos = {c: t for t, c in enumerate(lab.col_labels, start=1)}
        local = BipartiteSupportGraph(
            len(lab.row_labels),
            len(lab.col_labels),
            frozenset((row_pos[i], col_pos[j]) for (i, j) in cell.graph.arcs),
        )
        y, _ = interior_point_of_face(lab.config, local)
        coords = [INF] * v.d
        for r, val in zip(lab.row_labels, y):
            coords[r - 1] = val
        return tuple(coords)
    y, _ = interior_point_of_face(v, cell.graph)
    return tuple(y)


# ---------------------------------------------------------------------------
# halfspace systems


@dataclass(frozen=True)
class SignVector:
    signs: tuple[str, ...]

    @classmethod
    def make(cls, spec: Iterable[str] | str) -> "SignVector":
        signs = tuple(spec)
        if any(s not in "+-" for s in signs):
            raise DomainError("signs must be '+' or '-'")
        return cls(signs)

    @classmethod
    def all_plus(cls, n: int) -> "SignVector":
        return cls(("+",) * n)

    def __str__(self) -> str:
        return "".join(self.signs)

    def __len__(self) -> int:
        return len(self.signs)


@dataclass(frozen=True)
class HalfspaceSystem:
    """A point configuration with a selected sector set per column.

    The arcs of psi in column j name the sectors of apex v^(j) whose
    union gives the j-th halfspace; the system is their intersection.
    Every column must select at least one sector; a proper selection
    (not all sectors of the column) can be enforced with require_proper.
    """

    config: PointConfig
    psi: BipartiteSupportGraph

    def __post_init__(self):
        v, psi = self.config, self.psi
        if (psi.d, psi.n) != (v.d, v.n):
            raise ShapeError("selection shape does not match the configuration")
        support = v.support().arcs
        if not psi.arcs <= support:
            raise DomainError("selected sectors must have finite apex coordinates")
        for j in range(1, v.n + 1):
            if not psi.col_neighbors(j):
                raise DomainError(f"column {j} selects no sector")

    @classmethod
    def make(
        cls,
        v: PointConfig,
        psi: BipartiteSupportGraph,
        *,
        require_proper: bool = False,
    ) -> "HalfspaceSystem":
        sys = cls(v, psi)
        if require_proper:
            for j in range(1, v.n + 1):
                if frozenset(psi.col_neighbors(j)) == v.column_support(j):
                    raise DomainError(f"column {j} selects every sector")
        return sys


def signed_graph(
    psi: BipartiteSupportGraph, eps: SignVector, support: BipartiteSupportGraph
) -> BipartiteSupportGraph:
    """Flip each minus column of psi to its complement within the support."""
    if len(eps) != psi.n:
        raise ShapeError("sign vector length does not match the column count")
    arcs = set()
    for j, s in enumerate(eps.signs, start=1):
        chosen = frozenset(psi.col_neighbors(j))
        if s == "-":
            chosen = frozenset(support.col_neighbors(j)) - chosen
        arcs.update((i, j) for i in chosen)
    return BipartiteSupportGraph(psi.d, psi.n, frozenset(arcs))


def halfspace_membership(h: HalfspaceSystem, x: Sequence) -> bool:
    """Whether the finite point x lies in the intersection of the halfspaces.

    Per column, the best selected sector must do at least as well as the
    best unselected one: max over psi of (x_i - v_ij) >= max over the
    complement.
    """
    v = h.config
    pt = [tval(q) for q in x]
    if len(pt) != v.d:
        raise ShapeError("point dimension mismatch")
    return _membership_against(v, h.psi, pt)


def _membership_against(
    v: PointConfig, psi: BipartiteSupportGraph, pt: Sequence[TVal]
) -> bool:
    for j in range(1, v.n + 1):
        chosen = psi.col_neighbors(j)
        if not chosen:
            return False
        inside = max(
            (pt[i - 1] - v.entry(i, j) for i in chosen if pt[i - 1] is not INF),
            default=None,
        )
        rest = [
            pt[i - 1] - v.entry(i, j)
            for i in v.column_support(j)
            if i not in chosen and pt[i - 1] is not INF
        ]
        if inside is None:
            if rest:
                return False
            continue
        if rest and max(rest) > inside:
            return False
    return True


def cells_of_halfspace(
    h: HalfspaceSystem, *, candidate_bound: int = 1_000_000
) -> list[CellRecord]:
    """The torus cells whose union is the halfspace intersection.

    A cell belongs iff no column node becomes isolated after restricting
    its covector graph to the selected arcs.
    """
    return _cells_against(
        h.config, h.psi, enumerate_cells(h.config, candidate_bound=candidate_bound)
    )


def _cells_against(
    v: PointConfig, psi: BipartiteSupportGraph, cells: Sequence[CellRecord]
) -> list[CellRecord]:
    out = []
    for c in cells:
        inter = c.graph.arcs & psi.arcs
        cols = {j for (_, j) in inter}
        if len(cols) == v.n:
            out.append(c)
    return out


def is_pure(
    h: HalfspaceSystem, *, candidate_bound: int = 1_000_000
) -> tuple[bool, tuple[CellRecord, CellRecord] | None]:
    """Whether all inclusion-maximal cells of the halfspace share one dimension."""
    cells = cells_of_halfspace(h, candidate_bound=candidate_bound)
    tops = maximal_cells(cells)
    for a, b in itertools.combinations(tops, 2):
        if a.dimension != b.dimension:
            return False, (a, b)
    return True, None


# ---------------------------------------------------------------------------
# signed cells


def signed_cells(
    h: HalfspaceSystem,
    *,
    sign_bound: int = 20,
    candidate_bound: int = 1_000_000,
) -> dict[str, list[CellRecord]]:
    """Every inversion of the system, keyed by its sign string.

    For each sign vector the minus columns flip to the complementary
    sectors; the value lists the torus cells (by the isolation
    criterion) followed by the boundary-stratum cells (by closed-sector
    membership of a relative-interior sample point).
    """
    v = h.config
    if v.n > sign_bound:
        raise CapabilityError(
            f"signed cell enumeration is limited to {sign_bound} columns, got {v.n}"
        )
    support = v.support()
    torus = enumerate_cells(v, candidate_bound=candidate_bound)
    boundary = [
        c
        for c in projective_decomposition(v, candidate_bound=candidate_bound)
        if c.stratum
    ]
    samples = {c: cell_sample_point(v, c) for c in boundary}
    out: dict[str, list[CellRecord]] = {}
    for signs in itertools.product("+-", repeat=v.n):
        eps = SignVector.make(signs)
        psi_e = signed_graph(h.psi, eps, support)
        if any(not psi_e.col_neighbors(j) for j in range(1, v.n + 1)):
            out[str(eps)] = []
            continue
        cells = _cells_against(v, psi_e, torus)
        for c in boundary:
            z = ProjectivePoint.make(samples[c])
            hit = all(
                any(
                    closed_sector_membership(z, v.v.col(j), i)
                    for i in psi_e.col_neighbors(j)
                )
                for j in range(1, v.n + 1)
            )
            if hit:
                cells.append(c)
        out[str(eps)] = cells
    return out


# ---------------------------------------------------------------------------
# tangent digraphs


@dataclass(frozen=True)
class TangentDigraph:
    """Local orientation data at a cell of a halfspace system.

    Column nodes all of whose covector arcs are selected disappear; the
    surviving selected arcs point from rows to columns, the unselected
    ones from columns to rows.  Arcs are stored as (row, column) pairs.
    """

    d: int
    n: int
    columns: tuple[int, ...]
    row_to_col: frozenset[tuple[int, int]]
    col_to_row: frozenset[tuple[int, int]]


def tangent_digraph(h: HalfspaceSystem, cell: CellRecord) -> TangentDigraph:
    g = cell.graph
    psi = h.psi.arcs
    kept = tuple(
        j
        for j in range(1, g.n + 1)
        if g.col_neighbors(j)
        and not all((i, j) in psi for i in g.col_neighbors(j))
    )
    kept_set = set(kept)
    fwd = frozenset(a for a in g.arcs if a[1] in kept_set and a in psi)
    back = frozenset(a for a in g.arcs if a[1] in kept_set and a not in psi)
    return TangentDigraph(g.d, g.n, kept, fwd, back)


# ---------------------------------------------------------------------------
# projective strata


@dataclass(frozen=True)
class LabeledConfig:
    """A submatrix with its original row and column labels.

    ``config`` is None when no column survives (the empty-stratum signal).
    """

    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    config: PointConfig | None


def boundary_matrix(v: PointConfig, z: Iterable[int]) -> LabeledConfig:
    """The configuration induced on the stratum where the rows z are infinite.

    Columns with a finite entry in a deleted row disappear entirely; the
    remaining columns keep their labels.
    """
    zset = frozenset(z)
    if not zset <= set(range(1, v.d + 1)):
        raise DomainError("stratum rows out of range")
    if zset == set(range(1, v.d + 1)):
        raise DomainError("the stratum must keep at least one row")
    rows = tuple(i for i in range(1, v.d + 1) if i not in zset)
    cols = tuple(
        j
        for j in range(1, v.n + 1)
        if not (v.column_support(j) & zset)
    )
    if not cols:
        return LabeledConfig(rows, (), None)
    sub = v.v.submatrix(rows, cols)
    return LabeledConfig(rows, cols, PointConfig(sub))


def projective_decomposition(
    v: PointConfig, *, candidate_bound: int = 1_000_000
) -> list[CellRecord]:
    """All cells of the decomposition of tropical projective space.

    Iterates over every proper set of rows sent to infinity; the empty
    set contributes the torus cells.  A stratum none of whose columns
    survive is a single unconstrained cell with an empty covector graph.
    """
    out: list[CellRecord] = []
    for size in range(0, v.d):
        for zrows in itertools.combinations(range(1, v.d + 1), size):
            zset = frozenset(zrows)
            if not zset:
                out.extend(enumerate_cells(v, candidate_bound=candidate_bound))
                continue
            lab = boundary_matrix(v, zset)
            if lab.config is None:
                out.append(
                    CellRecord(
                        graph=BipartiteSupportGraph(v.d, v.n, frozenset()),
                        dimension=v.d - len(zset) - 1,
                        bounded=(v.d - len(zset) == 1),
                        in_tcone=False,
                        stratum=zset,
                    )
                )
                continue
            for local in enumerate_cells(lab.config, candidate_bound=candidate_bound):
                mapped = frozenset(
                    (lab.row_labels[i - 1], lab.col_labels[j - 1])
                    for (i, j) in local.graph.arcs
                )
                out.append(
                    CellRecord(
                        graph=BipartiteSupportGraph(v.d, v.n, mapped),
                        dimension=local.dimension,
                        bounded=local.bounded,
                        in_tcone=False,
                        stratum=zset,
                    )
                )
    out.sort(key=CellRecord.sort_key)
    return out


def cell_boundary_restriction(
    v: PointConfig, g: CovectorGraph, z: Iterable[int]
) -> BipartiteSupportGraph:
    """Where the closure of the torus cell X_G meets the stratum z.

    Drops the arcs of the deleted rows and of the columns that do not
    survive on the stratum; labels stay original.
    """
    zset = frozenset(z)
    lab = boundary_matrix(v, zset)
    cols = set(lab.col_labels)
    kept = frozenset(
        (i, j) for (i, j) in g.arcs if i not in zset and j in cols
    )
    return BipartiteSupportGraph(v.d, v.n, kept)
