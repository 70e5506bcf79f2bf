"""Sectors, covector cells, tropical cones, halfspaces, projective strata."""

import random
from fractions import Fraction

import pytest

from wdpoly import (
    INF,
    BipartiteSupportGraph,
    DomainError,
    HalfspaceSystem,
    PointConfig,
    ProjectivePoint,
    Sector,
    SignVector,
    boundary_matrix,
    cell_boundary_restriction,
    cell_sample_point,
    cells_of_halfspace,
    closed_sector_membership,
    covector_of_point,
    enumerate_cells,
    halfspace_membership,
    is_generic,
    is_pure,
    maximal_cells,
    projective_decomposition,
    signed_cells,
    signed_graph,
    tangent_digraph,
    tcone_membership,
)

from oracles import random_config, residuation_member, trop_combination

# three apices in the plane, one with infinite coordinates
V5 = PointConfig.make([[0, 0, 0], [1, 0, "inf"], [2, -1, "inf"]])

# the purity counter-example: pure but not tropically generic
V8 = PointConfig.make(
    [[0, 0, 0, 0, 0], [3, 2, 1, "inf", "inf"], [2, 2, "inf", 1, 3]]
)
PSI8 = BipartiteSupportGraph.make(3, 5, [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)])

# a six-column configuration whose last two columns are boundary points
VP = PointConfig.make(
    [
        [0, 0, 0, 0, "inf", "inf"],
        [1, 1, "inf", "inf", 0, "inf"],
        [0, 2, "inf", "inf", "inf", 0],
    ]
)


def G(d, n, arcs):
    return BipartiteSupportGraph.make(d, n, arcs)


# ---------------------------------------------------------------------------
# sectors and projective points


def test_sector_contains():
    s1 = Sector((Fraction(0), Fraction(1), Fraction(1)), 1)
    assert s1.contains([0, 0, 0])
    assert s1.contains([0, 1, 1])  # apex lies in every sector
    assert not s1.contains([0, 2, 0])


def test_sector_digraph():
    s2 = Sector((Fraction(0), Fraction(1), Fraction(1)), 2)
    w = s2.digraph()
    assert w.weight(1, 2) == Fraction(-1)
    assert w.weight(3, 2) == Fraction(0)
    assert (2, 1) not in w.arcs


def test_sector_rejects_infinite_index():
    with pytest.raises(DomainError):
        Sector((Fraction(0), INF), 2)


def test_projective_point_normalization():
    z = ProjectivePoint.make(["inf", 3, 5])
    assert z.coords == (INF, Fraction(0), Fraction(2))
    assert z.support() == {2, 3}
    assert not z.is_finite()
    with pytest.raises(DomainError):
        ProjectivePoint.make(["inf", "inf"])


def test_closed_sector_membership_on_strata():
    u = (Fraction(0), Fraction(0), INF)
    # the point (inf, 0, inf): sector 1 contains it (index 1 is at infinity)
    z = ProjectivePoint.make(["inf", 0, "inf"])
    assert closed_sector_membership(z, u, 1)
    # sector 2 does not: 1 is infinite but lies in the support of u
    assert not closed_sector_membership(z, u, 2)
    # a finite point falls back to the plain sector inequalities
    fin = ProjectivePoint.make([0, 1, 0])
    assert closed_sector_membership(fin, u, 2)
    assert not closed_sector_membership(fin, u, 1)


# ---------------------------------------------------------------------------
# covectors of points and cells


def test_covector_of_point_golden():
    # at (0,2,3/2) column 1 is seen from sector 2 and column 2 from sector 3
    g = covector_of_point(V5, [0, 2, "3/2"])
    assert g.tuple_string() == "(3,1,2)"
    # at (0,1,0) both columns 1 and 2 are tied between two sectors
    tie = covector_of_point(V5, [0, 1, 0])
    assert tie.arcs == {(1, 1), (2, 1), (2, 2), (3, 2), (1, 3)}


def test_covector_of_point_requires_finite_input():
    with pytest.raises(DomainError):
        covector_of_point(V5, [0, "inf", 0])


def test_enumerate_cells_invariants():
    cells = enumerate_cells(V5)
    assert cells
    for c in cells:
        assert c.stratum == frozenset()
        assert all(c.graph.col_neighbors(j) for j in range(1, V5.n + 1))
        assert 0 <= c.dimension <= 2
        # sample point reproduces the covector exactly
        sample = cell_sample_point(V5, c)
        assert covector_of_point(V5, sample).arcs == c.graph.arcs


def test_maximal_cells_have_minimal_graphs():
    cells = enumerate_cells(V5)
    tops = maximal_cells(cells)
    top_graphs = [t.graph.arcs for t in tops]
    for c in cells:
        assert any(t <= c.graph.arcs for t in top_graphs)
    assert all(t.dimension == 2 for t in tops)


def test_grid_covectors_appear_in_the_catalog():
    catalog = {c.graph.arcs for c in enumerate_cells(V5)}
    for a in range(-4, 5):
        for b in range(-4, 5):
            g = covector_of_point(V5, [0, a, b])
            assert g.arcs in catalog


def test_tcone_membership_matches_residuation_oracle():
    rng = random.Random(59)
    checked = 0
    while checked < 400:
        v = random_config(rng, rng.randint(2, 3), rng.randint(1, 4))
        if rng.random() < 0.5:
            lam = [Fraction(rng.randint(-3, 3)) for _ in range(v.n)]
            z = trop_combination(v, lam)
            if all(c is INF for c in z):
                continue
        else:
            z = [
                INF if rng.random() < 0.2 else Fraction(rng.randint(-4, 4))
                for _ in range(v.d)
            ]
            if all(c is INF for c in z):
                continue
        point = ProjectivePoint.make(z)
        ok, lam = tcone_membership(v, point)
        assert ok == residuation_member(v, point.coords)
        if ok:
            assert trop_combination(v, lam) == point.coords
        checked += 1


def test_tcone_membership_golden():
    z = ProjectivePoint.make([0, 2, "3/2"])
    ok, lam = tcone_membership(V5, z)
    assert ok
    assert trop_combination(V5, lam) == z.coords
    bad, _ = tcone_membership(V5, ProjectivePoint.make([0, 5, 0]))
    assert not bad


# ---------------------------------------------------------------------------
# halfspaces and signed cells


def halfline_system():
    v = PointConfig.make([[0], [0]])
    return HalfspaceSystem.make(v, G(2, 1, [(1, 1)]))


def test_halfspace_membership():
    h = halfline_system()
    assert halfspace_membership(h, [1, 0])
    assert halfspace_membership(h, [0, 0])  # boundary is included
    assert not halfspace_membership(h, [0, 1])


def test_halfspace_system_validation():
    v = PointConfig.make([[0], [0]])
    with pytest.raises(DomainError):
        HalfspaceSystem.make(v, G(2, 1, []))
    with pytest.raises(DomainError):
        HalfspaceSystem.make(v, G(2, 1, [(1, 1), (2, 1)]), require_proper=True)
    assert HalfspaceSystem.make(v, G(2, 1, [(1, 1)]), require_proper=True)


def test_signed_graph_flips_minus_columns():
    v = PointConfig.make([[0], [0]])
    psi = G(2, 1, [(1, 1)])
    flipped = signed_graph(psi, SignVector.make("-"), v.support())
    assert flipped.arcs == {(2, 1)}
    same = signed_graph(psi, SignVector.all_plus(1), v.support())
    assert same.arcs == psi.arcs


def test_cells_of_halfspace_partition_by_membership():
    h = halfline_system()
    included = {c.graph.arcs for c in cells_of_halfspace(h)}
    for c in enumerate_cells(h.config):
        sample = cell_sample_point(h.config, c)
        assert (c.graph.arcs in included) == halfspace_membership(h, sample)


def test_pure_counter_example_is_pure_but_not_generic():
    h = HalfspaceSystem.make(V8, PSI8, require_proper=True)
    ok, witness = is_pure(h)
    assert ok and witness is None
    generic, _ = is_generic(V8.v)
    assert not generic


def test_signed_cells_of_a_halfline():
    h = halfline_system()
    table = signed_cells(h)
    assert set(table) == {"+", "-"}
    plus = {c.tuple_string() for c in table["+"]}
    minus = {c.tuple_string() for c in table["-"]}
    # the boundary line belongs to both closed halfspaces
    assert "(1,1)" in plus and "(1,1)" in minus
    # each stratum at infinity belongs to exactly one side
    strat_plus = {tuple(sorted(c.stratum)) for c in table["+"]}
    strat_minus = {tuple(sorted(c.stratum)) for c in table["-"]}
    assert (1,) in strat_plus and (1,) not in strat_minus
    assert (2,) in strat_minus and (2,) not in strat_plus


def test_tangent_digraph_golden():
    h = halfline_system()
    cells = {c.graph.arcs: c for c in enumerate_cells(h.config)}
    boundary = cells[frozenset({(1, 1), (2, 1)})]
    t = tangent_digraph(h, boundary)
    assert t.columns == (1,)
    assert t.row_to_col == {(1, 1)}
    assert t.col_to_row == {(2, 1)}
    inner = cells[frozenset({(1, 1)})]
    t2 = tangent_digraph(h, inner)
    assert t2.columns == ()  # the fully selected column disappears


# ---------------------------------------------------------------------------
# projective strata


def test_boundary_matrix_golden():
    lab = boundary_matrix(VP, {1})
    assert lab.row_labels == (2, 3)
    assert lab.col_labels == (5, 6)
    assert lab.config.v.entries == (
        (Fraction(0), INF),
        (INF, Fraction(0)),
    )


def test_boundary_matrix_empty_stratum():
    v = PointConfig.make([[0, 0], [1, 2]])
    lab = boundary_matrix(v, {1})
    assert lab.config is None
    assert lab.col_labels == ()
    with pytest.raises(DomainError):
        boundary_matrix(v, {1, 2})


def test_projective_decomposition_strata():
    cells = projective_decomposition(VP)
    strata = {tuple(sorted(c.stratum)) for c in cells}
    assert () in strata and (1,) in strata
    stratum1 = [c for c in cells if c.stratum == frozenset({1})]
    tuples = {c.tuple_string() for c in stratum1}
    assert "(•,5,6)" in tuples
    target = next(c for c in stratum1 if c.tuple_string() == "(•,5,6)")
    assert target.dimension == 1
    assert target.graph.arcs == {(2, 5), (3, 6)}
    # boundary samples are infinite exactly on the stratum
    sample = cell_sample_point(VP, target)
    assert sample[0] is INF and sample[1] is not INF and sample[2] is not INF


def test_cell_boundary_restriction_golden():
    torus = {c.tuple_string(): c for c in enumerate_cells(VP)}
    big = torus["(1234,5,6)"]
    restricted = cell_boundary_restriction(VP, big.graph, {1})
    assert restricted.arcs == {(2, 5), (3, 6)}


def test_projective_decomposition_counts_empty_strata():
    v = PointConfig.make([[0, 0], [1, 2]])
    cells = projective_decomposition(v)
    boundary = [c for c in cells if c.stratum]
    assert {tuple(sorted(c.stratum)) for c in boundary} == {(1,), (2,)}
    for c in boundary:
        assert c.graph.arcs == frozenset()
        assert c.dimension == 0
