"""Graph-derived systems: cycles, cuts, tree counting, stabilization."""

import pytest

from unimod.catalog import make
from unimod.errors import (
    CapError,
    ConnectivityError,
    DegenerateSystemError,
    PreconditionError,
)
from unimod.graphs import (
    Multigraph,
    bfs_tree,
    bridges,
    cographic_system,
    deleted_laplacian,
    graphic_system,
    incidence_matrix,
    is_connected,
    laplacian,
    loops,
    spanning_trees,
    stabilize,
)
from unimod.intlinalg import determinant
from unimod.systems import are_isomorphic, complexity


def _theta(n):
    return Multigraph.build(2, [(1, 2)] * n)


def _triangle():
    return Multigraph.build(3, [(1, 2), (2, 3), (3, 1)])


def _path(n):
    return Multigraph.build(n, [(i, i + 1) for i in range(1, n)])


# ---------------------------------------------------------------------------
# basic structure


def test_build_validates_endpoints():
    with pytest.raises(PreconditionError):
        Multigraph.build(2, [(1, 3)])
    with pytest.raises(PreconditionError):
        Multigraph.build(0, [])


def test_incidence_matrix_signs():
    g = Multigraph.build(3, [(1, 2), (3, 2), (1, 1)])
    m = incidence_matrix(g)
    assert m.to_lists() == [[-1, 1, 0], [0, 1, -1], [0, 0, 0]]  # loop row zero


def test_connectivity_and_loops():
    assert is_connected(_triangle())
    assert not is_connected(Multigraph.build(4, [(1, 2), (3, 4)]))
    g = Multigraph.build(2, [(1, 1), (1, 2)])
    assert loops(g) == (0,)
    assert bridges(g) == (1,)


def test_bridges_requires_connected():
    with pytest.raises(ConnectivityError):
        bridges(Multigraph.build(3, [(1, 2)]))


def test_bfs_tree_deterministic_first_edges():
    g = Multigraph.build(3, [(2, 3), (1, 2), (1, 3)])
    tree, parent = bfs_tree(g)
    assert tree == (1, 2)          # earliest edges reaching each new vertex
    assert parent[2] == (1, 1) and parent[3] == (2, 1)


# ---------------------------------------------------------------------------
# spanning trees / Kirchhoff


@pytest.mark.parametrize("g,count", [
    (_theta(3), 3),
    (_triangle(), 3),
    (_path(4), 1),
    (Multigraph.build(1, []), 1),
])
def test_spanning_tree_counts(g, count):
    assert len(spanning_trees(g)) == count


def test_spanning_trees_disconnected_none():
    assert spanning_trees(Multigraph.build(4, [(1, 2), (3, 4)])) == []


def test_spanning_trees_cap():
    with pytest.raises(CapError):
        spanning_trees(make("complete", 5), cap=9)


def test_laplacian_row_sums_zero():
    lap = laplacian(make("complete", 4))
    for i in range(4):
        assert sum(lap[i, j] for j in range(4)) == 0


@pytest.mark.parametrize("g", [
    _triangle(), _theta(4), make("complete", 4), make("complete", 5)])
def test_kirchhoff_matches_enumeration(g):
    assert determinant(deleted_laplacian(g)) == len(spanning_trees(g))


# ---------------------------------------------------------------------------
# graphic / cographic systems


def test_graphic_theta3_exact_matrix():
    s = graphic_system(_theta(3))
    assert s.a_matrix.to_lists() == [[1, 0], [0, 1], [-1, -1]]
    assert s.labels == ("e1", "e2", "e3")


def test_cographic_theta_is_repeated_form():
    for n in range(2, 6):
        assert are_isomorphic(cographic_system(_theta(n)),
                              make("sigma", n)) is not None


def test_graphic_cycle_is_repeated_form():
    for n in range(3, 7):
        s = graphic_system(make("cycle", n))
        assert s.n == 1 and s.N == n
        assert are_isomorphic(s, make("sigma", n)) is not None


def test_graphic_of_tree_degenerate():
    with pytest.raises(DegenerateSystemError):
        graphic_system(_path(3))


def test_cographic_of_loop_only_degenerate():
    with pytest.raises(DegenerateSystemError):
        cographic_system(Multigraph.build(1, [(1, 1)]))


def test_bridge_rows_absent_from_graphic():
    # triangle plus a pendant edge: the bridge contributes no cycle row
    g = Multigraph.build(4, [(1, 2), (2, 3), (3, 1), (3, 4)])
    s = graphic_system(g)
    assert s.N == 3
    assert s.labels == ("e1", "e2", "e3")


def test_loop_rows_absent_from_cographic():
    g = Multigraph.build(2, [(1, 1), (1, 2), (1, 2)])
    s = cographic_system(g)
    assert s.N == 2


def test_cycle_and_cut_spaces_orthogonal():
    # fundamental cycles pair to zero with fundamental cuts, edge by edge
    for g in (make("complete", 4), make("complete", 5), _theta(4)):
        gr, co = graphic_system(g), cographic_system(g)
        cyc = {gr.label(i): gr.a_matrix.row(i) for i in range(gr.N)}
        cut = {co.label(i): co.a_matrix.row(i) for i in range(co.N)}
        edges = [f"e{k + 1}" for k in range(g.edge_count)]
        for ci in range(gr.n):
            for cj in range(co.n):
                s = sum(cyc[e][ci] * cut[e][cj] for e in edges
                        if e in cyc and e in cut)
                # edges missing from one side contribute zero coefficients
                assert s == 0


def test_graphic_cographic_complexity_equal():
    for g in (make("complete", 4), _theta(5), make("cycle", 5)):
        assert complexity(graphic_system(g)) == complexity(cographic_system(g))


# ---------------------------------------------------------------------------
# stabilization


def test_stabilize_removes_loops_and_bridges():
    g = Multigraph.build(4, [(1, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
    h = stabilize(g)
    assert h.vertex_count == 3 and h.edge_count == 3
    assert not loops(h) and not bridges(h)


def test_stabilize_fixpoint_returns_same_object():
    g = _triangle()
    assert stabilize(g) is g


def test_stabilize_tree_collapses_to_point():
    h = stabilize(_path(4))
    assert h.vertex_count == 1 and h.edge_count == 0
