"""Acceptance gate: twelve end-to-end checks, each with a time budget.

Every assertion is an exact integer equality (tolerance zero).  Each
check prints one scoreboard line

    ACCEPTANCE <k> <label>: PASS|FAIL (<elapsed>, budget <limit>)

so a ``pytest -v -s`` run shows the whole gate at a glance.  A check
fails if any assertion fails or if it runs over its budget.
"""

import time

from unimod.catalog import make
from unimod.graphs import (
    Multigraph,
    cographic_system,
    deleted_laplacian,
    graphic_system,
    spanning_trees,
)
from unimod.intlinalg import (
    IntMatrix,
    determinant,
    hermite_form,
    square_minors,
)
from unimod.lattice import (
    build_polytope_report,
    discriminant,
    generation_index,
    lattice_of,
    polytope_points,
    short_vector_census,
)
from unimod.systems import (
    are_isomorphic,
    automorphism_count,
    complexity,
    enumerate_bases,
    from_matrix,
    gale_dual,
    gram_matrix,
    multiplicity_classes,
    split_upsilon,
)

# 0/1 presentation of the ten-form rank-5 self-dual system; every maximal
# minor is 0 or +-2, so the standard form below cannot be read off from a
# row subset without the exact division step in from_matrix.
Q_RAW = [
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 0, 1, 0, 1],
    [1, 0, 0, 1, 0],
    [0, 1, 0, 0, 1],
]


def catalog_sweep():
    """Every built-in system with at most 12 rows, plus both derived
    systems of every built-in graph, labelled for failure messages."""
    out = [(f"upsilon:{k}", make("upsilon", k)) for k in (1, 2, 3)]
    out += [(f"sigma:{n}", make("sigma", n)) for n in range(1, 9)]
    out += [("pair2", make("pair2")), ("triangle3", make("triangle3")),
            ("bixby_seymour_raw", make("bixby_seymour_raw")),
            ("bixby_seymour", make("bixby_seymour"))]
    graphs = [(f"theta:{n}", make("theta", n)) for n in range(2, 7)]
    graphs += [(f"cycle:{n}", make("cycle", n)) for n in range(3, 7)]
    graphs += [("complete:4", make("complete", 4)),
               ("complete:5", make("complete", 5))]
    for label, g in graphs:
        out.append((f"graphic({label})", graphic_system(g)))
        out.append((f"cographic({label})", cographic_system(g)))
    return [(label, s) for label, s in out if s.N <= 12]


def _criterion(num, label, budget_s, body):
    t0 = time.perf_counter()
    failure = None
    try:
        body()
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - t0
    status = "PASS" if failure is None and elapsed < budget_s else "FAIL"
    print(f"ACCEPTANCE {num:>2} {label}: {status}"
          f" ({elapsed:.2f}s, budget {budget_s}s)")
    if failure is not None:
        raise failure
    assert elapsed < budget_s, (
        f"time budget exceeded: {elapsed:.2f}s >= {budget_s}s")


def test_criterion_01_sigma_family():
    def body():
        for n in range(1, 9):
            s = make("sigma", n)
            assert complexity(s) == n
            vecs = {p.vector for p in polytope_points(s)}
            assert vecs == {(0,) * n, (1,) * n, (-1,) * n}
            rep = build_polytope_report(s)
            assert len(rep.vertices) == 2
            assert 2 * len(rep.facet_pairs) == 2
    _criterion(1, "repeated-form family", 1, body)


def test_criterion_02_small_systems():
    def body():
        assert complexity(make("pair2")) == 1
        assert complexity(make("triangle3")) == 3
    _criterion(2, "two small plane systems", 1, body)


def test_criterion_03_cayley_counts():
    def body():
        for n, expect in ((3, 3), (4, 16), (5, 125)):
            assert expect == n ** (n - 2)
            assert complexity(cographic_system(make("complete", n))) == expect
        for n in (3, 4):
            assert len(spanning_trees(make("complete", n))) == n ** (n - 2)
    _criterion(3, "complete-graph tree counts", 10, body)


def test_criterion_04_determinant_vs_enumeration():
    def body():
        for label, s in catalog_sweep():
            det = determinant(gram_matrix(s))
            count = len(enumerate_bases(s))
            assert det == count, f"{label}: det {det} != count {count}"
    _criterion(4, "Gram determinant equals base count", 30, body)


def test_criterion_05_ten_form_golden_report():
    def body():
        for v in square_minors(IntMatrix.from_rows(Q_RAW), 5):
            assert v in (-2, 0, 2)
        r = make("bixby_seymour")
        assert from_matrix(Q_RAW).a_matrix == r.a_matrix
        for k in range(1, 6):
            assert all(v in (-1, 0, 1)
                       for v in square_minors(r.a_matrix, k))
        assert complexity(r) == 162
        corr = are_isomorphic(gale_dual(r), r)
        assert corr is not None and corr.verify(gale_dual(r), r)
        rep = build_polytope_report(r)
        assert len(rep.points) == 73
        assert rep.by_square() == {4: 30, 6: 30, 10: 12}
        assert len(rep.vertices) == 12
        assert 2 * len(rep.facet_pairs) == 20
        for f in rep.facet_pairs:
            assert len(f.plus_vertices) == 6
            assert len(f.minus_vertices) == 6
        lat = lattice_of(r)
        shortest = [p.vector for p in polytope_points(r)
                    if sum(x * x for x in p.vector) == 4]
        assert generation_index(lat, shortest) == 1
        census = short_vector_census(r)
        assert census.units() == 0
        assert census.roots() == 0
        assert census.counts[3] == 0
        assert automorphism_count(r) == 1440
    _criterion(5, "ten-form system golden report", 60, body)


def test_criterion_06_graph_duality():
    def body():
        graphs = [make("theta", n) for n in range(2, 7)]
        graphs += [make("cycle", n) for n in range(3, 7)]
        graphs.append(make("complete", 4))
        for g in graphs:
            cyc, cut = graphic_system(g), cographic_system(g)
            assert are_isomorphic(gale_dual(cyc), cut) is not None
            assert are_isomorphic(gale_dual(cut), cyc) is not None
            assert complexity(cyc) == complexity(cut)
    _criterion(6, "cycle/cut space duality", 10, body)


def test_criterion_07_double_dual_and_units():
    def body():
        for label, s in catalog_sweep():
            core = split_upsilon(s).core
            dd = gale_dual(gale_dual(s))
            assert are_isomorphic(dd, core) is not None, label
            assert split_upsilon(gale_dual(s)).s == 0, label
        path3 = Multigraph.build(3, [(1, 2), (2, 3)])
        assert cographic_system(path3).a_matrix == make("upsilon", 2).a_matrix
    _criterion(7, "double dual recovers the core", 5, body)


def test_criterion_08_roots_track_multiplicity():
    def body():
        for n in range(2, 7):
            s = make("sigma", n)
            census = short_vector_census(gale_dual(s))
            # the census counts v and -v separately
            assert census.roots() == 2 * (n * (n - 1) // 2)
            assert census.units() == 0
            classes = multiplicity_classes(s)
            assert len(classes) == 1 and len(classes[0]) == n
        b = make("bixby_seymour")
        assert short_vector_census(gale_dual(b)).roots() == 0
        classes = multiplicity_classes(b)
        assert len(classes) == 10
        assert all(len(c) == 1 for c in classes)
    _criterion(8, "dual roots match repeated forms", 5, body)


def test_criterion_09_projection_and_reflexivity():
    def body():
        sweep = catalog_sweep()
        escaping = []
        for label, s in sweep:
            rep = build_polytope_report(s)
            assert rep.reflexive_verified, f"reflexivity fails for {label}"
            if not rep.zonotope_verified:
                escaping.append(label)
        assert not escaping, (
            "for these systems some sign vector projects onto the column "
            "span strictly outside the polytope, so the cube-projection "
            f"identity fails ({len(escaping)} of {len(sweep)}): "
            + ", ".join(escaping))
    _criterion(9, "cube projection and reflexivity", 60, body)


def test_criterion_10_k4_rhombic_dodecahedron():
    def body():
        g = make("complete", 4)
        cyc, cut = graphic_system(g), cographic_system(g)
        assert are_isomorphic(cyc, cut) is not None
        rep = build_polytope_report(cut)
        assert 2 * len(rep.facet_pairs) == 12
        assert len(rep.vertices) == 14
        assert discriminant(lattice_of(cut)) == 16
    _criterion(10, "K4 rhombic dodecahedron", 5, body)


def test_criterion_11_theta_family_lattices():
    def body():
        for n in range(2, 7):
            lat = lattice_of(graphic_system(make("theta", n)))
            assert lat.complement_basis == ((1,) * n,)
            assert discriminant(lat) == n
            gens = lat.basis_columns.transpose()
            target = IntMatrix.from_rows(
                [[1 if j == i else (-1 if j == n - 1 else 0)
                  for j in range(n)] for i in range(n - 1)])
            h1, _, r1 = hermite_form(gens)
            h2, _, r2 = hermite_form(target)
            assert r1 == r2 == n - 1
            assert h1.to_lists() == h2.to_lists()
        rep = build_polytope_report(graphic_system(make("theta", 3)))
        assert len(rep.vertices) == 6
    _criterion(11, "sum-zero lattices and hexagon", 2, body)


def test_criterion_12_kirchhoff():
    def body():
        for g in (make("cycle", 3), make("theta", 4),
                  make("complete", 4), make("complete", 5)):
            assert determinant(deleted_laplacian(g)) == len(spanning_trees(g))
    _criterion(12, "deleted-Laplacian tree counts", 5, body)
