import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from kgraph_homology.chain_maps import linear
from kgraph_homology.chains import Chain, Coefficients, Z
from kgraph_homology.cubical import (CochainTable, basis, boundary_matrix, boundary_with_tail, coboundary,
                                     cube_boundary, cube_tails, cubical_cohomology, cubical_homology,
                                     is_cocycle, random_table, uct_check, zero_table)
from kgraph_homology.kgraph import omega, torus2
from kgraph_homology.linalg import AbelianGroup
from conftest import GRAPHS, build, one_vertex_2graph
from test_linalg import brute_mod_homology, killed_counts

ZZ = lambda r, *t: AbelianGroup(r, tuple(t))


def random_one_vertex(seed):
    rng = random.Random(seed)
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    src = list(itertools.product(range(a), range(b)))
    dst = [(j, i) for i, j in src]
    rng.shuffle(dst)
    return one_vertex_2graph(a, b, dict(zip(src, dst)))


@pytest.mark.parametrize("reduced", [False, True])
def test_boundary_squares_to_zero(graph, reduced):
    for n in range(graph.k + 1):
        assert (boundary_matrix(graph, n, reduced) @ boundary_matrix(graph, n + 1, reduced)).is_zero()


def test_hand_counted_boundaries():
    # omega(1,2): edges 1@0 : 1 -> 0 and 1@1 : 2 -> 1; boundary is source minus range
    g = omega(1, 2)
    assert [v.anchor for v in basis(g).cubes(0)] == ["0", "1", "2"]
    assert boundary_matrix(g, 1).to_rows() == [[-1, 0], [1, -1], [0, 1]]
    assert boundary_matrix(g, 0, reduced=True).to_rows() == [[1, 1, 1]]
    # one-vertex graphs have zero boundaries
    for name in ("torus2", "fig8", "singleLoop"):
        g = build(name)
        for n in range(g.k + 2):
            assert boundary_matrix(g, n).is_zero()
    # the unit square: 4 vertices, 4 edges, 1 face
    g = omega(2, (1, 1))
    (sq,) = basis(g).cubes(2)
    assert sorted(cube_boundary(g, sq).values()) == [-1, -1, 1, 1]


def test_known_homology():
    t = torus2()
    assert [cubical_homology(t, n) for n in range(3)] == [ZZ(1), ZZ(2), ZZ(1)]
    assert cubical_cohomology(t, 2) == ZZ(1)
    assert [cubical_homology(build("fig8"), n) for n in range(2)] == [ZZ(1), ZZ(2)]
    assert [cubical_homology(build("singleLoop"), n) for n in range(2)] == [ZZ(1), ZZ(1)]


def test_reduced_homology_of_grids_vanishes(omega_graph):
    for n in range(-1, omega_graph.k + 2):
        assert cubical_homology(omega_graph, n, reduced=True).is_zero


def test_out_of_range_degrees_vanish(graph):
    for n in (-2, -1, graph.k + 1, graph.k + 2):
        assert cubical_homology(graph, n).is_zero
        assert cubical_cohomology(graph, n).is_zero
        assert cubical_homology(graph, n, Coefficients(3)).is_zero


@pytest.mark.parametrize("m", [2, 3, 4])
def test_universal_coefficients(graph, m):
    for n in range(graph.k + 1):
        assert uct_check(graph, n, m)


@pytest.mark.parametrize("seed", [0, 130, 208, 219, 291] + list(range(1, 12)))
def test_torsion_graphs(seed):
    g = random_one_vertex(seed)
    a = sum(1 for e in g.edges.values() if e.color == 1)
    b = len(g.edges) - a
    hs = [cubical_homology(g, n) for n in range(3)]
    assert hs[0] == ZZ(1)
    assert sum((-1) ** n * h.free_rank for n, h in enumerate(hs)) == 1 - a - b + a * b
    assert not hs[2].torsion
    for m in (2, 3, 4):
        for n in range(3):
            assert uct_check(g, n, m)


@pytest.mark.parametrize("seed", [0, 130, 208])
@pytest.mark.parametrize("m", [2, 3])
def test_mod_homology_matches_brute_force(seed, m):
    g = random_one_vertex(seed)
    for n in range(3):
        A, B = boundary_matrix(g, n).to_rows(), boundary_matrix(g, n + 1).to_rows()
        if not B or not B[0]:
            B = [[0] for _ in range(len(A[0]) if A and A[0] else basis(g).size(n))]
        if not A:
            A = [[0] * len(B)]
        H = cubical_homology(g, n, Coefficients(m))
        assert killed_counts(H, m) == brute_mod_homology(A, B, m)


def test_torsion_example_values():
    assert cubical_homology(random_one_vertex(0), 1) == ZZ(2, 2)
    assert cubical_homology(random_one_vertex(208), 1) == ZZ(2, 3)
    assert cubical_homology(random_one_vertex(208), 1, Coefficients(3)) == ZZ(0, 3, 3, 3)


def test_coboundary_squares_to_zero(graph):
    rng = random.Random(7)
    for n in range(graph.k):
        f = random_table(graph, n, Z, rng)
        assert coboundary(graph, coboundary(graph, f)) == zero_table(graph, n + 2)
        assert is_cocycle(graph, coboundary(graph, f)) == (True, None)


def test_coboundary_is_adjoint_to_boundary(graph):
    rng = random.Random(3)
    for n in range(graph.k):
        f = random_table(graph, n, Z, rng)
        df = coboundary(graph, f)
        for cube in basis(graph).cubes(n + 1):
            assert df[cube] == f.evaluate(cube_boundary(graph, cube))


def test_non_closed_table_has_witness():
    g = omega(2, (2, 2))
    cubes = basis(g).cubes(1)
    f = CochainTable(1, Z, {c: int(i == 0) for i, c in enumerate(cubes)})
    ok, witness = is_cocycle(g, f)
    assert not ok
    assert witness in basis(g).cubes(2)
    assert cubes[0] in cube_boundary(g, witness)


def test_table_totality():
    t = torus2()
    with pytest.raises(ValueError):
        CochainTable(1, Z, {t.edge("e"): 1}).check_total(t)


def test_mod_tables_reduce():
    f = CochainTable(1, Coefficients(3), {torus2().edge("e"): 7, torus2().edge("f"): -1})
    assert set(f.values.values()) == {1, 2}


def test_tail_resolution_squares_to_zero(graph):
    bound = (2,) * graph.k
    for n in range(graph.k + 1):
        for x in cube_tails(graph, n, bound):
            assert linear(lambda y: boundary_with_tail(graph, y),
                          boundary_with_tail(graph, x)) == Chain()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_one_vertex_laws(seed):
    g = random_one_vertex(seed)
    for n in range(3):
        assert (boundary_matrix(g, n) @ boundary_matrix(g, n + 1)).is_zero()
        assert uct_check(g, n, 2)
