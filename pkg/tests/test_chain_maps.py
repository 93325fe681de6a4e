import itertools

import pytest
from hypothesis import given, settings, strategies as st

from kgraph_homology.categorical import ComposableTuple, make_tuple, tuple_boundary
from kgraph_homology.chain_maps import (all_cube_tails, all_tuples, compose_perm, cubulate, cycle,
                                        gluing_holds, gluing_instances, linear, m_index,
                                        permutations_with_sign, rectangular_chain, sign, staircase,
                                        transposition, triangulate, verify_chain_map_identities,
                                        verify_naturality)
from kgraph_homology.chains import UNIT, Chain
from kgraph_homology.cubical import CubeTail, boundary_with_tail, cube_tail
from kgraph_homology.kgraph import KGraphError, KGraphMorphism, collapse, omega, torus2
from conftest import build, hexagon_broken


def cycle_sign(perm):
    """Sign from the cycle decomposition, independent of inversion counting."""
    seen, s = set(), 1
    for i in range(1, len(perm) + 1):
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
            length += 1
        if length:
            s *= (-1) ** (length - 1)
    return s


@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_sign_is_a_homomorphism(p, q):
    assert sign(p) == cycle_sign(p)
    assert sign(compose_perm(p, q)) == sign(p) * sign(q)


def test_named_permutations():
    assert transposition(4, 2) == (1, 3, 2, 4)
    assert cycle(4, 2) == (1, 3, 4, 2) and cycle(4, 4) == (1, 2, 3, 4)
    assert sign(cycle(5, 1)) == 1 and sign(cycle(4, 1)) == -1
    assert sum(1 for _ in permutations_with_sign(4)) == 24


def test_triangulation_by_hand():
    t = torus2()
    sq = t.morphism(["e", "f"])
    out = triangulate(t, cube_tail(t, sq))
    assert out == Chain({make_tuple([t.edge("e"), t.edge("f"), t.identity("v")]): 1,
                         make_tuple([t.edge("f"), t.edge("e"), t.identity("v")]): -1})
    v = t.identity("v")
    assert triangulate(t, cube_tail(t, v)) == Chain.of(make_tuple([v]))


def test_rectangle_tiles_by_hand():
    t = torus2()
    lam = t.morphisms((3, 2))[0]
    tiles = rectangular_chain(t, CubeTail(lam, t.identity("v")), (1, 2))
    assert sum(tiles.values()) == 6 and set(tiles.values()) == {1}
    # flat in color 2, so there are no unit {1,2}-squares
    flat = t.morphisms((3, 0))[0]
    assert rectangular_chain(t, CubeTail(flat, t.identity("v")), (1, 2)) == Chain()
    with pytest.raises(KGraphError):
        rectangular_chain(t, CubeTail(lam, t.identity("v")), (1,))


def test_staircase_corners():
    g = omega(2, (2, 2))
    a, b = g.morphism(["1@0,0", "2@1,0"]), g.morphism(["1@1,1"])
    assert staircase(g, [a], (1,)) == ((0, 1), (1, 1))
    assert staircase(g, [a], (2,)) == ((0, 0), (0, 1))
    assert staircase(g, [a, b], (1, 2)) == ((0, 1), (1, 1))


def test_m_index():
    assert m_index((), 0, 2) == 0
    assert m_index((2,), 1, 2) == 0 and m_index((2,), 2, 2) == 1
    assert [m_index((1, 3), q, 3) for q in range(4)] == [0, 1, 1, 2]
    with pytest.raises(KGraphError):
        m_index((1,), 4, 3)


def test_identities_on_all_graphs(graph):
    report = verify_chain_map_identities(graph, (2,) * graph.k)
    assert report.ok, report.to_json()
    assert report.max_length == graph.k + 1
    for name in ("triangulate-chain-map", "cubulate-chain-map", "cubulate-triangulate-identity"):
        assert report.get(name).generators_tested > 0


def test_identities_with_longer_tuples():
    g = omega(2, (2, 2))
    assert verify_chain_map_identities(g, (2, 2), max_length=4).ok


def test_report_flags_truncation():
    assert verify_chain_map_identities(torus2(), (1, 1)).truncated
    assert not verify_chain_map_identities(omega(2, (1, 1)), (1, 1)).truncated


def test_cubulation_needs_valid_graph():
    g = hexagon_broken()
    with pytest.raises(KGraphError):
        verify_chain_map_identities(g, (1, 1, 1))


def test_broken_hexagon_breaks_cubulation():
    g = hexagon_broken()
    g.validated = True          # bypass the validator on purpose
    report = verify_chain_map_identities(g, (1, 1, 1), max_length=3)
    check = report.get("cubulate-chain-map")
    assert not check.passed and check.witness


def eps(n):
    return (-1) ** (n * (n - 1) // 2)


@pytest.mark.parametrize("name", ["torus2", "omega(2,(2,2))", "omega(3,(1,1,1))"])
def test_reversed_order_cubulation_is_signed_chain_map(name):
    g = build(name)
    bound = (2,) * g.k
    cub = lambda x: cubulate(g, x, "reversed")
    for t in all_tuples(g, bound, g.k + 1):
        if t is UNIT or len(t) == 1:
            continue
        n = len(t) - 1
        lhs = linear(cub, tuple_boundary(g, t)).scaled(eps(n - 1))
        rhs = linear(lambda x: boundary_with_tail(g, x), cub(t)).scaled(eps(n))
        assert lhs == rhs, t
    for x in all_cube_tails(g, bound):
        if x is not UNIT:
            n = bin(sum(1 << i for i, d in enumerate(x.cube.degree) if d)).count("1")
            assert linear(cub, triangulate(g, x)) == Chain.of(x).scaled(eps(n))


def test_gluing():
    g = omega(2, (2, 2))
    instances = list(gluing_instances(g, (2, 2)))
    assert instances
    assert all(gluing_holds(g, *inst) for inst in instances)
    t = torus2()
    assert all(gluing_holds(t, *inst) for inst in gluing_instances(t, (2, 2)))


@pytest.mark.parametrize("domain,codomain", [("fig8", "singleLoop"), ("omega(2,(1,1))", "torus2"),
                                             ("omega(2,(2,2))", "torus2")])
def test_naturality(domain, codomain):
    phi = collapse(build(domain), build(codomain))
    report = verify_naturality(phi, (2,) * phi.domain.k)
    assert report.ok, report.to_json()


def test_naturality_rejects_non_morphisms():
    D, C = omega(2, (1, 1)), torus2()
    bad = KGraphMorphism(D, C, {v: "v" for v in D.vertices}, {e: "e" for e in D.edges})
    with pytest.raises(KGraphError):
        verify_naturality(bad)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_identities_on_random_one_vertex_graphs(seed):
    from test_cubical import random_one_vertex
    g = random_one_vertex(seed)
    report = verify_chain_map_identities(g, (1, 1), max_length=3)
    assert report.ok, report.to_json()
