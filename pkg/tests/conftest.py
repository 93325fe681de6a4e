import pytest

from kgraph_homology.kgraph import Edge, KGraph, Square, fig8, omega, single_loop, torus2

GRAPHS = {
    "omega(1,2)": lambda: omega(1, 2),
    "omega(2,(1,1))": lambda: omega(2, (1, 1)),
    "omega(2,(2,2))": lambda: omega(2, (2, 2)),
    "omega(3,(1,1,1))": lambda: omega(3, (1, 1, 1)),
    "torus2": torus2,
    "fig8": fig8,
    "singleLoop": single_loop,
}
OMEGAS = [name for name in GRAPHS if name.startswith("omega")]


def build(name: str) -> KGraph:
    return GRAPHS[name]()


def hexagon_broken() -> KGraph:
    """One vertex, loops a, b (colors 1, 2) and c0, c1, c2 (color 3).

    Each color pair is a valid 2-graph, but the squares against c permute its
    index by (0 1) along a and by (1 2) along b, so the two braid orders of a
    three-colored word disagree.
    """
    alpha, beta = {0: 1, 1: 0, 2: 2}, {0: 0, 1: 2, 2: 1}
    edges = [Edge("a", 1, "v", "v"), Edge("b", 2, "v", "v")]
    edges += [Edge(f"c{i}", 3, "v", "v") for i in range(3)]
    squares = [Square(("a", "b"), ("b", "a"))]
    squares += [Square(("a", f"c{i}"), (f"c{alpha[i]}", "a")) for i in range(3)]
    squares += [Square(("b", f"c{i}"), (f"c{beta[i]}", "b")) for i in range(3)]
    return KGraph(3, ["v"], edges, squares)


def torus_missing_square() -> KGraph:
    return KGraph(2, ["v"], [Edge("e", 1, "v", "v"), Edge("f", 2, "v", "v")], [])


@pytest.fixture(params=list(GRAPHS))
def graph(request):
    return build(request.param)


@pytest.fixture(params=OMEGAS)
def omega_graph(request):
    return build(request.param)


def one_vertex_2graph(blue: int, red: int, pairing) -> KGraph:
    """Loops e0.. (color 1) and f0.. (color 2); ``pairing`` maps (i, j) to the
    (j', i') with e_i f_j = f_j' e_i'. Any bijection gives a valid 2-graph."""
    edges = [Edge(f"e{i}", 1, "v", "v") for i in range(blue)]
    edges += [Edge(f"f{j}", 2, "v", "v") for j in range(red)]
    squares = [Square((f"e{i}", f"f{j}"), (f"f{jj}", f"e{ii}")) for (i, j), (jj, ii) in pairing.items()]
    return KGraph(2, ["v"], edges, squares)
