"""Cubical chains and cochains of a k-graph with constant coefficients."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .chains import UNIT, Chain, Coefficients, Z
from .kgraph import KGraph, KGraphError, Morphism, color_type, dleq, require_valid
from .linalg import AbelianGroup, SparseIntMatrix, homology_of_pair, homology_of_pair_mod


class CubeTail(NamedTuple):
    """A cube together with a morphism leaving its source."""

    cube: Morphism
    tail: Morphism

    def __repr__(self) -> str:
        return f"({self.cube!r}, {self.tail!r})"


class CubicalBasis:
    """Stable positions for Q_n, built once per graph."""

    def __init__(self, g: KGraph):
        self.graph = g
        self.per_degree = {n: g.cubes(n) for n in range(g.k + 1)}
        self.index = {n: {c: i for i, c in enumerate(cs)} for n, cs in self.per_degree.items()}

    def cubes(self, n: int) -> list[Morphism]:
        return self.per_degree.get(n, [])

    def size(self, n: int, reduced: bool = False) -> int:
        if reduced and n == -1:
            return 1
        return len(self.cubes(n))


def basis(g: KGraph) -> CubicalBasis:
    b = getattr(g, "_cubical_basis", None)
    if b is None:
        b = g._cubical_basis = CubicalBasis(require_valid(g))
    return b


def cube_boundary(g: KGraph, cube: Morphism) -> Chain:
    """Sum over j, l of (-1)^(j+l) F^l_j, as a chain of cubes."""
    out = Chain()
    for j in range(1, len(color_type(cube)) + 1):
        for l in (0, 1):
            out.add(g.face(cube, j, l), (-1) ** (j + l))
    return out


def boundary_matrix(g: KGraph, n: int, reduced: bool = False) -> SparseIntMatrix:
    """Matrix of the boundary from degree n to n-1 in basis order."""
    B = basis(g)
    rows, cols = B.size(n - 1, reduced), B.size(n, reduced)
    if n == 0:
        return SparseIntMatrix(rows, cols, {(0, j): 1 for j in range(cols)} if reduced else {})
    if n < 0 or n > g.k:
        return SparseIntMatrix.zeros(rows, cols)
    ent = {}
    for j, cube in enumerate(B.cubes(n)):
        for face, c in cube_boundary(g, cube).items():
            ent[B.index[n - 1][face], j] = c
    return SparseIntMatrix(rows, cols, ent)


def cubical_homology(g: KGraph, n: int, coeff: Coefficients = Z, reduced: bool = False) -> AbelianGroup:
    A, B = boundary_matrix(g, n, reduced), boundary_matrix(g, n + 1, reduced)
    if coeff.modulus is None:
        return homology_of_pair(A, B)
    return homology_of_pair_mod(A, B, coeff.modulus)


def cubical_cohomology(g: KGraph, n: int, coeff: Coefficients = Z) -> AbelianGroup:
    # the coboundary out of degree n is the transpose of the boundary into it
    A, B = boundary_matrix(g, n + 1).transpose(), boundary_matrix(g, n).transpose()
    if coeff.modulus is None:
        return homology_of_pair(A, B)
    return homology_of_pair_mod(A, B, coeff.modulus)


def uct_prediction(g: KGraph, n: int, m: int) -> AbelianGroup:
    """Hom(H_n, Z/m) + Ext(H_{n-1}, Z/m) from integral homology."""
    return cubical_homology(g, n).hom_to_cyclic(m) + cubical_homology(g, n - 1).ext_to_cyclic(m)


def uct_check(g: KGraph, n: int, m: int) -> bool:
    return cubical_cohomology(g, n, Coefficients(m)) == uct_prediction(g, n, m)


# -- cochain tables ------------------------------------------------------------

@dataclass
class CochainTable:
    """A value for every cube of Q_degree."""

    degree: int
    coeff: Coefficients
    values: dict[Morphism, int]

    def __post_init__(self):
        self.values = {c: self.coeff.reduce(v) for c, v in self.values.items()}

    def __getitem__(self, cube: Morphism) -> int:
        return self.values[cube]

    def check_total(self, g: KGraph) -> None:
        cubes = basis(g).cubes(self.degree)
        missing = [c for c in cubes if c not in self.values]
        if missing:
            raise KGraphError(f"cochain table has no value on {missing[0]!r}")
        extra = set(self.values) - set(cubes)
        if extra:
            raise KGraphError(f"cochain table has a value on non-cube {sorted(map(repr, extra))[0]}")

    def nonzero(self) -> dict[Morphism, int]:
        return {c: v for c, v in self.values.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CochainTable):
            return NotImplemented
        return (self.degree, self.coeff) == (other.degree, other.coeff) and self.nonzero() == other.nonzero()

    def evaluate(self, chain: dict) -> int:
        """Pair with a chain of cubes or of (cube, tail) pairs."""
        total = 0
        for gen, c in chain.items():
            cube = gen.cube if isinstance(gen, CubeTail) else gen
            total += c * self.values[cube]
        return self.coeff.reduce(total)


def zero_table(g: KGraph, n: int, coeff: Coefficients = Z) -> CochainTable:
    return CochainTable(n, coeff, {c: 0 for c in basis(g).cubes(n)})


def random_table(g: KGraph, n: int, coeff: Coefficients = Z, rng: random.Random | None = None,
                 span: int = 9) -> CochainTable:
    rng = rng or random.Random(0)
    lo, hi = (-span, span) if coeff.modulus is None else (0, coeff.modulus - 1)
    return CochainTable(n, coeff, {c: rng.randint(lo, hi) for c in basis(g).cubes(n)})


def coboundary(g: KGraph, f: CochainTable) -> CochainTable:
    """(delta f)(cube) = sum_i (-1)^i (f(F^0_i cube) - f(F^1_i cube))."""
    f.check_total(g)
    out = {}
    for cube in basis(g).cubes(f.degree + 1):
        out[cube] = f.evaluate(cube_boundary(g, cube))
    return CochainTable(f.degree + 1, f.coeff, out)


def is_cocycle(g: KGraph, f: CochainTable) -> tuple[bool, Morphism | None]:
    """Whether delta f vanishes, with the first cube where it does not."""
    df = coboundary(g, f)
    for cube in basis(g).cubes(f.degree + 1):
        if df[cube]:
            return False, cube
    return True, None


# -- cubes with tails ------------------------------------------------------------

def cube_tail(g: KGraph, cube: Morphism, tail: Morphism | None = None) -> CubeTail:
    if tail is None:
        tail = g.identity(cube.source)
    if cube.source != tail.anchor:
        raise KGraphError(f"tail {tail!r} does not start at the source of {cube!r}")
    if any(x > 1 for x in cube.degree):
        raise KGraphError(f"{cube!r} is not a cube")
    return CubeTail(cube, tail)


def boundary_with_tail(g: KGraph, term) -> Chain:
    """Boundary in the cube-with-tail resolution; vertices go to 1."""
    if term is UNIT:
        return Chain()
    cube, tail = term
    if cube.source != tail.anchor:
        raise KGraphError(f"({cube!r}, {tail!r}) is not composable")
    n = len(color_type(cube))
    if n == 0:
        return Chain.of(UNIT)
    out = Chain()
    for j in range(1, n + 1):
        s = (-1) ** j
        out.add(CubeTail(g.face(cube, j, 0), g.compose(g.face_tail(cube, j), tail)), s)
        out.add(CubeTail(g.face(cube, j, 1), tail), -s)
    return out


def cube_tails(g: KGraph, n: int, bound) -> list[CubeTail]:
    """Every (cube, tail) with the cube in Q_n and d(tail) <= bound."""
    tails: dict[str, list[Morphism]] = {}
    for m in g.morphisms_up_to(tuple(bound)):
        tails.setdefault(m.anchor, []).append(m)
    return [CubeTail(c, t) for c in basis(g).cubes(n) for t in tails.get(c.source, ())
            if dleq(t.degree, tuple(bound))]
