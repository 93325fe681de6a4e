"""Composable tuples, the bar resolution and categorical homology.

Two shapes of tuple appear here. Generators of the bar resolution are tuples
(l_0, ..., l_n) whose last entry is a tail carrying the module action; the
resolution is augmented by sending every length-1 tuple to ``UNIT``. The
chain groups used for homology with constant coefficients are spanned by
tuples (l_0, ..., l_{n-1}) without a tail, where length 0 means a vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .chains import UNIT, Chain, Coefficients, Z
from .kgraph import (Degree, KGraph, KGraphError, Morphism, all_morphisms, dadd, dleq,
                     require_valid, zero)
from .linalg import AbelianGroup, SparseIntMatrix, homology_of_pair, homology_of_pair_mod


@dataclass(frozen=True)
class ComposableTuple:
    """(l_0, ..., l_{n-1}) with s(l_i) = r(l_{i+1}); ``vertex`` is the source end."""

    entries: tuple[Morphism, ...]
    vertex: str

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def range(self) -> str:
        return self.entries[0].anchor if self.entries else self.vertex

    def __repr__(self) -> str:
        if not self.entries:
            return f"<{self.vertex}>"
        return "(" + ", ".join(map(repr, self.entries)) + ")"


def make_tuple(entries: Sequence[Morphism], vertex: str | None = None) -> ComposableTuple:
    entries = tuple(entries)
    for a, b in zip(entries, entries[1:]):
        if a.source != b.anchor:
            raise KGraphError(f"{a!r} and {b!r} are not composable")
    if entries:
        if vertex is not None and vertex != entries[-1].source:
            raise KGraphError("tuple vertex must be the source of the last entry")
        vertex = entries[-1].source
    elif vertex is None:
        raise KGraphError("an empty tuple needs a vertex")
    return ComposableTuple(entries, vertex)


def _merged(g: KGraph, t: ComposableTuple, i: int) -> ComposableTuple:
    """Replace entries i-1 and i by their composite."""
    e = t.entries
    return ComposableTuple(e[:i - 1] + (g.compose(e[i - 1], e[i]),) + e[i + 1:], t.vertex)


def tuple_boundary(g: KGraph, t) -> Chain:
    """Bar-resolution boundary of (l_0, ..., l_n); length one goes to 1."""
    if t is UNIT:
        return Chain()
    n = len(t) - 1
    if n < 0:
        raise KGraphError("resolution generators have at least one entry")
    if n == 0:
        return Chain.of(UNIT)
    out = Chain.of(ComposableTuple(t.entries[1:], t.vertex))
    for i in range(1, n + 1):
        out.add(_merged(g, t, i), (-1) ** i)
    return out


def cat_boundary(g: KGraph, t, reduced: bool = False) -> Chain:
    """Boundary on tail-free tuples with constant coefficients.

    A length-1 tuple (l) goes to <s(l)> - <r(l)>; a vertex goes to 1 when
    ``reduced`` and to 0 otherwise.
    """
    if t is UNIT:
        return Chain()
    n = len(t)
    if n == 0:
        return Chain.of(UNIT) if reduced else Chain()
    e = t.entries
    out = Chain.of(ComposableTuple(e[1:], t.vertex))
    out.add(ComposableTuple(e[:-1], e[-1].anchor), (-1) ** n)
    for i in range(1, n):
        out.add(_merged(g, t, i), (-1) ** i)
    return out


def tuple_coboundary(g: KGraph, f: Callable[[ComposableTuple], int], t: ComposableTuple,
                     action: Callable[[int, Morphism], int] | None = None) -> int:
    """(delta f)(l_0, ..., l_n) for a cochain f on length-n tuples.

    ``action`` is the right action of the last entry on the value of the
    face that drops it; by default it is trivial.
    """
    e = t.entries
    n = len(e) - 1
    if n < 0:
        raise KGraphError("coboundary needs a nonempty tuple")
    dropped = f(ComposableTuple(e[:-1], e[-1].anchor))
    if action is not None:
        dropped = action(dropped, e[-1])
    total = f(ComposableTuple(e[1:], t.vertex)) + (-1) ** (n + 1) * dropped
    for i in range(1, n + 1):
        total += (-1) ** i * f(_merged(g, t, i))
    return total


# -- contracting homotopies ------------------------------------------------------

def standard_homotopy(g: KGraph, t, w: str) -> Chain:
    """h(l_0..l_n) = (-1)^(n+1) (l_0..l_n, id_w); h(1) = (id_w)."""
    idw = g.identity(w)
    if t is UNIT:
        return Chain.of(ComposableTuple((idw,), w))
    if t.vertex != w:
        raise KGraphError(f"tuple {t!r} does not end at {w}")
    n = len(t) - 1
    return Chain.of(ComposableTuple(t.entries + (idw,), w), coeff=(-1) ** (n + 1))


def standard_homotopy_defect(g: KGraph, t, w: str) -> Chain:
    """dh + hd - id on a resolution generator; zero when the identity holds."""
    out = Chain()
    for gen, c in standard_homotopy(g, t, w).items():
        out.iadd(tuple_boundary(g, gen), c)
    for gen, c in tuple_boundary(g, t).items():
        out.iadd(standard_homotopy(g, gen, w), c)
    out.add(t, -1)
    return out


def initial_vertex(g: KGraph) -> tuple[str, dict[str, Morphism]] | None:
    """A vertex a with exactly one morphism v -> a from every v, and those morphisms."""
    require_valid(g)
    try:
        morphisms = all_morphisms(g)
    except KGraphError:
        # a cycle gives two morphisms into any candidate
        return None
    for a in g.vertices:
        into: dict[str, list[Morphism]] = {}
        for m in morphisms:
            if m.source == a:
                into.setdefault(m.anchor, []).append(m)
        if all(len(into.get(v, ())) == 1 for v in g.vertices):
            return a, {v: into[v][0] for v in g.vertices}
    return None


def initial_homotopy(g: KGraph, t, alpha: tuple[str, dict[str, Morphism]]) -> Chain:
    """Append the unique morphism into the initial vertex, with sign (-1)^(n+1)."""
    a, into = alpha
    if t is UNIT:
        return Chain.of(ComposableTuple((), a))
    n = len(t)
    m = into[t.vertex]
    return Chain.of(ComposableTuple(t.entries + (m,), a), coeff=(-1) ** (n + 1))


def initial_homotopy_defect(g: KGraph, t, alpha) -> Chain:
    out = Chain()
    for gen, c in initial_homotopy(g, t, alpha).items():
        out.iadd(cat_boundary(g, gen, reduced=True), c)
    for gen, c in cat_boundary(g, t, reduced=True).items():
        out.iadd(initial_homotopy(g, gen, alpha), c)
    out.add(t, -1)
    return out


# -- enumeration -------------------------------------------------------------------

def enumerate_tuples(g: KGraph, length: int, bound: Degree,
                     morphisms: Sequence[Morphism] | None = None) -> Iterator[ComposableTuple]:
    """Composable tuples of the given length whose degrees sum to at most ``bound``."""
    bound = tuple(bound)
    if length == 0:
        for v in g.vertices:
            yield ComposableTuple((), v)
        return
    pool = morphisms if morphisms is not None else g.morphisms_up_to(bound)
    by_anchor: dict[str, list[Morphism]] = {}
    for m in pool:
        by_anchor.setdefault(m.anchor, []).append(m)

    def grow(prefix: list[Morphism], used: Degree):
        if len(prefix) == length:
            yield ComposableTuple(tuple(prefix), prefix[-1].source)
            return
        starts = pool if not prefix else by_anchor.get(prefix[-1].source, ())
        for m in starts:
            total = dadd(used, m.degree)
            if dleq(total, bound):
                prefix.append(m)
                yield from grow(prefix, total)
                prefix.pop()
    yield from grow([], zero(g.k))


class CategoryTooLarge(KGraphError):
    pass


def cat_boundary_matrix(g: KGraph, n: int, bases: dict[int, list[ComposableTuple]]) -> SparseIntMatrix:
    rows, cols = bases.get(n - 1, []), bases.get(n, [])
    if n <= 0:
        return SparseIntMatrix.zeros(len(rows), len(cols))
    index = {t: i for i, t in enumerate(rows)}
    ent = {}
    for j, t in enumerate(cols):
        for face, c in cat_boundary(g, t).items():
            ent[index[face], j] = ent.get((index[face], j), 0) + c
    return SparseIntMatrix(len(rows), len(cols), ent)


def cat_homology(g: KGraph, n: int, coeff: Coefficients = Z, probe: Degree | None = None,
                 max_generators: int = 20000) -> AbelianGroup:
    """Homology of the category itself with constant coefficients.

    Refuses categories with a morphism beyond ``probe`` (default: |V|-1 in
    every color, which is exact for finite graphs) instead of truncating.
    """
    require_valid(g)
    if n < 0:
        return AbelianGroup()
    probe = tuple(probe) if probe is not None else (max(len(g.vertices) - 1, 0),) * g.k
    pool = all_morphisms(g, probe)
    bases = {}
    for m in (n - 1, n, n + 1):
        if m < 0:
            continue
        ts = []
        for t in enumerate_tuples(g, m, probe, pool):
            ts.append(t)
            if len(ts) > max_generators:
                raise CategoryTooLarge(f"more than {max_generators} composable {m}-tuples")
        bases[m] = ts
    A, B = cat_boundary_matrix(g, n, bases), cat_boundary_matrix(g, n + 1, bases)
    if coeff.modulus is None:
        return homology_of_pair(A, B)
    return homology_of_pair_mod(A, B, coeff.modulus)
