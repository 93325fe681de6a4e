"""Maps between cube-with-tail chains and bar-resolution tuples.

``triangulate`` sends a cube to the signed sum of its edge factorizations in
every color order. ``cubulate`` sends a composable tuple to a sum of
staircase rectangles, each subdivided into unit cubes. Both act on free
generators: pairs (cube, tail) on one side and tuples whose last entry is
the tail on the other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .categorical import ComposableTuple, enumerate_tuples, make_tuple, tuple_boundary
from .chains import UNIT, Chain
from .cubical import CubeTail, boundary_with_tail, cube_tails
from .kgraph import (CheckResult, Degree, KGraph, KGraphError, KGraphMorphism, Morphism,
                     apply_morphism, box, color_type, degree_overflow, dsub, require_valid,
                     unit, unit_sum, zero)


# -- permutations --------------------------------------------------------------

def sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def permutations_with_sign(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Every permutation of 1..n (as a tuple of images) with its sign."""
    for p in itertools.permutations(range(1, n + 1)):
        yield p, sign(p)


def compose_perm(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def transposition(n: int, j: int) -> tuple[int, ...]:
    """Swap j and j+1."""
    p = list(range(1, n + 1))
    p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def cycle(n: int, j: int) -> tuple[int, ...]:
    """i -> i below j, i -> i+1 for j <= i < n, and n -> j; the identity when j = n."""
    return tuple(i if i < j else (i + 1 if i < n else j) for i in range(1, n + 1))


# -- color orders ----------------------------------------------------------------

def color_rank(k: int, order: str | Sequence[int] | None) -> dict[int, int]:
    """Position of each color in the chosen order (forward, reversed or explicit)."""
    if order is None or order == "forward":
        seq = list(range(1, k + 1))
    elif order == "reversed":
        seq = list(range(k, 0, -1))
    else:
        seq = list(order)
        if sorted(seq) != list(range(1, k + 1)):
            raise KGraphError(f"{seq} is not an ordering of the colors 1..{k}")
    return {c: i for i, c in enumerate(seq)}


# -- triangulation -------------------------------------------------------------------

def triangulate(g: KGraph, term) -> Chain:
    """Signed sum over color orders of the edge factorizations of a cube."""
    if term is UNIT:
        return Chain.of(UNIT)
    cube, tail = term
    if cube.source != tail.anchor:
        raise KGraphError(f"tail {tail!r} does not start at the source of {cube!r}")
    cs = color_type(cube)
    if len(cs) == 0:
        return Chain.of(ComposableTuple((tail,), tail.source))
    out = Chain()
    for perm, sg in permutations_with_sign(len(cs)):
        factors = g.factor(cube, [cs[p - 1] for p in perm])
        out.add(ComposableTuple(tuple(factors) + (tail,), tail.source), sg)
    return out


# -- rectangles ------------------------------------------------------------------------

def rectangular_chain(g: KGraph, rect: CubeTail, K: Sequence[int]) -> Chain:
    """Subdivide a K-shaped rectangle (with tail) into unit K-cubes.

    The result is zero when the rectangle is flat in some color of K.
    """
    lam, tail = rect
    K = tuple(sorted(K))
    if not set(color_type(lam)) <= set(K):
        raise KGraphError(f"{lam!r} has colors outside {list(K)}")
    d = lam.degree
    eK = unit_sum(g.k, K)
    out = Chain()
    for m in box(zero(g.k), dsub(d, eK)):
        hi = tuple(x + y for x, y in zip(m, eK))
        out.add(CubeTail(g.segment(lam, m, hi), g.compose(g.segment(lam, hi, d), tail)))
    return out


@dataclass(frozen=True)
class RectFaces:
    front: CubeTail
    front_tail: Morphism
    back: CubeTail
    back_head: Morphism


def rect_faces(g: KGraph, rect: CubeTail, K: Sequence[int], j: int) -> RectFaces:
    """Front and back faces of a rectangle in the direction of its j-th color in K."""
    K = tuple(sorted(K))
    if not 1 <= j <= len(K):
        raise KGraphError(f"face index {j} out of range for |K| = {len(K)}")
    lam, tail = rect
    c = K[j - 1]
    d = lam.degree
    side = tuple(d[c - 1] * x for x in unit(g.k, c))
    S = g.segment(lam, dsub(d, side), d)
    R = g.segment(lam, zero(g.k), side)
    front = CubeTail(g.segment(lam, zero(g.k), dsub(d, side)), g.compose(S, tail))
    back = CubeTail(g.segment(lam, side, d), tail)
    return RectFaces(front, S, back, R)


def rect_face_chain(g: KGraph, rect: CubeTail, K: Sequence[int], j: int, l: int) -> Chain:
    K = tuple(sorted(K))
    f = rect_faces(g, rect, K, j)
    return rectangular_chain(g, f.front if l == 0 else f.back, K[:j - 1] + K[j:])


# -- cubulation ------------------------------------------------------------------------

def staircase(g: KGraph, entries: Sequence[Morphism], K: Sequence[int],
              order=None) -> tuple[Degree, Degree]:
    """Corners b <= c of the K-rectangle cut out of entries l_0 ... l_{n-1}."""
    rank = color_rank(g.k, order)
    Ks = sorted(K, key=rank.__getitem__)
    b, c = [0] * g.k, [0] * g.k
    for i, Ki in enumerate(Ks):
        d = entries[i].degree
        for j in range(1, g.k + 1):
            if rank[j] > rank[Ki]:
                b[j - 1] += d[j - 1]
            if rank[j] >= rank[Ki]:
                c[j - 1] += d[j - 1]
    return tuple(b), tuple(c)


def box_hat(g: KGraph, t: ComposableTuple, K: Sequence[int], order=None) -> CubeTail:
    """The K-rectangle of a tuple together with its tail."""
    n = len(t) - 1
    if len(K) != n:
        raise KGraphError(f"|K| must be {n} for a tuple of length {n + 1}")
    lam = g.compose_all(t.entries)
    b, c = staircase(g, t.entries[:n], K, order)
    return CubeTail(g.segment(lam, b, c), g.segment(lam, c, lam.degree))


def cubulate(g: KGraph, t, order=None) -> Chain:
    """Sum over color sets K of the subdivided K-rectangles of the tuple.

    ``order="reversed"`` builds the staircases with the colors reversed; that
    variant is a chain map only up to the sign (-1)^(n(n-1)/2) in degree n.
    """
    if t is UNIT:
        return Chain.of(UNIT)
    n = len(t) - 1
    out = Chain()
    for K in itertools.combinations(range(1, g.k + 1), n):
        out.iadd(rectangular_chain(g, box_hat(g, t, K, order), K))
    return out


# -- faces of the cubulation ---------------------------------------------------------------

def m_index(J: Sequence[int], q: int, k: int) -> int:
    """max{i in 0..n-1 : J_(i) <= q} with J_(0) = 0, where |J| = n - 1."""
    Js = (0,) + tuple(sorted(J))
    if not 0 <= q <= k:
        raise KGraphError(f"q = {q} outside 0..{k}")
    return max(i for i, x in enumerate(Js) if x <= q)


def xi_hat(g: KGraph, t: ComposableTuple, J: Sequence[int], q: int) -> CubeTail:
    n = len(t) - 1
    Js = (0,) + tuple(sorted(J)) + (g.k + 1,)
    if len(J) != n - 1 or len(set(J)) != len(J) or not all(1 <= x <= g.k for x in J):
        raise KGraphError(f"J must be a set of {n - 1} colors")
    m = m_index(J, q, g.k)
    lo, hi = [0] * g.k, [0] * g.k

    def add(d: Degree, start_lo: int, start_hi: int) -> None:
        for j in range(1, g.k + 1):
            if j >= start_lo:
                lo[j - 1] += d[j - 1]
            if j >= start_hi:
                hi[j - 1] += d[j - 1]

    for i in range(1, m + 1):
        add(t[i - 1].degree, Js[i] + 1, Js[i])
    add(t[m].degree, q + 1, q + 1)
    for i in range(m + 1, n):
        add(t[i].degree, Js[i] + 1, Js[i])
    lam = g.compose_all(t.entries)
    return CubeTail(g.segment(lam, tuple(lo), tuple(hi)), g.segment(lam, tuple(hi), lam.degree))


def xi(g: KGraph, t: ComposableTuple, J: Sequence[int], q: int) -> Chain:
    return rectangular_chain(g, xi_hat(g, t, J, q), J)


# -- verification -------------------------------------------------------------------------

@dataclass
class Report:
    bound: Degree
    max_length: int
    truncated: bool
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.check == name)

    def to_json(self) -> dict:
        return {"pass": self.ok, "bound": list(self.bound), "maxLength": self.max_length,
                "truncated": self.truncated, "checks": [c.to_json() for c in self.checks]}


def run_check(name: str, gens: Iterable, test: Callable[[object], bool]) -> CheckResult:
    n = 0
    for gen in gens:
        n += 1
        if not test(gen):
            return CheckResult(name, n, False, [repr(gen)])
    return CheckResult(name, n, True)


def linear(f: Callable[[object], dict], chain: dict) -> Chain:
    out = Chain()
    for gen, c in chain.items():
        out.iadd(f(gen), c)
    return out


def _d_cube(g: KGraph) -> Callable:
    return lambda x: boundary_with_tail(g, x)


def _d_tuple(g: KGraph) -> Callable:
    return lambda x: tuple_boundary(g, x)


def all_cube_tails(g: KGraph, bound: Degree) -> list:
    return [UNIT] + [ct for n in range(g.k + 1) for ct in cube_tails(g, n, bound)]


def all_tuples(g: KGraph, bound: Degree, max_length: int) -> list:
    pool = g.morphisms_up_to(bound)
    return [UNIT] + [t for L in range(1, max_length + 1) for t in enumerate_tuples(g, L, bound, pool)]


def verify_chain_map_identities(g: KGraph, bound: Degree | None = None,
                                max_length: int | None = None) -> Report:
    """Exhaustively check the chain-map laws and the face lemmas within bounds.

    Cubes carry every tail of degree <= bound; tuples have length at most
    ``max_length`` (default k + 1) and total degree <= bound.
    """
    require_valid(g)
    bound = tuple(bound) if bound is not None else (2,) * g.k
    max_length = max_length if max_length is not None else g.k + 1
    report = Report(bound, max_length, degree_overflow(g, bound) is not None)
    cts = all_cube_tails(g, bound)
    tuples = all_tuples(g, bound, max_length)
    d_cube, d_tup = _d_cube(g), _d_tuple(g)
    tri = lambda x: triangulate(g, x)
    cub = lambda x: cubulate(g, x)

    report.checks.append(run_check(
        "triangulate-chain-map", cts,
        lambda x: linear(tri, d_cube(x)) == linear(d_tup, tri(x))))
    report.checks.append(run_check(
        "cubulate-chain-map", tuples,
        lambda x: linear(cub, d_tup(x)) == linear(d_cube, cub(x))))
    report.checks.append(run_check(
        "cubulate-triangulate-identity", cts,
        lambda x: linear(cub, tri(x)) == Chain.of(x)))
    real = [t for t in tuples if t is not UNIT and len(t) >= 2]
    report.checks.append(run_check("face-of-cubulation", _fbox_instances(g, real),
                                   lambda inst: _fbox_holds(g, *inst)))
    report.checks.append(run_check("cubulation-first-face", _j_instances(g, real),
                                   lambda inst: _box0_holds(g, *inst)))
    report.checks.append(run_check("cubulation-last-face", _j_instances(g, real),
                                   lambda inst: _boxn_holds(g, *inst)))
    report.checks.append(run_check("cubulation-inner-face", _jl_instances(g, real),
                                   lambda inst: _boxl_holds(g, *inst)))
    report.checks.append(run_check("rectangle-boundary", _rect_instances(g, bound),
                                   lambda inst: _rect_boundary_holds(g, *inst)))
    return report


def _fbox_instances(g, tuples):
    for t in tuples:
        n = len(t) - 1
        for K in itertools.combinations(range(1, g.k + 1), n):
            for l in range(1, n + 1):
                for eps in (0, 1):
                    yield t, K, l, eps


def _fbox_holds(g, t, K, l, eps) -> bool:
    rect = box_hat(g, t, K)
    faces = rect_faces(g, rect, K, l)
    J = K[:l - 1] + K[l:]
    hat = faces.front if eps == 0 else faces.back
    if hat != xi_hat(g, t, J, K[l - 1] - eps):
        return False
    return rect_face_chain(g, rect, K, l, eps) == xi(g, t, J, K[l - 1] - eps)


def _j_instances(g, tuples):
    for t in tuples:
        for J in itertools.combinations(range(1, g.k + 1), len(t) - 2):
            yield t, J


def _jl_instances(g, tuples):
    for t, J in _j_instances(g, tuples):
        for l in range(1, len(t) - 1):
            yield t, J, l


def _box0_holds(g, t, J) -> bool:
    return box_hat(g, ComposableTuple(t.entries[1:], t.vertex), J) == xi_hat(g, t, J, 0)


def _boxn_holds(g, t, J) -> bool:
    e = t.entries
    merged = ComposableTuple(e[:-2] + (g.compose(e[-2], e[-1]),), t.vertex)
    return box_hat(g, merged, J) == xi_hat(g, t, J, g.k)


def _boxl_holds(g, t, J, l) -> bool:
    e = t.entries
    merged = ComposableTuple(e[:l - 1] + (g.compose(e[l - 1], e[l]),) + e[l + 1:], t.vertex)
    lhs = rectangular_chain(g, box_hat(g, merged, J), J)
    q = sorted(J)[l - 1]
    return lhs == xi(g, t, J, q) + xi(g, t, J, q - 1)


def rect_pairs(g: KGraph, bound: Degree) -> Iterator[CubeTail]:
    """Every (rectangle, tail) whose rectangle has degree <= bound and tail degree <= bound."""
    pool = g.morphisms_up_to(bound)
    by_anchor: dict[str, list[Morphism]] = {}
    for m in pool:
        by_anchor.setdefault(m.anchor, []).append(m)
    for lam in pool:
        for tail in by_anchor.get(lam.source, ()):
            yield CubeTail(lam, tail)


def _rect_instances(g, bound):
    for rect in rect_pairs(g, bound):
        C = set(color_type(rect.cube))
        for n in range(max(len(C), 1), g.k + 1):
            for K in itertools.combinations(range(1, g.k + 1), n):
                if C <= set(K):
                    yield rect, K


def rect_boundary_expansion(g: KGraph, rect: CubeTail, K: Sequence[int]) -> Chain:
    out = Chain()
    for j in range(1, len(K) + 1):
        for l in (0, 1):
            out.iadd(rect_face_chain(g, rect, K, j, l), (-1) ** (j + l))
    return out


def _rect_boundary_holds(g, rect, K) -> bool:
    lhs = linear(lambda x: boundary_with_tail(g, x), rectangular_chain(g, rect, K))
    return lhs == rect_boundary_expansion(g, rect, K)


def gluing_instances(g: KGraph, bound: Degree) -> Iterator[tuple]:
    """Pairs of K-rectangles sharing a face: back face of one is the front face of the other."""
    for K in (K for n in range(1, g.k + 1) for K in itertools.combinations(range(1, g.k + 1), n)):
        rects = [r for r in rect_pairs(g, bound) if set(color_type(r.cube)) <= set(K)]
        for j in range(1, len(K) + 1):
            fronts: dict[CubeTail, list[CubeTail]] = {}
            for r in rects:
                fronts.setdefault(rect_faces(g, r, K, j).front, []).append(r)
            for r in rects:
                for other in fronts.get(rect_faces(g, r, K, j).back, ()):
                    yield r, other, K, j


def gluing_holds(g: KGraph, first: CubeTail, second: CubeTail, K, j) -> bool:
    """[first] + [second] equals the rectangle glued along the shared face, both ways."""
    f1, f2 = rect_faces(g, first, K, j), rect_faces(g, second, K, j)
    glued_a = CubeTail(g.compose(first.cube, f2.front_tail), second.tail)
    glued_b = CubeTail(g.compose(f1.back_head, second.cube), second.tail)
    total = rectangular_chain(g, first, K) + rectangular_chain(g, second, K)
    return glued_a == glued_b and total == rectangular_chain(g, glued_a, K)


# -- naturality ----------------------------------------------------------------------------

def push_cube_tail(phi: KGraphMorphism, x):
    if x is UNIT:
        return UNIT
    return CubeTail(apply_morphism(phi, x.cube), apply_morphism(phi, x.tail))


def push_tuple(phi: KGraphMorphism, x):
    if x is UNIT:
        return UNIT
    entries = tuple(apply_morphism(phi, m) for m in x.entries)
    return make_tuple(entries, phi.vertex_map[x.vertex])


def push(f: Callable, chain: dict) -> Chain:
    out = Chain()
    for gen, c in chain.items():
        out.add(f(gen), c)
    return out


def verify_naturality(phi: KGraphMorphism, bound: Degree | None = None,
                      max_length: int | None = None) -> Report:
    D, C = phi.domain, phi.codomain
    require_valid(D)
    require_valid(C)
    problems = phi.problems()
    if problems:
        raise KGraphError(f"not a k-graph morphism: {problems[0]}")
    bound = tuple(bound) if bound is not None else (2,) * D.k
    max_length = max_length if max_length is not None else D.k + 1
    report = Report(bound, max_length, degree_overflow(D, bound) is not None)
    pc = lambda x: push_cube_tail(phi, x)
    pt = lambda x: push_tuple(phi, x)
    report.checks.append(run_check(
        "triangulate-natural", all_cube_tails(D, bound),
        lambda x: push(pt, triangulate(D, x)) == triangulate(C, pc(x))))
    report.checks.append(run_check(
        "cubulate-natural", all_tuples(D, bound, max_length),
        lambda x: push(pc, cubulate(D, x)) == cubulate(C, pt(x))))
    return report
