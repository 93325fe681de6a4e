"""Finite k-graphs given by a colored skeleton plus commuting squares.

Morphisms are stored as edge words in color-ascending normal form. A word
``[x, y]`` means "x after y", so ``s(x) == r(y)``; the range of a word is the
range of its first edge and the source is the source of its last edge.

>>> g = torus2()
>>> lam = g.compose(g.edge("f"), g.edge("e"))
>>> lam.word
('e', 'f')
>>> g.segment(lam, (0, 1), (1, 1)).word
('e',)
"""
from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

Degree = tuple[int, ...]


class KGraphError(ValueError):
    """Malformed presentation or an operation outside its domain."""


# -- degree arithmetic -------------------------------------------------------

def zero(k: int) -> Degree:
    return (0,) * k


def unit(k: int, color: int) -> Degree:
    """The generator e_color (colors are 1-based)."""
    return tuple(int(i == color - 1) for i in range(k))


def unit_sum(k: int, colors: Iterable[int]) -> Degree:
    cs = set(colors)
    return tuple(int(i + 1 in cs) for i in range(k))


def dadd(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def dsub(a: Degree, b: Degree) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def dleq(a: Degree, b: Degree) -> bool:
    return all(x <= y for x, y in zip(a, b))


def box(lo: Degree, hi: Degree) -> Iterator[Degree]:
    """All lattice points lo <= m <= hi; empty if lo is not below hi."""
    if not dleq(lo, hi):
        return iter(())
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def ascending_colors(n: Degree) -> list[int]:
    return [c + 1 for c, count in enumerate(n) for _ in range(count)]


# -- presentation data -------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    id: str
    color: int
    range: str
    source: str


@dataclass(frozen=True)
class Square:
    lhs: tuple[str, str]
    rhs: tuple[str, str]


@dataclass(frozen=True)
class Morphism:
    """An edge word in normal form, anchored at its range vertex.

    Only ``anchor`` and ``word`` take part in equality and hashing; ``degree``
    and ``source`` are cached by the graph that built the morphism.
    """

    anchor: str
    word: tuple[str, ...] = ()
    degree: Degree = field(default=(), compare=False)
    source: str = field(default="", compare=False)

    @property
    def range(self) -> str:
        return self.anchor

    @property
    def is_identity(self) -> bool:
        return not self.word

    def __repr__(self) -> str:
        if not self.word:
            return f"id({self.anchor})"
        return "".join(self.word) if all(len(e) == 1 for e in self.word) else ".".join(self.word)


def color_type(lam: Morphism) -> tuple[int, ...]:
    """Colors with positive degree, ascending."""
    return tuple(i + 1 for i, x in enumerate(lam.degree) if x > 0)


def cube_sort_key(lam: Morphism):
    return (color_type(lam), lam.word, lam.anchor)


class KGraph:
    """A k-graph presentation with normal-form morphism arithmetic.

    Construction checks references only; call :func:`validate` before relying
    on unique factorization. Instances are treated as immutable; the internal
    memo tables only cache pure results.
    """

    def __init__(self, k: int, vertices: Sequence[str], edges: Iterable[Edge],
                 squares: Iterable[Square] = ()):
        if k < 1:
            raise KGraphError("k must be at least 1")
        self.k = k
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices) or any(not v for v in self.vertices):
            raise KGraphError("vertex ids must be nonempty and unique")
        vset = set(self.vertices)
        self.edges: dict[str, Edge] = {}
        for e in edges:
            if e.id in self.edges or not e.id:
                raise KGraphError(f"duplicate or empty edge id {e.id!r}")
            if not 1 <= e.color <= k:
                raise KGraphError(f"edge {e.id} has color {e.color} outside 1..{k}")
            if e.range not in vset or e.source not in vset:
                raise KGraphError(f"edge {e.id} references an unknown vertex")
            self.edges[e.id] = e
        self.squares = tuple(squares)
        self._swap: dict[tuple[str, str], tuple[str, str]] = {}
        for sq in self.squares:
            for side in (sq.lhs, sq.rhs):
                if len(side) != 2 or any(x not in self.edges for x in side):
                    raise KGraphError(f"square side {list(side)} references an unknown edge")
            for a, b in ((sq.lhs, sq.rhs), (sq.rhs, sq.lhs)):
                if a in self._swap:
                    raise KGraphError(f"square side {list(a)} appears twice")
                self._swap[a] = b
        self._by_range: dict[tuple[str, int], list[str]] = defaultdict(list)
        for e in sorted(self.edges.values(), key=lambda e: (e.color, e.id)):
            self._by_range[e.range, e.color].append(e.id)
        self.validated = False
        self._segments: dict = {}
        self._morphisms: dict[Degree, list[Morphism]] = {}

    def __repr__(self) -> str:
        return f"KGraph(k={self.k}, |V|={len(self.vertices)}, |E|={len(self.edges)})"

    # -- words ---------------------------------------------------------------

    def color(self, eid: str) -> int:
        return self.edges[eid].color

    def word_degree(self, word: Sequence[str]) -> Degree:
        d = [0] * self.k
        for e in word:
            d[self.color(e) - 1] += 1
        return tuple(d)

    def check_word(self, word: Sequence[str]) -> None:
        for e in word:
            if e not in self.edges:
                raise KGraphError(f"unknown edge {e!r}")
        for x, y in zip(word, word[1:]):
            if self.edges[x].source != self.edges[y].range:
                raise KGraphError(f"word is not composable at [{x},{y}]")

    def swap(self, x: str, y: str) -> tuple[str, str]:
        try:
            return self._swap[x, y]
        except KeyError:
            raise KGraphError(f"no square contains the word [{x},{y}]") from None

    def rearrange(self, word: Sequence[str], colors: Sequence[int]) -> tuple[str, ...]:
        """Equivalent word whose color sequence is ``colors``, via adjacent swaps.

        Edges of one color keep their relative order, so every out-of-order
        neighbour pair has distinct colors and a square to swap it.
        """
        slots: dict[int, deque[int]] = defaultdict(deque)
        for pos, c in enumerate(colors):
            slots[c].append(pos)
        try:
            target = [slots[self.color(e)].popleft() for e in word]
        except IndexError:
            raise KGraphError("color sequence does not match the word degree") from None
        if len(target) != len(colors):
            raise KGraphError("color sequence does not match the word degree")
        w = list(word)
        for i in range(len(w)):
            for j in range(len(w) - 1 - i):
                if target[j] > target[j + 1]:
                    w[j], w[j + 1] = self.swap(w[j], w[j + 1])
                    target[j], target[j + 1] = target[j + 1], target[j]
        return tuple(w)

    def normalize(self, word: Sequence[str]) -> tuple[str, ...]:
        return self.rearrange(word, sorted(self.color(e) for e in word))

    def swap_class(self, word: Sequence[str]) -> set[tuple[str, ...]]:
        """Every word reachable from ``word`` by adjacent square swaps."""
        start = tuple(word)
        seen = {start}
        todo = [start]
        while todo:
            w = todo.pop()
            for i in range(len(w) - 1):
                if self.color(w[i]) == self.color(w[i + 1]):
                    continue
                a, b = self.swap(w[i], w[i + 1])
                nxt = w[:i] + (a, b) + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return seen

    # -- morphisms -----------------------------------------------------------

    def _make(self, anchor: str, word: tuple[str, ...]) -> Morphism:
        src = self.edges[word[-1]].source if word else anchor
        return Morphism(anchor, word, self.word_degree(word), src)

    def identity(self, v: str) -> Morphism:
        if v not in self.vertices:
            raise KGraphError(f"unknown vertex {v!r}")
        return Morphism(v, (), zero(self.k), v)

    def edge(self, eid: str) -> Morphism:
        e = self.edges[eid]
        return Morphism(e.range, (eid,), unit(self.k, e.color), e.source)

    def morphism(self, word: Sequence[str] = (), anchor: str | None = None) -> Morphism:
        """The morphism named by any composable word (identity if empty)."""
        word = tuple(word)
        if not word:
            if anchor is None:
                raise KGraphError("an identity needs an anchor vertex")
            return self.identity(anchor)
        self.check_word(word)
        if anchor is not None and anchor != self.edges[word[0]].range:
            raise KGraphError("anchor does not match the range of the word")
        return self._make(self.edges[word[0]].range, self.normalize(word))

    def owns(self, lam: Morphism) -> bool:
        if lam.anchor not in self.vertices:
            return False
        try:
            self.check_word(lam.word)
        except KGraphError:
            return False
        return not lam.word or self.edges[lam.word[0]].range == lam.anchor

    def compose(self, lam: Morphism, mu: Morphism) -> Morphism:
        """lam after mu."""
        if lam.source != mu.anchor:
            raise KGraphError(f"cannot compose {lam!r} with {mu!r}: s != r")
        if not lam.word:
            return mu
        if not mu.word:
            return lam
        return self._make(lam.anchor, self.normalize(lam.word + mu.word))

    def compose_all(self, ms: Sequence[Morphism]) -> Morphism:
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(out, m)
        return out

    def vertex_at(self, lam: Morphism, word: Sequence[str], pos: int) -> str:
        if pos < len(word):
            return self.edges[word[pos]].range
        return lam.source

    def segment(self, lam: Morphism, lo: Degree, hi: Degree) -> Morphism:
        """The piece of ``lam`` between the degree marks lo <= hi."""
        lo, hi = tuple(lo), tuple(hi)
        d = lam.degree
        if not (all(x >= 0 for x in lo) and dleq(lo, hi) and dleq(hi, d)):
            raise KGraphError(f"segment bounds {lo}, {hi} outside [0, {d}]")
        key = (lam, lo, hi)
        hit = self._segments.get(key)
        if hit is not None:
            return hit
        if lo == hi:
            w = self.rearrange(lam.word, ascending_colors(lo) + ascending_colors(dsub(d, lo)))
            out = self.identity(self.vertex_at(lam, w, sum(lo)))
        else:
            colors = ascending_colors(lo) + ascending_colors(dsub(hi, lo)) + ascending_colors(dsub(d, hi))
            w = self.rearrange(lam.word, colors)
            a, b = sum(lo), sum(hi)
            out = self._make(self.edges[w[a]].range, w[a:b])
        self._segments[key] = out
        return out

    def factor(self, lam: Morphism, colors: Sequence[int]) -> list[Morphism]:
        """The edges of ``lam`` in the factorization with the given color order."""
        return [self.edge(e) for e in self.rearrange(lam.word, colors)]

    # -- enumeration ---------------------------------------------------------

    def edge_paths(self, colors: Sequence[int]) -> Iterator[tuple[str, ...]]:
        """Composable edge words with the given color sequence."""
        if not colors:
            return
        def grow(path):
            if len(path) == len(colors):
                yield tuple(path)
                return
            v = self.edges[path[-1]].source
            for e in self._by_range.get((v, colors[len(path)]), ()):
                path.append(e)
                yield from grow(path)
                path.pop()
        for e in sorted(self.edges):
            if self.color(e) == colors[0]:
                yield from grow([e])

    def morphisms(self, n: Degree) -> list[Morphism]:
        """Lambda^n, sorted by (anchor, word)."""
        n = tuple(n)
        if len(n) != self.k or any(x < 0 for x in n):
            raise KGraphError(f"bad degree {n}")
        hit = self._morphisms.get(n)
        if hit is not None:
            return hit
        if not any(n):
            out = [self.identity(v) for v in self.vertices]
        else:
            out = [self._make(self.edges[w[0]].range, w) for w in self.edge_paths(ascending_colors(n))]
            out.sort(key=lambda m: (m.anchor, m.word))
        self._morphisms[n] = out
        return out

    def morphisms_up_to(self, bound: Degree) -> list[Morphism]:
        return [m for n in box(zero(self.k), tuple(bound)) for m in self.morphisms(n)]

    def cubes(self, n: int) -> list[Morphism]:
        """Q_n: morphisms whose degree is a 0/1 vector with n ones."""
        if n < 0 or n > self.k:
            return []
        if n == 0:
            return [self.identity(v) for v in self.vertices]
        out = []
        for K in itertools.combinations(range(1, self.k + 1), n):
            out.extend(self.morphisms(unit_sum(self.k, K)))
        return sorted(out, key=cube_sort_key)

    # -- cube faces ----------------------------------------------------------

    def _cube_color(self, lam: Morphism, j: int) -> int:
        cs = color_type(lam)
        if any(x > 1 for x in lam.degree):
            raise KGraphError(f"{lam!r} is not a cube")
        if not 1 <= j <= len(cs):
            raise KGraphError(f"face index {j} out of range for a {len(cs)}-cube")
        return cs[j - 1]

    def face(self, lam: Morphism, j: int, l: int) -> Morphism:
        """Front (l=0) or back (l=1) face of a cube in its j-th color."""
        e = unit(self.k, self._cube_color(lam, j))
        d = lam.degree
        if l == 0:
            return self.segment(lam, zero(self.k), dsub(d, e))
        if l == 1:
            return self.segment(lam, e, d)
        raise KGraphError("face side must be 0 or 1")

    def face_tail(self, lam: Morphism, j: int) -> Morphism:
        """S_j: the edge completing the front face, lam = F^0_j S_j."""
        e = unit(self.k, self._cube_color(lam, j))
        return self.segment(lam, dsub(lam.degree, e), lam.degree)

    def face_head(self, lam: Morphism, j: int) -> Morphism:
        """R_j: the edge preceding the back face, lam = R_j F^1_j."""
        e = unit(self.k, self._cube_color(lam, j))
        return self.segment(lam, zero(self.k), e)


# -- validation ----------------------------------------------------------------

@dataclass
class CheckResult:
    check: str
    generators_tested: int
    passed: bool
    witness: list[str] | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"check": self.check, "generatorsTested": self.generators_tested, "pass": self.passed}
        if self.witness is not None:
            out["firstWitness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ValidationReport:
    checks: list[CheckResult]
    bound: Degree

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self, name: str) -> bool:
        return any(c.check == name and not c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"valid": self.ok, "bound": list(self.bound), "checks": [c.to_json() for c in self.checks]}


def _composable_pairs(g: KGraph) -> Iterator[tuple[str, str]]:
    for x in sorted(g.edges, key=lambda e: (g.color(e), e)):
        v = g.edges[x].source
        for c in range(1, g.k + 1):
            if c != g.color(x):
                for y in g._by_range.get((v, c), ()):
                    yield x, y


def _check_completeness(g: KGraph) -> CheckResult:
    n = 0
    for x, y in _composable_pairs(g):
        n += 1
        if (x, y) not in g._swap:
            return CheckResult("V1", n, False, [x, y], "composable two-color word lies in no square")
    return CheckResult("V1", n, True)


def _check_swap_map(g: KGraph) -> CheckResult:
    n = 0
    for (a, b), (b2, a2) in sorted(g._swap.items()):
        n += 1
        E = g.edges
        ok = (E[a].color != E[b].color and E[b2].color == E[b].color and E[a2].color == E[a].color
              and E[a].source == E[b].range and E[b2].source == E[a2].range
              and E[a].range == E[b2].range and E[b].source == E[a2].source
              and g._swap.get((b2, a2)) == (a, b))
        if not ok:
            return CheckResult("V2", n, False, [a, b], "swap is not a color-exchanging involution")
    return CheckResult("V2", n, True)


def _check_hexagon(g: KGraph) -> CheckResult:
    n = 0
    try:
        for x, y in _composable_pairs(g):
            v = g.edges[y].source
            for c in range(1, g.k + 1):
                if c in (g.color(x), g.color(y)):
                    continue
                for z in g._by_range.get((v, c), ()):
                    n += 1
                    w = (x, y, z)
                    if _braid(g, w, (0, 1, 0)) != _braid(g, w, (1, 0, 1)):
                        return CheckResult("V3", n, False, list(w), "the two reversal orders disagree")
    except KGraphError as err:
        return CheckResult("V3", n, False, None, str(err))
    return CheckResult("V3", n, True)


def _braid(g: KGraph, word, positions) -> tuple[str, ...]:
    w = list(word)
    for i in positions:
        w[i], w[i + 1] = g.swap(w[i], w[i + 1])
    return tuple(w)


def composable_words(g: KGraph, bound: Degree) -> Iterator[tuple[str, ...]]:
    """All nonempty composable edge words of degree <= bound."""
    def grow(path, deg):
        yield tuple(path)
        v = g.edges[path[-1]].source
        for c in range(1, g.k + 1):
            if deg[c - 1] >= bound[c - 1]:
                continue
            for e in g._by_range.get((v, c), ()):
                deg[c - 1] += 1
                path.append(e)
                yield from grow(path, deg)
                path.pop()
                deg[c - 1] -= 1
    for e in sorted(g.edges):
        c = g.color(e)
        if bound[c - 1] >= 1:
            deg = [0] * g.k
            deg[c - 1] = 1
            yield from grow([e], deg)


def _check_confluence(g: KGraph, bound: Degree) -> CheckResult:
    seen: set[tuple[str, ...]] = set()
    n = 0
    for w in composable_words(g, bound):
        if w in seen:
            continue
        n += 1
        try:
            cls = g.swap_class(w)
        except KGraphError as err:
            return CheckResult("V4", n, False, list(w), str(err))
        seen |= cls
        by_colors: dict[tuple[int, ...], tuple[str, ...]] = {}
        for u in sorted(cls):
            cs = tuple(g.color(e) for e in u)
            if cs in by_colors:
                return CheckResult("V4", n, False, list(w),
                                   f"two words with one color order: {list(by_colors[cs])} and {list(u)}")
            by_colors[cs] = u
    return CheckResult("V4", n, True)


def validate(g: KGraph, bound: Degree | None = None) -> ValidationReport:
    """Check completeness, the swap involution, hexagons and confluence.

    ``bound`` limits the confluence probe (default two in every color). The
    graph is marked validated only when every check passes.
    """
    bound = tuple(bound) if bound is not None else (2,) * g.k
    if len(bound) != g.k:
        raise KGraphError("bound must have k coordinates")
    checks = [_check_completeness(g), _check_swap_map(g)]
    if g.k >= 3:
        checks.append(_check_hexagon(g))
    else:
        checks.append(CheckResult("V3", 0, True, note="vacuous for k <= 2"))
    checks.append(_check_confluence(g, bound))
    report = ValidationReport(checks, bound)
    g.validated = report.ok
    return report


def require_valid(g: KGraph) -> KGraph:
    if not g.validated:
        report = validate(g)
        if not report.ok:
            bad = next(c for c in report.checks if not c.passed)
            raise KGraphError(f"graph fails {bad.check}: witness {bad.witness}")
    return g


# -- finiteness ----------------------------------------------------------------

def degree_overflow(g: KGraph, probe: Degree) -> Morphism | None:
    """A morphism exceeding ``probe`` in some coordinate, or None.

    Any such morphism has a single-color segment of length probe_i + 1, so it
    suffices to look for those paths.
    """
    for i in range(g.k):
        path = next(g.edge_paths([i + 1] * (probe[i] + 1)), None)
        if path is not None:
            return g.morphism(path)
    return None


def is_finite_category(g: KGraph, probe: Degree) -> bool:
    return degree_overflow(g, tuple(probe)) is None


def all_morphisms(g: KGraph, probe: Degree | None = None) -> list[Morphism]:
    """Every morphism of a finite graph (raises if ``probe`` is exceeded)."""
    probe = tuple(probe) if probe is not None else (max(len(g.vertices) - 1, 0),) * g.k
    witness = degree_overflow(g, probe)
    if witness is not None:
        raise KGraphError(f"category is not finite within {list(probe)}: witness {witness!r}")
    return g.morphisms_up_to(probe)


# -- graph morphisms ----------------------------------------------------------

@dataclass
class KGraphMorphism:
    domain: KGraph
    codomain: KGraph
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def problems(self) -> list[str]:
        out = []
        D, C = self.domain, self.codomain
        if D.k != C.k:
            out.append("domain and codomain have different k")
            return out
        for v in D.vertices:
            if self.vertex_map.get(v) not in C.vertices:
                out.append(f"vertex {v} has no image")
        for e in sorted(D.edges.values(), key=lambda e: e.id):
            img = self.edge_map.get(e.id)
            if img not in C.edges:
                out.append(f"edge {e.id} has no image")
                continue
            f = C.edges[img]
            if f.color != e.color:
                out.append(f"edge {e.id} changes color")
            if (self.vertex_map.get(e.range), self.vertex_map.get(e.source)) != (f.range, f.source):
                out.append(f"edge {e.id} endpoints are not preserved")
        if out:
            return out
        for sq in D.squares:
            left = C.morphism([self.edge_map[x] for x in sq.lhs])
            right = C.morphism([self.edge_map[x] for x in sq.rhs])
            if left != right:
                out.append(f"square {list(sq.lhs)}={list(sq.rhs)} is not respected")
        return out

    def __call__(self, lam: Morphism) -> Morphism:
        return apply_morphism(self, lam)


def apply_morphism(phi: KGraphMorphism, lam: Morphism) -> Morphism:
    if not phi.domain.owns(lam):
        raise KGraphError(f"{lam!r} is not a morphism of the domain")
    if not lam.word:
        return phi.codomain.identity(phi.vertex_map[lam.anchor])
    return phi.codomain.morphism([phi.edge_map[e] for e in lam.word])


def identity_morphism(g: KGraph) -> KGraphMorphism:
    return KGraphMorphism(g, g, {v: v for v in g.vertices}, {e: e for e in g.edges})


# -- builders ------------------------------------------------------------------

def _pt(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def omega(k: int, m: Sequence[int] | int) -> KGraph:
    """The grid {0 <= n <= m} with one morphism from each p up to each q >= p.

    Vertex names are comma-joined coordinates; the color-i edge with range p
    is named ``"i@p"`` and ends at p + e_i.
    """
    m = (m,) * k if isinstance(m, int) else tuple(m)
    if len(m) != k or any(x < 0 for x in m):
        raise KGraphError("omega needs a bound with k nonnegative coordinates")
    points = list(box(zero(k), m))
    edges, squares = [], []
    for p in points:
        for i in range(1, k + 1):
            q = dadd(p, unit(k, i))
            if dleq(q, m):
                edges.append(Edge(f"{i}@{_pt(p)}", i, _pt(p), _pt(q)))
    for p in points:
        for i, j in itertools.combinations(range(1, k + 1), 2):
            pi, pj = dadd(p, unit(k, i)), dadd(p, unit(k, j))
            if dleq(dadd(pi, unit(k, j)), m):
                lhs = (f"{i}@{_pt(p)}", f"{j}@{_pt(pi)}")
                rhs = (f"{j}@{_pt(p)}", f"{i}@{_pt(pj)}")
                squares.append(Square(lhs, rhs))
    g = KGraph(k, [_pt(p) for p in points], edges, squares)
    return require_valid(g)


def fig8() -> KGraph:
    return require_valid(KGraph(1, ["v"], [Edge("a", 1, "v", "v"), Edge("b", 1, "v", "v")]))


def single_loop() -> KGraph:
    return require_valid(KGraph(1, ["v"], [Edge("e", 1, "v", "v")]))


def torus2() -> KGraph:
    g = KGraph(2, ["v"], [Edge("e", 1, "v", "v"), Edge("f", 2, "v", "v")],
               [Square(("e", "f"), ("f", "e"))])
    return require_valid(g)


def collapse(domain: KGraph, codomain: KGraph) -> KGraphMorphism:
    """The morphism sending everything of color i to the unique color-i loop."""
    if len(codomain.vertices) != 1:
        raise KGraphError("collapse needs a one-vertex codomain")
    (v,) = codomain.vertices
    loops = {}
    for e in codomain.edges.values():
        if e.color in loops:
            raise KGraphError("collapse needs one loop per color")
        loops[e.color] = e.id
    return KGraphMorphism(domain, codomain, {u: v for u in domain.vertices},
                          {e.id: loops[e.color] for e in domain.edges.values()})
