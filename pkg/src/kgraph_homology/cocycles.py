"""Translating cochains between cubes and composable tuples.

Cubical cochains are finite tables on Q_n. Categorical cochains live on
infinitely many tuples in general, so they are represented by evaluators:
callables on :class:`ComposableTuple` of a fixed length.
"""
from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .categorical import ComposableTuple, enumerate_tuples, make_tuple, tuple_coboundary
from .chain_maps import permutations_with_sign, staircase
from .chains import Coefficients, Z
from .cubical import CochainTable, basis, coboundary, is_cocycle
from .kgraph import KGraph, KGraphError, Morphism, box, color_type, dadd, dsub, unit_sum


class EvaluatorDomainError(KGraphError):
    """A table-backed evaluator was asked about a tuple outside its table."""


class NotACocycle(KGraphError):
    def __init__(self, witness: Morphism):
        super().__init__(f"table is not a cocycle: coboundary is nonzero on {witness!r}")
        self.witness = witness


@dataclass
class CategoricalCochain:
    """A categorical n-cochain given by a rule or by a finite table."""

    degree: int
    coeff: Coefficients
    rule: Callable[[ComposableTuple], int] | None = None
    table: Mapping[ComposableTuple, int] | None = None
    name: str = ""

    def __post_init__(self):
        if (self.rule is None) == (self.table is None):
            raise ValueError("give exactly one of rule or table")

    def __call__(self, t: ComposableTuple) -> int:
        if len(t) != self.degree:
            raise KGraphError(f"{self.degree}-cochain evaluated on a tuple of length {len(t)}")
        if self.rule is not None:
            return self.coeff.reduce(self.rule(t))
        try:
            return self.coeff.reduce(self.table[t])
        except KeyError:
            raise EvaluatorDomainError(f"no table value for {t!r}") from None


def cat_coboundary(g: KGraph, f: CategoricalCochain) -> CategoricalCochain:
    return CategoricalCochain(f.degree + 1, f.coeff, rule=lambda t: tuple_coboundary(g, f, t),
                              name=f"d({f.name})")


# -- the two translations ------------------------------------------------------------

def cat_to_cub(g: KGraph, f: CategoricalCochain) -> CochainTable:
    """Evaluate f on the signed color-order factorizations of each cube."""
    n = f.degree
    values = {}
    for cube in basis(g).cubes(n):
        if n == 0:
            values[cube] = f(ComposableTuple((), cube.anchor))
            continue
        cs = color_type(cube)
        total = 0
        for perm, sg in permutations_with_sign(n):
            factors = g.factor(cube, [cs[p - 1] for p in perm])
            total += sg * f(ComposableTuple(tuple(factors), cube.source))
        values[cube] = total
    return CochainTable(n, f.coeff, values)


def cub_to_cat(g: KGraph, table: CochainTable, t: ComposableTuple, order=None,
               action: Callable[[int, Morphism], int] | None = None) -> int:
    """Sum the table over the unit cubes of every staircase rectangle of t.

    ``action(value, m)`` applies the module action of the trailing piece
    m = l(top corner, d(l)); omitted for constant coefficients.
    """
    n = len(t)
    if n != table.degree:
        raise KGraphError(f"a {table.degree}-cochain needs a tuple of length {table.degree}")
    if n == 0:
        return table.coeff.reduce(table[g.identity(t.vertex)])
    lam = g.compose_all(t.entries)
    total = 0
    for K in itertools.combinations(range(1, g.k + 1), n):
        eK = unit_sum(g.k, K)
        b, c = staircase(g, t.entries, K, order)
        for m in box(dadd(b, eK), c):
            v = table[g.segment(lam, dsub(m, eK), m)]
            if action is not None:
                v = action(v, g.segment(lam, m, lam.degree))
            total += v
    return table.coeff.reduce(total)


def as_evaluator(g: KGraph, table: CochainTable, order=None) -> CategoricalCochain:
    return CategoricalCochain(table.degree, table.coeff, rule=lambda t: cub_to_cat(g, table, t, order),
                              name="from-cubes")


def round_trip(g: KGraph, table: CochainTable) -> bool:
    table.check_total(g)
    return cat_to_cub(g, as_evaluator(g, table)) == table


# -- sampled cochain-map laws ----------------------------------------------------------------

def sample_tuples(g: KGraph, length: int, bound, limit: int | None = None,
                  rng: random.Random | None = None) -> list[ComposableTuple]:
    ts = list(enumerate_tuples(g, length, tuple(bound)))
    if limit is not None and len(ts) > limit:
        ts = (rng or random.Random(0)).sample(ts, limit)
    return ts


def cocycle_identity_holds(g: KGraph, table: CochainTable, tuples) -> tuple[bool, ComposableTuple | None]:
    """The translated cochain has zero categorical coboundary on every given tuple."""
    f = as_evaluator(g, table)
    for t in tuples:
        if table.coeff.reduce(tuple_coboundary(g, f, t)):
            return False, t
    return True, None


def coboundary_commutes_cub(g: KGraph, h: CochainTable, tuples) -> tuple[bool, ComposableTuple | None]:
    """Translating delta h agrees with the categorical coboundary of the translation of h."""
    left = as_evaluator(g, coboundary(g, h))
    right = as_evaluator(g, h)
    for t in tuples:
        if left(t) != h.coeff.reduce(tuple_coboundary(g, right, t)):
            return False, t
    return True, None


def coboundary_commutes_cat(g: KGraph, f: CategoricalCochain) -> tuple[bool, Morphism | None]:
    """cat_to_cub of delta f equals the cubical coboundary of cat_to_cub f."""
    left = cat_to_cub(g, cat_coboundary(g, f))
    right = coboundary(g, cat_to_cub(g, f))
    for cube, v in left.values.items():
        if v != right[cube]:
            return False, cube
    return True, None


def degree1_path_independence(g: KGraph, table: CochainTable, lam: Morphism, trials: int = 20,
                              seed: int = 0) -> bool:
    """Summing a 1-cocycle along random edge factorizations of lam gives one value."""
    if table.degree != 1:
        raise KGraphError("path independence is about 1-cochains")
    ok, witness = is_cocycle(g, table)
    if not ok:
        raise NotACocycle(witness)
    rng = random.Random(seed)
    target = cub_to_cat(g, table, make_tuple([lam]))
    colors = [g.color(e) for e in lam.word]
    for _ in range(trials):
        rng.shuffle(colors)
        total = sum(table[e] for e in g.factor(lam, colors))
        if table.coeff.reduce(total) != target:
            return False
    return True


# -- evaluator catalog ----------------------------------------------------------------------

def _stable_int(text: str, seed: int, span: int) -> int:
    h = hashlib.blake2b(f"{seed}:{text}".encode(), digest_size=8).digest()
    return int.from_bytes(h, "big") % (2 * span + 1) - span


def random_evaluator(degree: int, coeff: Coefficients = Z, seed: int = 0, span: int = 9) -> CategoricalCochain:
    """A reproducible pseudo-random cochain keyed on the tuple's words."""
    def rule(t: ComposableTuple) -> int:
        key = "|".join(f"{m.anchor}:{'.'.join(m.word)}" for m in t.entries) or f"<{t.vertex}>"
        return _stable_int(key, seed, span)
    return CategoricalCochain(degree, coeff, rule=rule, name=f"random-{seed}")


def _weights(params: dict, key: str, size: int) -> list[int]:
    w = params.get(key)
    if w is None:
        return [1] * size
    if len(w) != size:
        raise KGraphError(f"parameter {key!r} needs {size} entries")
    return [int(x) for x in w]


def degree_weight(g: KGraph, params: dict, coeff: Coefficients) -> CategoricalCochain:
    """f(l) = sum_i w_i d_i(l); additive, hence a 1-cocycle."""
    w = _weights(params, "weights", g.k)
    return CategoricalCochain(1, coeff, rule=lambda t: sum(a * b for a, b in zip(w, t[0].degree)),
                              name="degree-weight")


def bicharacter(g: KGraph, params: dict, coeff: Coefficients) -> CategoricalCochain:
    """f(l, m) = sum_{i<j} c_ij d_i(l) d_j(m); a 2-cocycle."""
    pairs = list(itertools.combinations(range(g.k), 2))
    c = _weights(params, "coefficients", len(pairs))
    def rule(t):
        a, b = t[0].degree, t[1].degree
        return sum(x * a[i] * b[j] for x, (i, j) in zip(c, pairs))
    return CategoricalCochain(2, coeff, rule=rule, name="bicharacter")


def vertex_coboundary(g: KGraph, params: dict, coeff: Coefficients) -> CategoricalCochain:
    """f(l) = h(s(l)) - h(r(l)) for a pseudo-random vertex function h."""
    seed = int(params.get("seed", 0))
    h = {v: _stable_int(v, seed, 9) for v in g.vertices}
    return CategoricalCochain(1, coeff, rule=lambda t: h[t[0].source] - h[t[0].anchor],
                              name="vertex-coboundary")


def zero_cochain(degree: int):
    def build(g: KGraph, params: dict, coeff: Coefficients) -> CategoricalCochain:
        n = int(params.get("degree", degree))
        return CategoricalCochain(n, coeff, rule=lambda t: 0, name="zero")
    return build


def random_rule(g: KGraph, params: dict, coeff: Coefficients) -> CategoricalCochain:
    return random_evaluator(int(params.get("degree", 1)), coeff, int(params.get("seed", 0)))


EVALUATORS: dict[str, Callable[[KGraph, dict, Coefficients], CategoricalCochain]] = {
    "zero": zero_cochain(1),
    "degree-weight": degree_weight,
    "bicharacter": bicharacter,
    "vertex-coboundary": vertex_coboundary,
    "random": random_rule,
}


def evaluator(name: str, g: KGraph, params: dict | None = None, coeff: Coefficients = Z) -> CategoricalCochain:
    try:
        build = EVALUATORS[name]
    except KeyError:
        raise KGraphError(f"unknown evaluator {name!r}; known: {sorted(EVALUATORS)}") from None
    return build(g, params or {}, coeff)
