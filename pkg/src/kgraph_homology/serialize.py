"""Reading and writing the JSON documents used by the command line."""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from . import schemas
from .categorical import ComposableTuple, make_tuple
from .chains import Coefficients
from .cubical import CochainTable, basis
from .kgraph import (Edge, KGraph, KGraphError, KGraphMorphism, Morphism, Square, fig8, omega,
                     single_loop, torus2)


class DocumentError(ValueError):
    """Unreadable file, malformed JSON or a schema violation."""


def read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err.strerror}") from None
    except json.JSONDecodeError as err:
        raise DocumentError(f"{path} is not valid JSON: {err}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _validated(doc, schema, what: str):
    try:
        schemas.check(doc, schema)
    except jsonschema.ValidationError as err:
        where = "/".join(map(str, err.absolute_path)) or "<root>"
        raise DocumentError(f"{what} does not match its schema at {where}: {err.message}") from None
    return doc


# -- graphs ------------------------------------------------------------------------

def graph_from_doc(doc) -> KGraph:
    _validated(doc, schemas.GRAPH, "graph document")
    try:
        return KGraph(doc["k"], doc["vertices"],
                      [Edge(e["id"], e["color"], e["range"], e["source"]) for e in doc["edges"]],
                      [Square(tuple(s["lhs"]), tuple(s["rhs"])) for s in doc["squares"]])
    except KGraphError as err:
        raise DocumentError(str(err)) from None


def graph_to_doc(g: KGraph) -> dict:
    return {
        "k": g.k,
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "color": e.color, "range": e.range, "source": e.source}
                  for e in g.edges.values()],
        "squares": [{"lhs": list(s.lhs), "rhs": list(s.rhs)} for s in g.squares],
    }


BUILTINS = {"torus2": torus2, "fig8": fig8, "single-loop": single_loop}


def builtin_graph(name: str) -> KGraph:
    """``torus2``, ``fig8``, ``single-loop`` or ``omega:K:M1,M2,...``."""
    if name in BUILTINS:
        return BUILTINS[name]()
    parts = name.split(":")
    if parts[0] == "omega" and len(parts) == 3:
        try:
            return omega(int(parts[1]), [int(x) for x in parts[2].split(",")])
        except (ValueError, KGraphError) as err:
            raise DocumentError(f"bad omega graph {name!r}: {err}") from None
    raise DocumentError(f"unknown builtin graph {name!r}")


def load_graph(source: str) -> KGraph:
    if source.startswith("builtin:"):
        return builtin_graph(source[len("builtin:"):])
    return graph_from_doc(read_json(source))


# -- morphisms and tuples ---------------------------------------------------------------

def morphism_literal(m: Morphism) -> dict:
    return {"edges": list(m.word)} if m.word else {"vertex": m.anchor}


def parse_morphism(g: KGraph, lit) -> Morphism:
    _validated(lit, schemas.MORPHISM_LITERAL, "morphism literal")
    try:
        if "vertex" in lit:
            return g.identity(lit["vertex"])
        return g.morphism(lit["edges"])
    except KGraphError as err:
        raise DocumentError(str(err)) from None


def tuple_literal(t: ComposableTuple) -> list:
    return [morphism_literal(m) for m in t.entries]


def tuples_from_doc(g: KGraph, doc) -> list[ComposableTuple]:
    _validated(doc, schemas.TUPLES, "tuple list")
    out = []
    for lits in doc["tuples"]:
        try:
            out.append(make_tuple([parse_morphism(g, x) for x in lits]))
        except KGraphError as err:
            raise DocumentError(str(err)) from None
    return out


# -- cochain tables -------------------------------------------------------------------

def table_to_doc(table: CochainTable) -> dict:
    def cube(c: Morphism):
        return list(c.word) if c.word else {"vertex": c.anchor}
    rows = sorted(table.values.items(), key=lambda cv: (cv[0].word, cv[0].anchor))
    return {"degree": table.degree, "coeff": table.coeff.to_json(),
            "values": [{"cube": cube(c), "value": v} for c, v in rows]}


def table_from_doc(g: KGraph, doc) -> CochainTable:
    _validated(doc, schemas.COCHAIN_TABLE, "cochain table")
    values = {}
    for row in doc["values"]:
        c = row["cube"]
        m = parse_morphism(g, c if isinstance(c, dict) else {"edges": c})
        if m in values:
            raise DocumentError(f"cochain table lists {m!r} twice")
        values[m] = row["value"]
    table = CochainTable(doc["degree"], Coefficients.from_json(doc["coeff"]), values)
    try:
        table.check_total(g)
    except KGraphError as err:
        raise DocumentError(str(err)) from None
    return table


# -- graph morphisms --------------------------------------------------------------------

def graph_morphism_from_doc(domain: KGraph, doc, base: Path | None = None) -> KGraphMorphism:
    _validated(doc, schemas.GRAPH_MORPHISM, "graph morphism")
    cod = doc["codomain"]
    if isinstance(cod, str):
        if not cod.startswith("builtin:") and base is not None:
            cod = str(base / cod)
        codomain = load_graph(cod)
    else:
        codomain = graph_from_doc(cod)
    return KGraphMorphism(domain, codomain, dict(doc["vertexMap"]), dict(doc["edgeMap"]))


def graph_morphism_to_doc(phi: KGraphMorphism) -> dict:
    return {"codomain": graph_to_doc(phi.codomain), "vertexMap": dict(phi.vertex_map),
            "edgeMap": dict(phi.edge_map)}
