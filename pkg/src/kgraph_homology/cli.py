"""Command line front end; every command prints one JSON report.

Exit codes: 0 success, 1 the graph fails validation, 2 a check failed (or a
computation was refused), 3 unreadable input or schema violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import schemas
from .categorical import CategoryTooLarge, cat_homology
from .chain_maps import verify_chain_map_identities, verify_naturality
from .chains import Coefficients
from .cocycles import EVALUATORS, cat_to_cub, cub_to_cat, evaluator
from .cubical import basis, cubical_cohomology, cubical_homology, uct_prediction
from .kgraph import KGraph, KGraphError, degree_overflow, validate
from .linalg import AbelianGroup
from .serialize import (DocumentError, dumps, graph_morphism_from_doc, load_graph, read_json,
                        table_from_doc, table_to_doc, tuple_literal, tuples_from_doc)

OK, INVALID, CHECK_FAILED, BAD_INPUT = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    graph: str
    bound: tuple[int, ...] | None
    coeff: Coefficients
    seed: int
    out: str | None
    order: str


class Exit(Exception):
    def __init__(self, code: int, doc: dict):
        super().__init__(doc.get("error", ""))
        self.code, self.doc = code, doc


def parse_degree(text: str, k: int) -> tuple[int, ...]:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise Exit(BAD_INPUT, {"error": f"bad degree {text!r}"}) from None
    if len(parts) == 1:
        parts *= k
    if len(parts) != k or any(x < 0 for x in parts):
        raise Exit(BAD_INPUT, {"error": f"degree {text!r} needs {k} nonnegative entries"})
    return tuple(parts)


def _valid_graph(cfg: RunConfig) -> KGraph:
    g = load_graph(cfg.graph)
    report = validate(g)
    if not report.ok:
        raise Exit(INVALID, {"command": "validate", **report.to_json()})
    return g


def _group(g: AbelianGroup) -> dict:
    return g.to_json()


def cmd_validate(cfg: RunConfig, args) -> tuple[int, dict]:
    g = load_graph(cfg.graph)
    bound = parse_degree(args.bound, g.k) if args.bound else None
    report = validate(g, bound)
    return (OK if report.ok else INVALID), {"command": "validate", **report.to_json()}


def cmd_info(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    B = basis(g)
    return OK, {"command": "info", "k": g.k, "vertices": len(g.vertices), "edges": len(g.edges),
                "squares": len(g.squares), "cubes": [B.size(n) for n in range(g.k + 1)]}


def _degrees(g: KGraph, args) -> list[int]:
    return [args.n] if args.n is not None else list(range(g.k + 1))


def _groups_doc(doc: dict, ns: list[int], groups: list[AbelianGroup], single: bool) -> dict:
    if single:
        doc.update(n=ns[0], group=_group(groups[0]))
    else:
        doc["groups"] = [{"n": n, "group": _group(h)} for n, h in zip(ns, groups)]
    return doc


def cmd_homology(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    ns = _degrees(g, args)
    hs = [cubical_homology(g, n, cfg.coeff, args.reduced) for n in ns]
    doc = {"command": "homology", "coeff": cfg.coeff.name, "reduced": args.reduced}
    return OK, _groups_doc(doc, ns, hs, args.n is not None)


def cmd_cohomology(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    ns = _degrees(g, args)
    hs = [cubical_cohomology(g, n, cfg.coeff) for n in ns]
    return OK, _groups_doc({"command": "cohomology", "coeff": cfg.coeff.name}, ns, hs, args.n is not None)


def cmd_cat_homology(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    probe = parse_degree(args.probe_bound, g.k)
    witness = degree_overflow(g, probe)
    if witness is not None:
        return CHECK_FAILED, {"error": "category is not finite within the probe bound",
                              "probeBound": list(probe), "witness": list(witness.word)}
    ns = _degrees(g, args) if args.n is not None else list(range(g.k + 2))
    try:
        hs = [cat_homology(g, n, cfg.coeff, probe, args.max_generators) for n in ns]
    except CategoryTooLarge as err:
        return CHECK_FAILED, {"error": str(err)}
    doc = {"command": "cat-homology", "coeff": cfg.coeff.name, "probeBound": list(probe)}
    return OK, _groups_doc(doc, ns, hs, args.n is not None)


def cmd_verify(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    bound = cfg.bound or (2,) * g.k
    reports = [("chain-maps", verify_chain_map_identities(g, bound, args.max_length))]
    if args.naturality:
        path = Path(args.naturality)
        phi = graph_morphism_from_doc(g, read_json(path), path.parent)
        if not validate(phi.codomain).ok:
            raise Exit(INVALID, {"error": "codomain of the naturality morphism is not a valid k-graph"})
        problems = phi.problems()
        if problems:
            raise Exit(INVALID, {"error": f"not a k-graph morphism: {problems[0]}"})
        reports.append(("naturality", verify_naturality(phi, bound, args.max_length)))
    ok = all(r.ok for _, r in reports)
    doc = {"command": "verify", "pass": ok, "reports": [{"name": n, **r.to_json()} for n, r in reports]}
    return (OK if ok else CHECK_FAILED), doc


def cmd_translate(cfg: RunConfig, args) -> tuple[int, dict]:
    g = _valid_graph(cfg)
    if args.direction == "cub2cat":
        if not (args.cocycle and args.tuples):
            raise Exit(BAD_INPUT, {"error": "cub2cat needs --cocycle and --tuples"})
        table = table_from_doc(g, read_json(args.cocycle))
        tuples = tuples_from_doc(g, read_json(args.tuples))
        values = []
        for t in tuples:
            if len(t) != table.degree:
                raise Exit(BAD_INPUT, {"error": f"tuple {t!r} has length {len(t)}, expected {table.degree}"})
            values.append({"tuple": tuple_literal(t), "value": cub_to_cat(g, table, t, cfg.order)})
        return OK, {"command": "translate", "direction": "cub2cat", "order": cfg.order, "values": values}
    if not args.evaluator:
        raise Exit(BAD_INPUT, {"error": "cat2cub needs --evaluator"})
    params = json.loads(args.params) if args.params else {}
    if not isinstance(params, dict):
        raise Exit(BAD_INPUT, {"error": "--params must be a JSON object"})
    if args.degree is not None:
        params.setdefault("degree", args.degree)
    params.setdefault("seed", cfg.seed)
    try:
        f = evaluator(args.evaluator, g, params, cfg.coeff)
    except KGraphError as err:
        raise Exit(BAD_INPUT, {"error": str(err)}) from None
    table = cat_to_cub(g, f)
    return OK, {"command": "translate", "direction": "cat2cub", "evaluator": args.evaluator,
                "table": table_to_doc(table)}


def cmd_uct(cfg: RunConfig, args) -> tuple[int, dict]:
    if args.m < 2:
        raise Exit(BAD_INPUT, {"error": "--m must be at least 2"})
    g = _valid_graph(cfg)
    checks = []
    for n in _degrees(g, args):
        lhs = cubical_cohomology(g, n, Coefficients(args.m))
        rhs = uct_prediction(g, n, args.m)
        checks.append({"n": n, "pass": lhs == rhs, "cohomology": _group(lhs), "predicted": _group(rhs)})
    ok = all(c["pass"] for c in checks)
    return (OK if ok else CHECK_FAILED), {"command": "uct", "m": args.m, "pass": ok, "checks": checks}


COMMANDS = {
    "validate": cmd_validate, "info": cmd_info, "homology": cmd_homology,
    "cohomology": cmd_cohomology, "cat-homology": cmd_cat_homology, "verify": cmd_verify,
    "translate": cmd_translate, "uct": cmd_uct,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kgraph-homology",
                                description="Exact (co)homology and chain-map checks for finite k-graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph JSON file, or builtin:torus2 / builtin:fig8 / "
                                      "builtin:single-loop / builtin:omega:K:M1,...,MK")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        return sp

    sp = add("validate", "check the square data")
    sp.add_argument("--bound", help="degree bound for the confluence probe, e.g. 2,2")
    add("info", "counts of vertices, edges, squares and cubes")
    for name in ("homology", "cohomology"):
        sp = add(name, f"cubical {name}")
        sp.add_argument("--coeff", default="Z", help="Z or Z/m")
        sp.add_argument("--n", type=int)
        if name == "homology":
            sp.add_argument("--reduced", action="store_true")
    sp = add("cat-homology", "homology of a finite category from composable tuples")
    sp.add_argument("--probe-bound", required=True)
    sp.add_argument("--coeff", default="Z")
    sp.add_argument("--n", type=int)
    sp.add_argument("--max-generators", type=int, default=20000)
    sp = add("verify", "exhaustive chain-map identity checks")
    sp.add_argument("--bound", required=True)
    sp.add_argument("--max-length", type=int)
    sp.add_argument("--naturality", help="graph morphism JSON file")
    sp = add("translate", "move cochains between cubes and tuples")
    sp.add_argument("--direction", choices=["cub2cat", "cat2cub"], required=True)
    sp.add_argument("--cocycle")
    sp.add_argument("--tuples")
    sp.add_argument("--evaluator", choices=sorted(EVALUATORS))
    sp.add_argument("--params", help="JSON object of evaluator parameters")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--coeff", default="Z")
    sp.add_argument("--order", choices=["forward", "reversed"], default="forward")
    sp = add("uct", "compare mod-m cohomology with the universal coefficient prediction")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int)
    return p


def _emit(doc: dict, out: str | None, stream=None) -> None:
    text = dumps(doc)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        (stream or sys.stdout).write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        coeff = Coefficients.parse(getattr(args, "coeff", "Z"))
    except ValueError as err:
        _emit({"error": str(err)}, None, sys.stderr)
        return BAD_INPUT
    cfg = RunConfig(args.command, args.graph, None, coeff, args.seed, args.out,
                    getattr(args, "order", "forward"))
    try:
        if args.command == "verify":
            cfg.bound = parse_degree(args.bound, load_graph(args.graph).k)
        code, doc = COMMANDS[args.command](cfg, args)
    except Exit as ex:
        code, doc = ex.code, ex.doc
    except (DocumentError, json.JSONDecodeError) as err:
        code, doc = BAD_INPUT, {"error": str(err)}
    if code == BAD_INPUT:
        _emit(doc, None, sys.stderr)
    else:
        _emit(doc, cfg.out)
    return code


def output_schema(doc: dict) -> dict:
    """The published schema a report must satisfy."""
    if "error" in doc:
        return schemas.OUTPUTS["error"]
    cmd = doc["command"]
    if cmd in ("homology", "cohomology", "cat-homology"):
        return schemas.OUTPUTS["homology"]
    if cmd == "translate":
        return schemas.OUTPUTS[f"translate-{doc['direction']}"]
    return schemas.OUTPUTS[cmd]


if __name__ == "__main__":
    sys.exit(main())
