"""JSON schemas for input documents and command reports."""
from __future__ import annotations

import jsonschema

_ID = {"type": "string", "minLength": 1}

GRAPH = {
    "type": "object",
    "required": ["k", "vertices", "edges", "squares"],
    "additionalProperties": False,
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "vertices": {"type": "array", "items": _ID},
        "edges": {"type": "array", "items": {
            "type": "object",
            "required": ["id", "color", "range", "source"],
            "additionalProperties": False,
            "properties": {"id": _ID, "color": {"type": "integer", "minimum": 1},
                           "range": _ID, "source": _ID},
        }},
        "squares": {"type": "array", "items": {
            "type": "object",
            "required": ["lhs", "rhs"],
            "additionalProperties": False,
            "properties": {
                "lhs": {"type": "array", "items": _ID, "minItems": 2, "maxItems": 2},
                "rhs": {"type": "array", "items": _ID, "minItems": 2, "maxItems": 2},
            },
        }},
    },
}

MORPHISM_LITERAL = {
    "oneOf": [
        {"type": "object", "required": ["vertex"], "additionalProperties": False,
         "properties": {"vertex": _ID}},
        {"type": "object", "required": ["edges"], "additionalProperties": False,
         "properties": {"edges": {"type": "array", "items": _ID, "minItems": 1}}},
    ]
}

COEFF = {
    "oneOf": [
        {"type": "object", "required": ["type"], "additionalProperties": False,
         "properties": {"type": {"const": "Z"}}},
        {"type": "object", "required": ["type", "modulus"], "additionalProperties": False,
         "properties": {"type": {"const": "Zmod"}, "modulus": {"type": "integer", "minimum": 2}}},
    ]
}

COCHAIN_TABLE = {
    "type": "object",
    "required": ["degree", "coeff", "values"],
    "additionalProperties": False,
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "coeff": COEFF,
        "values": {"type": "array", "items": {
            "type": "object",
            "required": ["cube", "value"],
            "additionalProperties": False,
            "properties": {
                "cube": {"oneOf": [{"type": "array", "items": _ID, "minItems": 1},
                                   {"type": "object", "required": ["vertex"],
                                    "additionalProperties": False, "properties": {"vertex": _ID}}]},
                "value": {"type": "integer"},
            },
        }},
    },
}

TUPLES = {
    "type": "object",
    "required": ["tuples"],
    "properties": {"tuples": {"type": "array", "items": {"type": "array", "items": MORPHISM_LITERAL}}},
}

GRAPH_MORPHISM = {
    "type": "object",
    "required": ["codomain", "vertexMap", "edgeMap"],
    "additionalProperties": False,
    "properties": {
        "codomain": {"oneOf": [{"type": "string"}, GRAPH]},
        "vertexMap": {"type": "object", "additionalProperties": _ID},
        "edgeMap": {"type": "object", "additionalProperties": _ID},
    },
}

GROUP = {
    "type": "object",
    "required": ["rank", "torsion"],
    "additionalProperties": False,
    "properties": {"rank": {"type": "integer", "minimum": 0},
                   "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}}},
}

CHECK = {
    "type": "object",
    "required": ["check", "generatorsTested", "pass"],
    "properties": {"check": {"type": "string"}, "generatorsTested": {"type": "integer", "minimum": 0},
                   "pass": {"type": "boolean"}, "firstWitness": {"type": "array"},
                   "note": {"type": "string"}},
    "additionalProperties": False,
}

_BOUND = {"type": "array", "items": {"type": "integer", "minimum": 0}}

OUTPUTS = {
    "validate": {"type": "object", "required": ["command", "valid", "bound", "checks"],
                 "properties": {"command": {"const": "validate"}, "valid": {"type": "boolean"},
                                "bound": _BOUND, "checks": {"type": "array", "items": CHECK}}},
    "info": {"type": "object", "required": ["command", "k", "vertices", "edges", "squares", "cubes"],
             "properties": {"command": {"const": "info"}, "k": {"type": "integer"},
                            "vertices": {"type": "integer"}, "edges": {"type": "integer"},
                            "squares": {"type": "integer"},
                            "cubes": {"type": "array", "items": {"type": "integer"}}}},
    "homology": {"type": "object", "required": ["command", "coeff"],
                 "properties": {"command": {"enum": ["homology", "cohomology", "cat-homology"]},
                                "coeff": {"type": "string"}, "reduced": {"type": "boolean"},
                                "n": {"type": "integer"}, "group": GROUP,
                                "probeBound": _BOUND,
                                "groups": {"type": "array", "items": {
                                    "type": "object", "required": ["n", "group"],
                                    "properties": {"n": {"type": "integer"}, "group": GROUP}}}},
                 "oneOf": [{"required": ["group", "n"]}, {"required": ["groups"]}]},
    "verify": {"type": "object", "required": ["command", "pass", "reports"],
               "properties": {"command": {"const": "verify"}, "pass": {"type": "boolean"},
                              "reports": {"type": "array", "items": {
                                  "type": "object",
                                  "required": ["name", "pass", "bound", "maxLength", "truncated", "checks"],
                                  "properties": {"checks": {"type": "array", "items": CHECK},
                                                 "bound": _BOUND}}}}},
    "translate-cub2cat": {"type": "object", "required": ["command", "direction", "values"],
                          "properties": {"direction": {"const": "cub2cat"},
                                         "values": {"type": "array", "items": {
                                             "type": "object", "required": ["tuple", "value"],
                                             "properties": {"tuple": {"type": "array"},
                                                            "value": {"type": "integer"}}}}}},
    "translate-cat2cub": {"type": "object", "required": ["command", "direction", "table"],
                          "properties": {"direction": {"const": "cat2cub"}, "table": COCHAIN_TABLE}},
    "uct": {"type": "object", "required": ["command", "m", "pass", "checks"],
            "properties": {"m": {"type": "integer"}, "pass": {"type": "boolean"},
                           "checks": {"type": "array", "items": {
                               "type": "object",
                               "required": ["n", "pass", "cohomology", "predicted"],
                               "properties": {"cohomology": GROUP, "predicted": GROUP}}}}},
    "error": {"type": "object", "required": ["error"], "properties": {"error": {"type": "string"}}},
}


def check(doc, schema) -> None:
    """Raise jsonschema.ValidationError when doc does not match."""
    jsonschema.validate(doc, schema)
