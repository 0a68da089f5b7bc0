"""Problem and report files.

Reports are plain JSON with sorted keys; rationals are written as ``"p/q"``
strings (integers stay integers), so output bytes are a function of the
input and the version only.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any

import jsonschema

from . import __version__

PROBLEM_SCHEMA = {
    "type": "object",
    "properties": {
        "problem": {"enum": ["affine_torus", "points_p1"]},
        "ambient_rank": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "weights": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
        "names": {"type": "array", "items": {"type": "string"}},
        "n": {"type": "integer", "minimum": 3},
        "bound": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "t_samples": {
            "type": "array",
            "items": {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}]},
        },
        "description": {"type": "string"},
    },
    "required": ["problem"],
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"problem": {"const": "affine_torus"}}},
            "then": {"required": ["weights"]},
        },
        {
            "if": {"properties": {"problem": {"const": "points_p1"}}},
            "then": {"required": ["n"]},
        },
    ],
}


class SchemaError(ValueError):
    pass


def validate_problem(obj: Any) -> dict:
    try:
        jsonschema.validate(obj, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {exc.message}") from None
    if obj["problem"] == "affine_torus":
        gens = obj.get("generators")
        if gens is not None and len(gens) != len(obj["weights"]):
            raise SchemaError("generators and weights must have the same length")
        rank = obj.get("ambient_rank")
        if gens is None and rank is not None and rank != len(obj["weights"]):
            raise SchemaError("without generators, ambient_rank must equal the number of weights")
        if gens is not None and rank is None:
            raise SchemaError("ambient_rank is required when generators are given")
    return obj


def parse_problem(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return validate_problem(obj)


def jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj) if f.repr}
    return str(obj)


def make_report(problem: dict | None, results: dict, flags: list[str] | None = None) -> dict:
    return {
        "version": __version__,
        "problem": problem,
        "results": jsonable(results),
        "flags": sorted(set(flags or [])),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
