"""Schemas for the JSON documents this package writes, plus a validator.

The validator covers the subset of JSON Schema these documents need
(type, required, properties, items, enum) so downstream consumers can
rely on the shapes without pulling in a validation dependency. Schema
files live in ``signedbalance/schemas/`` and are shipped with the
package.
"""

from __future__ import annotations

import json
from importlib import resources

_TYPE_CHECKS = {
    "object": lambda v: isinstance(v, dict),
    "array": lambda v: isinstance(v, list),
    "string": lambda v: isinstance(v, str),
    "boolean": lambda v: isinstance(v, bool),
    "integer": lambda v: isinstance(v, int) and not isinstance(v, bool),
    "number": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
    "null": lambda v: v is None,
}


class SchemaViolation(Exception):
    """A JSON document does not match its declared schema."""


def load_schema(name: str) -> dict:
    """Load a shipped schema by short name, e.g. ``graph`` or ``report``."""
    path = resources.files("signedbalance").joinpath("schemas", f"{name}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _check(obj, schema: dict, path: str) -> None:
    declared = schema.get("type")
    if declared is not None:
        types = declared if isinstance(declared, list) else [declared]
        if not any(_TYPE_CHECKS[t](obj) for t in types):
            raise SchemaViolation(f"{path}: expected type {declared}, got {type(obj).__name__}")
    if "enum" in schema and obj not in schema["enum"]:
        raise SchemaViolation(f"{path}: value {obj!r} not in {schema['enum']}")
    if isinstance(obj, dict):
        for key in schema.get("required", []):
            if key not in obj:
                raise SchemaViolation(f"{path}: missing required key {key!r}")
        for key, subschema in schema.get("properties", {}).items():
            if key in obj:
                _check(obj[key], subschema, f"{path}.{key}")
        extra = schema.get("additionalProperties")
        if isinstance(extra, dict):
            for key, value in obj.items():
                if key not in schema.get("properties", {}):
                    _check(value, extra, f"{path}.{key}")
    if isinstance(obj, list) and "items" in schema:
        for i, item in enumerate(obj):
            _check(item, schema["items"], f"{path}[{i}]")


def validate(obj, schema_name: str) -> None:
    """Raise :class:`SchemaViolation` unless ``obj`` matches the named schema."""
    _check(obj, load_schema(schema_name), "$")
