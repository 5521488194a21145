"""JSON document formats for objects and maps.

Documents carry 1-based labels.  Serialization is canonical: fixed key order,
relations in lexicographic tuple order, edges sorted as lists, so formatting a
parsed canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .orders import Chain, InputError
from .structures import (
    CLASS_TAGS,
    Hypergraph,
    MetricSpace,
    Morphism,
    Object,
    Signature,
    Structure,
    Violation,
    validate,
)

__all__ = [
    "DocumentError",
    "parse_object",
    "parse_morphism_map",
    "format_object",
    "format_morphism",
    "dumps",
    "loads_object",
    "document_kind",
    "validate_document",
]


class DocumentError(InputError):
    """A schema violation, annotated with the JSON path of the offending value."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise DocumentError(path, message)


def _expect_int(value: Any, path: str, minimum: int = 1) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), path, "expected an integer")
    _expect(value >= minimum, path, f"expected an integer >= {minimum}")
    return value


def _expect_key(doc: dict, key: str, path: str) -> Any:
    _expect(isinstance(doc, dict), path, "expected an object")
    _expect(key in doc, path, f"missing key {key!r}")
    return doc[key]


def document_kind(doc: dict) -> str:
    kind = _expect_key(doc, "kind", "$")
    _expect(isinstance(kind, str), "$.kind", "expected a string")
    return kind


def _parse_signature(raw: Any, path: str) -> Signature:
    _expect(isinstance(raw, list) and raw, path, "expected a nonempty array of symbols")
    symbols = []
    for i, entry in enumerate(raw):
        p = f"{path}[{i}]"
        name = _expect_key(entry, "name", p)
        _expect(isinstance(name, str) and name, f"{p}.name", "expected a nonempty string")
        arity = _expect_int(_expect_key(entry, "arity", p), f"{p}.arity")
        symbols.append((name, arity))
    try:
        return Signature(tuple(symbols))
    except InputError as exc:
        raise DocumentError(path, str(exc)) from None


def _parse_tuples(raw: Any, arity: int, size: int, path: str) -> set[tuple[int, ...]]:
    _expect(isinstance(raw, list), path, "expected an array of tuples")
    out = set()
    for i, row in enumerate(raw):
        p = f"{path}[{i}]"
        _expect(isinstance(row, list), p, "expected an array")
        _expect(len(row) == arity, p, f"expected {arity} entries")
        t = tuple(_expect_int(v, f"{p}[{j}]") for j, v in enumerate(row))
        for j, v in enumerate(t):
            _expect(v <= size, f"{p}[{j}]", f"label {v} exceeds the size {size}")
        out.add(t)
    return out


def parse_object(doc: dict) -> Object:
    """Build the object a document describes; schema errors carry JSON paths.

    Class invariants beyond well-formedness are not enforced here; run
    validate_document (or validate) to obtain a violation report.
    """
    kind = document_kind(doc)
    if kind == "chain":
        return Chain(_expect_int(_expect_key(doc, "size", "$"), "$.size"))
    if kind == "metric":
        size = _expect_int(_expect_key(doc, "size", "$"), "$.size")
        raw = _expect_key(doc, "dist", "$")
        _expect(isinstance(raw, list) and len(raw) == size, "$.dist", f"expected {size} rows")
        rows = []
        for i, row in enumerate(raw):
            p = f"$.dist[{i}]"
            _expect(isinstance(row, list) and len(row) == size, p, f"expected {size} entries")
            for j, v in enumerate(row):
                _expect(
                    isinstance(v, (int, float)) and not isinstance(v, bool),
                    f"{p}[{j}]",
                    "expected a number",
                )
            rows.append(tuple(float(v) for v in row))
        return MetricSpace(size, tuple(rows))
    if kind == "hypergraph":
        size = _expect_int(_expect_key(doc, "size", "$"), "$.size")
        r = _expect_int(_expect_key(doc, "uniformity", "$"), "$.uniformity", minimum=2)
        raw = _expect_key(doc, "edges", "$")
        _expect(isinstance(raw, list), "$.edges", "expected an array of edges")
        edges = set()
        for i, row in enumerate(raw):
            p = f"$.edges[{i}]"
            _expect(isinstance(row, list) and row, p, "expected a nonempty array")
            e = frozenset(_expect_int(v, f"{p}[{j}]") for j, v in enumerate(row))
            _expect(len(e) == len(row), p, "repeated vertex in edge")
            for v in sorted(e):
                _expect(v <= size, p, f"label {v} exceeds the size {size}")
            edges.add(e)
        return Hypergraph(size, r, frozenset(edges))
    if kind in CLASS_TAGS and kind not in ("hypergraph", "metric", "chain"):
        size = _expect_int(_expect_key(doc, "size", "$"), "$.size")
        sig = _parse_signature(_expect_key(doc, "signature", "$"), "$.signature")
        raw = _expect_key(doc, "relations", "$")
        _expect(isinstance(raw, dict), "$.relations", "expected an object keyed by symbol")
        unknown = set(raw) - set(sig.names)
        _expect(not unknown, "$.relations", f"unknown symbols {sorted(unknown)}")
        rels = {}
        for name in sig.names:
            rels[name] = _parse_tuples(
                raw.get(name, []), sig.arity(name), size, f"$.relations.{name}"
            )
        return Structure.make(sig, size, rels)
    raise DocumentError("$.kind", f"unknown kind {kind!r}")


def validate_document(doc: dict) -> Violation | None:
    """Parse, then check the class invariants of the document's declared kind."""
    return validate(parse_object(doc), document_kind(doc))


def parse_morphism_map(doc: dict) -> tuple[int, ...]:
    raw = _expect_key(doc, "map", "$")
    _expect(isinstance(raw, list) and raw, "$.map", "expected a nonempty array")
    return tuple(_expect_int(v, f"$.map[{i}]") for i, v in enumerate(raw))


_STRUCTURE_DEFAULT_KIND = "structure"


def format_object(obj: Object, kind: str | None = None) -> dict:
    """Canonical document of an object; kind overrides the default tag."""
    if isinstance(obj, Chain):
        return {"kind": kind or "chain", "size": obj.size}
    if isinstance(obj, MetricSpace):
        return {
            "kind": kind or "metric",
            "size": obj.size,
            "dist": [list(row) for row in obj.dist],
        }
    if isinstance(obj, Hypergraph):
        return {
            "kind": kind or "hypergraph",
            "size": obj.size,
            "uniformity": obj.uniformity,
            "edges": sorted(sorted(e) for e in obj.edges),
        }
    if isinstance(obj, Structure):
        return {
            "kind": kind or _STRUCTURE_DEFAULT_KIND,
            "size": obj.size,
            "signature": [{"name": n, "arity": a} for n, a in obj.sig.symbols],
            "relations": {
                name: sorted(list(t) for t in obj.relation(name))
                for name in obj.sig.names
            },
        }
    raise InputError(f"cannot format object of type {type(obj).__name__}")


def format_morphism(f: Morphism, include_objects: bool = False) -> dict:
    doc: dict = {"map": list(f.map)}
    if include_objects:
        doc["dom"] = format_object(f.dom)
        doc["cod"] = format_object(f.cod)
    return doc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads_object(text: str) -> Object:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None
    return parse_object(doc)
