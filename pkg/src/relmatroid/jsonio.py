"""JSON formats for relations and explicit matroids.

Relation::

    {"universe": ["a", "b", "c"], "pairs": [["a", "a"], ["a", "b"]]}

Matroid (the empty set is implied)::

    {"universe": ["a", "b", "c"], "independents": [["a"], ["a", "b"]]}

Loaders raise :class:`LoadError` naming the file, the line and the defect.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DomainError, LoadError, PreconditionError
from .matroid import ExplicitMatroid, check_matroid_axioms
from .relation import BinaryRelation
from .sets import SetFamily, Universe


def _line_of(text: str, needle: str, after: str | None = None) -> int | None:
    start = 0
    if after is not None:
        pos = text.find(after)
        if pos >= 0:
            start = pos
    pos = text.find(needle, start)
    if pos < 0:
        return None
    return text.count("\n", 0, pos) + 1


def _parse(text: str, path) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(f"invalid JSON: {exc.msg} (column {exc.colno})", path, exc.lineno) from None


def _universe(doc: Any, text: str, path) -> Universe:
    if not isinstance(doc, dict):
        raise LoadError("top level must be a JSON object", path, 1)
    if "universe" not in doc:
        raise LoadError('missing key "universe"', path)
    labels = doc["universe"]
    line = _line_of(text, '"universe"')
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise LoadError('"universe" must be a list of strings', path, line)
    try:
        return Universe(labels)
    except (DomainError, PreconditionError) as exc:
        raise LoadError(str(exc), path, line) from None


def _label(u: Universe, label: Any, text: str, path, section: str) -> int:
    if not isinstance(label, str):
        raise LoadError(f"label {label!r} in {section!r} must be a string", path,
                        _line_of(text, json.dumps(label), f'"{section}"'))
    try:
        return u.index(label)
    except DomainError:
        raise LoadError(f"unknown label {label!r} in {section!r}", path,
                        _line_of(text, json.dumps(label), f'"{section}"')) from None


def relation_from_text(text: str, path=None) -> BinaryRelation:
    doc = _parse(text, path)
    u = _universe(doc, text, path)
    if "pairs" not in doc:
        raise LoadError('missing key "pairs"', path)
    pairs = doc["pairs"]
    if not isinstance(pairs, list):
        raise LoadError('"pairs" must be a list', path, _line_of(text, '"pairs"'))
    out = []
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2:
            raise LoadError(f"pair {json.dumps(p)} must be a two-element list", path,
                            _line_of(text, "[", '"pairs"'))
        out.append((_label(u, p[0], text, path, "pairs"), _label(u, p[1], text, path, "pairs")))
    return BinaryRelation.from_pairs(u, out)


def matroid_from_text(text: str, path=None) -> ExplicitMatroid:
    doc = _parse(text, path)
    u = _universe(doc, text, path)
    if "independents" not in doc:
        raise LoadError('missing key "independents"', path)
    members = doc["independents"]
    line = _line_of(text, '"independents"')
    if not isinstance(members, list):
        raise LoadError('"independents" must be a list of label lists', path, line)
    masks = {0}
    for m in members:
        if not isinstance(m, list):
            raise LoadError(f"independent set {json.dumps(m)} must be a list", path, line)
        mask = 0
        for lab in m:
            mask |= 1 << _label(u, lab, text, path, "independents")
        masks.add(mask)
    fam = SetFamily.from_masks(u, masks)
    report = check_matroid_axioms(fam)
    if not report.passed:
        bad = report.failures()[0]
        raise LoadError(f"not a matroid: axiom {bad.property} fails, witness {json.dumps(bad.witness)}", path, line)
    return ExplicitMatroid(u, fam, check=False)


def load_relation(path) -> BinaryRelation:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise LoadError(f"cannot read file: {exc.strerror}", path) from None
    return relation_from_text(text, path)


def load_matroid(path) -> ExplicitMatroid:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise LoadError(f"cannot read file: {exc.strerror}", path) from None
    return matroid_from_text(text, path)


def relation_to_json(r: BinaryRelation) -> dict:
    return {"universe": list(r.universe.labels), "pairs": [list(p) for p in r.label_pairs()]}


def matroid_to_json(m: ExplicitMatroid) -> dict:
    return {"universe": list(m.universe.labels), "independents": [x for x in m.independents.to_labels() if x]}


def dumps(doc: dict) -> str:
    """Canonical serialisation: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": ")) + "\n"
