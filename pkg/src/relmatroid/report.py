"""Pass/fail records for exhaustive property checks."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .sets import Universe, iter_bits

#: How many counterexamples a property result keeps by default.
WITNESS_CAP = 8


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property over its whole domain.

    ``witnesses`` are the first failures in scan order (smallest bit vectors
    first); ``failures`` counts all of them.
    """

    property: str
    passed: bool
    witnesses: tuple[dict, ...] = ()
    failures: int = 0

    @property
    def witness(self) -> dict | None:
        return self.witnesses[0] if self.witnesses else None

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "pass": self.passed,
            "witness": self.witness,
            "failures": self.failures,
        }


@dataclass(frozen=True)
class Report:
    results: tuple[PropertyResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.property == name:
                return r
        raise KeyError(name)

    def __iter__(self) -> Iterator[PropertyResult]:
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def names(self) -> list[str]:
        return [r.property for r in self.results]

    def to_json_lines(self) -> str:
        return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in self.results)


def labels_of(universe: Universe, mask: int) -> list[str]:
    labels = universe.labels
    return sorted(labels[i] for i in iter_bits(mask))


def result(name: str, count: int, witnesses: Iterable[dict]) -> PropertyResult:
    ws = tuple(witnesses)
    return PropertyResult(name, count == 0, ws, count)


class Collector:
    """Accumulates failures for one property, keeping the first few witnesses."""

    def __init__(self, name: str, cap: int = WITNESS_CAP):
        self.name = name
        self.cap = cap
        self.count = 0
        self.witnesses: list[dict] = []

    def fail(self, witness: dict) -> None:
        self.count += 1
        if len(self.witnesses) < self.cap:
            self.witnesses.append(witness)

    def result(self) -> PropertyResult:
        return result(self.name, self.count, self.witnesses)
