"""Binary relations on a finite universe.

A relation is stored as its successor rows: ``rows[x]`` is the bit mask of
``{y : x R y}``. Together the rows form the dense ``n x n`` adjacency table.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DomainError, PreconditionError
from .sets import SetFamily, Subset, Universe, iter_bits


class BinaryRelation:
    __slots__ = ("universe", "rows")

    def __init__(self, universe: Universe, rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != universe.n:
            raise DomainError(f"expected {universe.n} rows, got {len(rows)}")
        full = universe.full_mask
        for row in rows:
            if not isinstance(row, int) or not 0 <= row <= full:
                raise DomainError(f"row {row!r} has bits outside a universe of size {universe.n}")
        self.universe = universe
        self.rows = rows

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        """Build from index pairs; duplicates are ignored."""
        rows = [0] * universe.n
        for x, y in pairs:
            rows[universe.check_element(x)] |= 1 << universe.check_element(y)
        return cls(universe, rows)

    @classmethod
    def from_label_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> "BinaryRelation":
        return cls.from_pairs(universe, ((universe.index(a), universe.index(b)) for a, b in pairs))

    @classmethod
    def identity(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, [1 << i for i in range(universe.n)])

    @classmethod
    def empty(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, [0] * universe.n)

    @classmethod
    def full(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, [universe.full_mask] * universe.n)

    @classmethod
    def from_partition(cls, universe: Universe, blocks: Iterable[Iterable[int]]) -> "BinaryRelation":
        """The equivalence relation whose classes are ``blocks``."""
        rows = [0] * universe.n
        for block in blocks:
            mask = universe.subset_of(block).mask
            for x in iter_bits(mask):
                rows[x] |= mask
        return cls(universe, rows)

    @classmethod
    def from_code(cls, universe: Universe, code: int) -> "BinaryRelation":
        """Decode the flattened adjacency number (bit ``x*n + y`` is ``x R y``)."""
        n = universe.n
        width = (1 << n) - 1
        return cls(universe, [(code >> (x * n)) & width for x in range(n)])

    @property
    def code(self) -> int:
        n = self.universe.n
        out = 0
        for x, row in enumerate(self.rows):
            out |= row << (x * n)
        return out

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        n = self.universe.n
        return tuple(tuple(bool(row >> y & 1) for y in range(n)) for row in self.rows)

    def contains(self, x: int, y: int) -> bool:
        u = self.universe
        return bool(self.rows[u.check_element(x)] >> u.check_element(y) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Pairs in ascending flattened-index order."""
        for x, row in enumerate(self.rows):
            for y in iter_bits(row):
                yield x, y

    def label_pairs(self) -> list[tuple[str, str]]:
        labels = self.universe.labels
        return sorted((labels[x], labels[y]) for x, y in self.pairs())

    def issubset(self, other: "BinaryRelation") -> bool:
        _same_universe(self, other)
        return all(not a & ~b for a, b in zip(self.rows, other.rows))

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BinaryRelation) and self.rows == other.rows and self.universe == other.universe

    def __hash__(self) -> int:
        return hash((self.universe, self.rows))

    def __str__(self) -> str:
        return "{" + ", ".join(f"({a}, {b})" for a, b in self.label_pairs()) + "}"

    def __repr__(self) -> str:
        return f"BinaryRelation({self})"


def _same_universe(a: BinaryRelation, b: BinaryRelation) -> None:
    if a.universe != b.universe:
        raise DomainError("relations are over different universes")


def inverse(r: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(r.universe, kernels.transpose(r.rows, r.n))


def is_reflexive(r: BinaryRelation) -> bool:
    return kernels.is_reflexive(r.rows)


def is_symmetric(r: BinaryRelation) -> bool:
    return kernels.is_symmetric(r.rows)


def is_transitive(r: BinaryRelation) -> bool:
    return kernels.is_transitive(r.rows)


def is_equivalence(r: BinaryRelation) -> bool:
    return is_reflexive(r) and is_symmetric(r) and is_transitive(r)


def failed_properties(r: BinaryRelation) -> list[str]:
    """Names of the equivalence-relation properties ``r`` lacks."""
    out = []
    if not is_reflexive(r):
        out.append("reflexive")
    if not is_symmetric(r):
        out.append("symmetric")
    if not is_transitive(r):
        out.append("transitive")
    return out


def require_equivalence(r: BinaryRelation) -> None:
    missing = failed_properties(r)
    if missing:
        raise PreconditionError("relation is not an equivalence relation: not " + ", not ".join(missing))


def successor_neighborhood(r: BinaryRelation, x: int) -> Subset:
    """``{y : x R y}``."""
    return Subset(r.universe, r.rows[r.universe.check_element(x)])


def predecessor_neighborhood(r: BinaryRelation, x: int) -> Subset:
    """``{y : y R x}``."""
    bit = 1 << r.universe.check_element(x)
    mask = 0
    for y, row in enumerate(r.rows):
        if row & bit:
            mask |= 1 << y
    return Subset(r.universe, mask)


def equivalence_classes(r: BinaryRelation) -> SetFamily:
    """The partition ``U/R``; raises PreconditionError unless ``r`` is an equivalence."""
    require_equivalence(r)
    return SetFamily.from_masks(r.universe, set(r.rows))
