"""Finite universes, subsets as bit vectors, and duplicate-free set families."""
from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DomainError, PreconditionError


class Universe:
    """An ordered finite ground set.

    Elements are the dense indices ``0..n-1``; labels only matter for input
    and output. Two universes are equal when their label lists are equal.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if not labels:
            raise PreconditionError("a universe must be nonempty")
        for lab in labels:
            if not isinstance(lab, str):
                raise DomainError(f"universe labels must be strings, got {lab!r}")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            dup = next(lab for lab in labels if labels.count(lab) > 1)
            raise DomainError(f"duplicate universe label {dup!r}")
        self.labels = labels
        self._index = index

    @classmethod
    def of_size(cls, n: int, start: int = 0) -> "Universe":
        """Universe labelled ``str(start) .. str(start + n - 1)``."""
        if n < 1:
            raise PreconditionError("a universe must be nonempty")
        return cls([str(start + i) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def check_element(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < len(self.labels):
            raise DomainError(f"element {x!r} is not in a universe of size {len(self.labels)}")
        return x

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown label {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[self.check_element(x)]

    def subset(self, labels: Iterable[str]) -> "Subset":
        """Subset named by labels."""
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return Subset(self, mask)

    def subset_of(self, indices: Iterable[int]) -> "Subset":
        """Subset named by element indices."""
        mask = 0
        for i in indices:
            mask |= 1 << self.check_element(i)
        return Subset(self, mask)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def all_subsets(self) -> Iterator["Subset"]:
        """Every subset in ascending bit-vector order."""
        for mask in range(1 << len(self.labels)):
            yield Subset(self, mask)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=1 << 16)
def bit_tuple(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    return tuple(iter_bits(mask))


class Subset:
    """A subset of a universe stored as an ``n``-bit mask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int):
        if not 0 <= mask <= universe.full_mask:
            raise DomainError(f"mask {mask:#x} has bits outside a universe of size {universe.n}")
        self.universe = universe
        self.mask = mask

    def _same(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe != self.universe:
            raise DomainError("subsets belong to different universes")

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> self.universe.check_element(x) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.universe, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.universe, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.universe, self.mask & ~other.mask)

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def with_element(self, x: int) -> "Subset":
        return Subset(self.universe, self.mask | 1 << self.universe.check_element(x))

    def issubset(self, other: "Subset") -> bool:
        self._same(other)
        return not self.mask & ~other.mask

    def __le__(self, other: "Subset") -> bool:
        return self.issubset(other)

    def __ge__(self, other: "Subset") -> bool:
        return other.issubset(self)

    def labels(self) -> list[str]:
        """Labels in universe order."""
        return [self.universe.labels[i] for i in self]

    def sorted_labels(self) -> list[str]:
        return sorted(self.labels())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subset) and self.mask == other.mask and self.universe == other.universe

    def __hash__(self) -> int:
        return hash((self.universe, self.mask))

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"Subset({format_set(self)})"


class SetFamily:
    """A duplicate-free family of subsets of one universe.

    Members are kept in ascending mask order. Equal-as-sets inputs collapse.
    """

    __slots__ = ("universe", "_masks")

    def __init__(self, universe: Universe, members: Iterable[Subset] = ()):
        masks = set()
        for s in members:
            if s.universe != universe:
                raise DomainError("family member belongs to a different universe")
            masks.add(s.mask)
        self.universe = universe
        self._masks = tuple(sorted(masks))

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> "SetFamily":
        fam = cls.__new__(cls)
        fam.universe = universe
        full = universe.full_mask
        ms = set()
        for m in masks:
            if not 0 <= m <= full:
                raise DomainError(f"mask {m:#x} has bits outside a universe of size {universe.n}")
            ms.add(m)
        fam._masks = tuple(sorted(ms))
        return fam

    @classmethod
    def from_labels(cls, universe: Universe, members: Iterable[Iterable[str]]) -> "SetFamily":
        return cls(universe, (universe.subset(m) for m in members))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __iter__(self) -> Iterator[Subset]:
        for m in self._masks:
            yield Subset(self.universe, m)

    def __len__(self) -> int:
        return len(self._masks)

    def __contains__(self, s: Subset) -> bool:
        if not isinstance(s, Subset) or s.universe != self.universe:
            return False
        i = bisect_left(self._masks, s.mask)
        return i < len(self._masks) and self._masks[i] == s.mask

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.universe == other.universe
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.universe, self._masks))

    def __str__(self) -> str:
        return format_family(self)

    def __repr__(self) -> str:
        return f"SetFamily({format_family(self)})"

    def to_labels(self) -> list[list[str]]:
        """Members as label lists, each sorted, the list sorted lexicographically."""
        return sorted(s.sorted_labels() for s in self)


def format_set(s: Subset) -> str:
    if not s:
        return "∅"
    return "{" + ", ".join(s.sorted_labels()) + "}"


def format_family(fam: SetFamily) -> str:
    """Braced notation ordered by size, then labels."""
    members = sorted(fam, key=lambda s: (len(s), s.sorted_labels()))
    return "{" + ", ".join(format_set(s) for s in members) + "}"


#: Default cap on universe size for operations that scan every subset.
EXHAUSTIVE_LIMIT = 16


def require_exhaustive(n: int, limit: int | None = None, what: str = "exhaustive check") -> None:
    bound = EXHAUSTIVE_LIMIT if limit is None else limit
    if n > bound:
        raise CapacityError(f"{what} needs 2**{n} subsets; universe size {n} exceeds the bound {bound}")
