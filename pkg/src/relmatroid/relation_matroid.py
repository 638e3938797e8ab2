"""Relation matroids and their closed-form characteristics.

The successor relation matroid of ``R`` declares a subset independent when its
elements have pairwise distinct successor neighborhoods. Grouping elements by
neighborhood gives a partition of the universe (the *blocks*); the matroid is
the partition matroid "at most one element per block", and every closed form
below reads that partition. The predecessor matroid is the successor matroid
of the inverse relation.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .matroid import MatroidOracle
from .relation import BinaryRelation, inverse, is_equivalence, is_reflexive
from .report import Collector, Report, labels_of, result
from .sets import SetFamily, Subset, bit_tuple, iter_bits, require_exhaustive

SUCCESSOR = "successor"
PREDECESSOR = "predecessor"
KINDS = (SUCCESSOR, PREDECESSOR)


class RelationMatroid(MatroidOracle):
    """The successor (default) or predecessor relation matroid of a relation.

    ``keys[x]`` is the neighborhood mask of ``x``; ``block_of[x]`` is the mask
    of all elements sharing that neighborhood.
    """

    def __init__(self, relation: BinaryRelation, kind: str = SUCCESSOR):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        super().__init__(relation.universe, verified=True)
        self.relation = relation
        self.kind = kind
        base = relation if kind == SUCCESSOR else inverse(relation)
        self.keys: tuple[int, ...] = base.rows
        groups: dict[int, int] = {}
        for x, key in enumerate(self.keys):
            groups[key] = groups.get(key, 0) | (1 << x)
        self.block_of: tuple[int, ...] = tuple(groups[key] for key in self.keys)
        self.blocks = SetFamily.from_masks(self.universe, groups.values())

    @property
    def neighborhood_key(self) -> dict[int, Subset]:
        return {x: Subset(self.universe, k) for x, k in enumerate(self.keys)}

    def independent_mask(self, mask: int) -> bool:
        # literal definition: no two distinct members share a neighborhood
        keys = self.keys
        elems = bit_tuple(mask)
        for i, x in enumerate(elems):
            for y in elems[i + 1:]:
                if keys[x] == keys[y]:
                    return False
        return True

    def independent_by_blocks(self, mask: int) -> bool:
        return all((mask & b).bit_count() <= 1 for b in self.blocks.masks)

    def __repr__(self) -> str:
        return f"RelationMatroid({self.relation}, kind={self.kind!r})"


def build_relation_matroid(r: BinaryRelation, kind: str = SUCCESSOR) -> RelationMatroid:
    return RelationMatroid(r, kind)


def _check(rm: RelationMatroid, x: Subset) -> None:
    if not isinstance(x, Subset) or x.universe != rm.universe:
        raise DomainError("subset is not over the relation's universe")


def rm_independent_sets(rm: RelationMatroid, limit: int | None = None) -> SetFamily:
    """Subsets meeting every block at most once."""
    require_exhaustive(rm.n, limit, "independent-set listing")
    return SetFamily.from_masks(rm.universe, (s for s in range(1 << rm.n) if rm.independent_by_blocks(s)))


def rm_dependent_sets(rm: RelationMatroid, limit: int | None = None) -> SetFamily:
    """Subsets holding two distinct elements with equal neighborhoods."""
    require_exhaustive(rm.n, limit, "dependent-set listing")
    out = []
    for s in range(1 << rm.n):
        if any(s & ~(1 << x) & rm.block_of[x] for x in iter_bits(s)):
            out.append(s)
    return SetFamily.from_masks(rm.universe, out)


def rm_circuits(rm: RelationMatroid) -> SetFamily:
    """All pairs ``{x, y}``, ``x != y``, with equal neighborhoods."""
    keys = rm.keys
    pairs = [
        (1 << x) | (1 << y)
        for x in range(rm.n)
        for y in range(x + 1, rm.n)
        if keys[x] == keys[y]
    ]
    return SetFamily.from_masks(rm.universe, pairs)


def rm_rank(rm: RelationMatroid, x: Subset) -> int:
    """Number of distinct neighborhoods among the elements of ``x``."""
    _check(rm, x)
    return len({rm.keys[e] for e in x})


def rm_closure(rm: RelationMatroid, x: Subset) -> Subset:
    """Union of the blocks meeting ``x``."""
    _check(rm, x)
    out = 0
    for e in x:
        out |= rm.block_of[e]
    return Subset(rm.universe, out)


def rm_is_closed(rm: RelationMatroid, x: Subset) -> bool:
    """True when no element of ``x`` shares a neighborhood with one outside it."""
    _check(rm, x)
    keys = rm.keys
    inside = {keys[e] for e in x}
    return not any(keys[u] in inside for u in x.complement())


def same_matroid(r1: BinaryRelation, r2: BinaryRelation) -> bool:
    """Whether two relations induce the same successor relation matroid."""
    if r1.universe != r2.universe:
        raise DomainError("relations are over different universes")
    return RelationMatroid(r1).blocks == RelationMatroid(r2).blocks


@dataclass(frozen=True)
class ClosureUpperComparison:
    """How the matroid closure of ``M(R)`` relates to the upper approximation of ``R``.

    ``contained`` / ``equal`` hold when ``cl(X) <= H(X)`` / ``cl(X) == H(X)``
    for every subset. ``checks`` only asserts implications in the proven
    direction: reflexive implies containment, and equality everywhere holds
    exactly for equivalence relations.
    """

    relation: BinaryRelation
    reflexive: bool
    equivalence: bool
    contained: bool
    equal: bool
    not_contained_at: tuple[list[str], ...]
    not_equal_at: tuple[list[str], ...]
    checks: Report


def compare_closure_and_upper(r: BinaryRelation, limit: int | None = None) -> ClosureUpperComparison:
    n = r.n
    require_exhaustive(n, limit)
    u = r.universe
    rm = RelationMatroid(r)
    up = kernels.upper_table(r.rows, n)
    not_contained = Collector("not-contained")
    not_equal = Collector("not-equal")
    for s in range(1 << n):
        cl = rm_closure(rm, Subset(u, s)).mask
        if cl & ~up[s]:
            not_contained.fail({"X": labels_of(u, s)})
        if cl != up[s]:
            not_equal.fail({"X": labels_of(u, s)})
    refl = is_reflexive(r)
    equiv = is_equivalence(r)
    contained = not_contained.count == 0
    equal = not_equal.count == 0

    containment = result(
        "reflexive-implies-containment",
        not_contained.count if refl else 0,
        not_contained.witnesses if refl else (),
    )
    iff = Collector("equality-iff-equivalence")
    if equal != equiv:
        iff.fail({"equal": equal, "equivalence": equiv})
    return ClosureUpperComparison(
        relation=r,
        reflexive=refl,
        equivalence=equiv,
        contained=contained,
        equal=equal,
        not_contained_at=tuple(w["X"] for w in not_contained.witnesses),
        not_equal_at=tuple(w["X"] for w in not_equal.witnesses),
        checks=Report((containment, iff.result())),
    )
