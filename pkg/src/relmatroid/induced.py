"""The relation a matroid induces through its circuits.

``x R(M) y`` holds when ``x == y`` or ``{x, y}`` is a circuit. A loop ``y``
(``{y}`` is a circuit) cannot lie in any two-element circuit, so it is related
to itself only; loops show up separately in the singleton-closure
decomposition instead.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InvariantViolation
from .matroid import MatroidOracle, circuits, closure, closure_table, loops
from .relation import BinaryRelation, failed_properties, is_equivalence, is_reflexive
from .relation_matroid import build_relation_matroid, rm_circuits
from .report import Collector, Report, labels_of
from .sets import EXHAUSTIVE_LIMIT, SetFamily, Subset, require_exhaustive


@dataclass(frozen=True)
class InducedRelation:
    source: MatroidOracle
    relation: BinaryRelation

    def __post_init__(self):
        missing = failed_properties(self.relation)
        if missing:
            raise InvariantViolation(
                "relation induced by a matroid is not an equivalence (not " + ", ".join(missing)
                + "); the circuit computation is wrong"
            )


def induce_relation(m: MatroidOracle, circuit_family: SetFamily | None = None,
                    limit: int | None = None) -> InducedRelation:
    cs = circuit_family if circuit_family is not None else circuits(m, limit)
    rows = [1 << x for x in range(m.n)]
    for c in cs.masks:
        if c.bit_count() == 2:
            for x in range(m.n):
                if c >> x & 1:
                    rows[x] |= c
    return InducedRelation(m, BinaryRelation(m.universe, rows))


@dataclass(frozen=True)
class SingletonComparison:
    element: int
    upper: Subset
    closure: Subset
    loops: Subset


def compare_upper_and_closure_singleton(m: MatroidOracle, x: int,
                                        circuit_family: SetFamily | None = None) -> SingletonComparison:
    """Upper approximation of ``{x}`` under ``R(M)`` against ``cl_M({x})``.

    Raises InvariantViolation unless ``H({x}) <= cl({x})`` and
    ``cl({x}) == H({x}) | loops``.
    """
    u = m.universe
    u.check_element(x)
    cs = circuit_family if circuit_family is not None else circuits(m)
    rel = induce_relation(m, cs).relation
    single = u.subset_of([x])
    upper = Subset(u, kernels.upper_approx(rel.rows, single.mask))
    cl = closure(m, single)
    lp = loops(m, cs)
    if not upper <= cl:
        raise InvariantViolation(f"H({{{u.labels[x]}}}) = {upper} is not inside cl = {cl}")
    if cl != upper | lp:
        raise InvariantViolation(f"cl({{{u.labels[x]}}}) = {cl} differs from H | loops = {upper | lp}")
    return SingletonComparison(x, upper, cl, lp)


def check_upper_subset_closure(m: MatroidOracle, limit: int | None = None) -> Report:
    """Check ``H_{R(M)}(X) <= cl_M(X)`` for every subset X."""
    n = m.n
    require_exhaustive(n, limit)
    rel = induce_relation(m, limit=limit).relation
    up = kernels.upper_table(rel.rows, n)
    cl = closure_table(m, limit)
    col = Collector("H-subset-cl")
    for s in range(1 << n):
        if up[s] & ~cl[s]:
            col.fail({"X": labels_of(m.universe, s), "H": labels_of(m.universe, up[s]),
                      "cl": labels_of(m.universe, cl[s])})
    return Report((col.result(),))


def same_neighborhood_relation(r: BinaryRelation) -> BinaryRelation:
    """``{(x, y) : RS(x) == RS(y)}``, read straight off the successor rows."""
    n = r.n
    rows = [0] * n
    for x in range(n):
        for y in range(n):
            if r.rows[x] == r.rows[y]:
                rows[x] |= 1 << y
    return BinaryRelation(r.universe, rows)


@dataclass(frozen=True)
class RoundTrip:
    induced: BinaryRelation
    same_neighborhood: BinaryRelation


def round_trip_relation(r: BinaryRelation) -> RoundTrip:
    """``R(M(R))`` computed through the generic circuits, and its closed form."""
    rm = build_relation_matroid(r)
    # past the exhaustive bound the generic circuit scan is infeasible
    cs = rm_circuits(rm) if r.n > EXHAUSTIVE_LIMIT else None
    induced = induce_relation(rm, cs).relation
    expected = same_neighborhood_relation(r)
    if induced != expected:
        raise InvariantViolation(f"R(M(R)) = {induced} differs from the same-neighborhood relation {expected}")
    return RoundTrip(induced, expected)


def _pair(r: BinaryRelation, x: int, y: int) -> list[str]:
    return [r.universe.labels[x], r.universe.labels[y]]


@dataclass(frozen=True)
class RoundTripReport:
    relation: BinaryRelation
    induced: BinaryRelation
    equal: bool
    difference: tuple[list[str], ...]
    checks: Report

    @property
    def passed(self) -> bool:
        return self.checks.passed


def check_round_trip_laws(r: BinaryRelation) -> RoundTripReport:
    """Check that reflexive ``R`` gives ``R(M(R)) <= R`` and that ``R(M(R)) == R`` iff ``R`` is an equivalence.

    ``difference`` lists the pairs where ``R`` and ``R(M(R))`` disagree, in
    flattened-index order.
    """
    induced = round_trip_relation(r).induced
    n = r.n
    diff = [
        _pair(r, x, y)
        for x in range(n)
        for y in range(n)
        if (r.rows[x] ^ induced.rows[x]) >> y & 1
    ]
    equal = not diff

    subset = Collector("reflexive-implies-subset")
    if is_reflexive(r):
        for x in range(n):
            for y in range(n):
                if induced.rows[x] >> y & 1 and not r.rows[x] >> y & 1:
                    subset.fail({"pair": _pair(r, x, y)})
    fixed = Collector("fixed-point-iff-equivalence")
    equiv = is_equivalence(r)
    if equal != equiv:
        fixed.fail({"equal": equal, "equivalence": equiv, "pair": diff[0] if diff else None})
    return RoundTripReport(r, induced, equal, tuple(diff), Report((subset.result(), fixed.result())))
