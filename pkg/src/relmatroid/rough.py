"""Lower and upper approximations built on successor neighborhoods.

For an equivalence relation the successor neighborhood of ``u`` is its class
``[u]``, so the same two operators are the classical Pawlak approximations;
:func:`check_pawlak_properties` exercises them in that role.

The classical property list is checked in its intended reading: (5H) is
idempotence of the upper operator and (6L)/(6H) are monotonicity,
``X <= Y`` implies ``op(X) <= op(Y)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .relation import BinaryRelation, is_reflexive, require_equivalence
from .report import Collector, Report, labels_of, result
from .sets import Subset, require_exhaustive

PAWLAK_PROPERTIES = (
    "1L", "1H", "2L", "2H", "3L", "3H", "4L", "4H",
    "5L", "5H", "6L", "6H", "7L", "7H", "8L", "8H",
)
H_PROPERTIES = ("H1", "H2", "H3")


def _check(r: BinaryRelation, x: Subset) -> None:
    if not isinstance(x, Subset) or x.universe != r.universe:
        raise DomainError("subset is not over the relation's universe")


def lower_approx(r: BinaryRelation, x: Subset) -> Subset:
    """``{u : RS(u) <= X}``."""
    _check(r, x)
    return Subset(r.universe, kernels.lower_approx(r.rows, x.mask))


def upper_approx(r: BinaryRelation, x: Subset) -> Subset:
    """``{u : RS(u) & X != {}}``."""
    _check(r, x)
    return Subset(r.universe, kernels.upper_approx(r.rows, x.mask))


@dataclass(frozen=True)
class ApproximationPair:
    lower: Subset
    upper: Subset
    relation: BinaryRelation
    target: Subset

    @property
    def boundary(self) -> Subset:
        return self.upper - self.lower


def approximate(r: BinaryRelation, x: Subset) -> ApproximationPair:
    pair = ApproximationPair(lower_approx(r, x), upper_approx(r, x), r, x)
    if is_reflexive(r):
        assert pair.lower <= x <= pair.upper
    return pair


def _unary(name, n, universe, bad):
    col = Collector(name)
    for x in range(1 << n):
        if bad(x):
            col.fail({"X": labels_of(universe, x)})
    return col.result()


def _binary(name, table, n, kind, universe, letters=("X", "Y")):
    count, ws = kernels.binary_law_failures(table, n, kind, Collector(name).cap)
    return result(
        name,
        count,
        ({letters[0]: labels_of(universe, a), letters[1]: labels_of(universe, b)} for a, b in ws),
    )


def check_h_properties(r: BinaryRelation, limit: int | None = None) -> Report:
    """Exhaustively check H(∅)=∅, additivity and monotonicity of the upper operator."""
    n = r.n
    require_exhaustive(n, limit)
    u = r.universe
    h = kernels.upper_table(r.rows, n)
    return Report((
        result("H1", int(h[0] != 0), [{"X": []}] if h[0] else []),
        _binary("H2", h, n, kernels.UNION, u),
        _binary("H3", h, n, kernels.MONOTONE, u),
    ))


def check_pawlak_properties(r: BinaryRelation, limit: int | None = None) -> Report:
    """Exhaustively check the sixteen classical properties (1L)-(8H).

    Raises PreconditionError unless ``r`` is an equivalence relation.
    """
    require_equivalence(r)
    n = r.n
    require_exhaustive(n, limit)
    u = r.universe
    full = u.full_mask
    low = kernels.lower_table(r.rows, n)
    up = kernels.upper_table(r.rows, n)
    out = [
        result("1L", int(low[full] != full), [{"X": labels_of(u, full)}] if low[full] != full else []),
        result("1H", int(up[full] != full), [{"X": labels_of(u, full)}] if up[full] != full else []),
        result("2L", int(low[0] != 0), [{"X": []}] if low[0] else []),
        result("2H", int(up[0] != 0), [{"X": []}] if up[0] else []),
        _unary("3L", n, u, lambda x: low[x] & ~x),
        _unary("3H", n, u, lambda x: x & ~up[x]),
        _binary("4L", low, n, kernels.INTERSECTION, u),
        _binary("4H", up, n, kernels.UNION, u),
        _unary("5L", n, u, lambda x: low[low[x]] != low[x]),
        _unary("5H", n, u, lambda x: up[up[x]] != up[x]),
        _binary("6L", low, n, kernels.MONOTONE, u),
        _binary("6H", up, n, kernels.MONOTONE, u),
        _unary("7L", n, u, lambda x: low[full & ~x] != full & ~up[x]),
        _unary("7H", n, u, lambda x: up[full & ~x] != full & ~low[x]),
        _unary("8L", n, u, lambda x: low[full & ~low[x]] != full & ~low[x]),
        _unary("8H", n, u, lambda x: up[full & ~up[x]] != full & ~up[x]),
    ]
    return Report(tuple(out))
