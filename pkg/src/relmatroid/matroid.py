"""Generic matroid machinery over an independence oracle.

Everything here only asks the oracle "is this subset independent?", which
makes these functions the reference the closed forms in
:mod:`relmatroid.relation_matroid` are tested against.
"""
from __future__ import annotations

from typing import Callable, Iterable

from . import kernels
from .errors import DomainError, PreconditionError
from .report import Collector, Report, labels_of, result
from .sets import SetFamily, Subset, Universe, bit_tuple, iter_bits, require_exhaustive


class MatroidOracle:
    """A ground set with an independence predicate.

    ``verified`` records that the predicate is known to satisfy (I1)-(I3);
    :func:`rank` only takes the greedy shortcut for verified oracles.
    """

    def __init__(self, universe: Universe, is_independent: Callable[[Subset], bool] | None = None,
                 verified: bool = False):
        self.universe = universe
        self._predicate = is_independent
        self.verified = verified

    def independent_mask(self, mask: int) -> bool:
        return bool(self._predicate(Subset(self.universe, mask)))

    def is_independent(self, x: Subset) -> bool:
        _check(self, x)
        return self.independent_mask(x.mask)

    @property
    def n(self) -> int:
        return self.universe.n


class ExplicitMatroid(MatroidOracle):
    """A matroid given by its full list of independent sets.

    The constructor checks (I1)-(I3) and raises PreconditionError naming the
    first failing axiom and its witness.
    """

    def __init__(self, universe: Universe, independents: SetFamily, check: bool = True):
        if independents.universe != universe:
            raise DomainError("independent sets are over a different universe")
        if check:
            report = check_matroid_axioms(independents)
            if not report.passed:
                bad = report.failures()[0]
                raise PreconditionError(f"not a matroid: axiom {bad.property} fails, witness {bad.witness}")
        super().__init__(universe, verified=True)
        self.independents = independents
        self._members = frozenset(independents.masks)

    @classmethod
    def from_family_mask(cls, universe: Universe, fam: int) -> "ExplicitMatroid":
        """Build from a bit-per-subset family encoding, skipping the axiom check.

        Only for families already filtered by ``kernels.family_is_matroid``.
        """
        members = SetFamily.from_masks(universe, (s for s in range(1 << universe.n) if fam >> s & 1))
        return cls(universe, members, check=False)

    @property
    def family_mask(self) -> int:
        out = 0
        for s in self._members:
            out |= 1 << s
        return out

    def independent_mask(self, mask: int) -> bool:
        return mask in self._members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExplicitMatroid) and self.independents == other.independents

    def __hash__(self) -> int:
        return hash(self.independents)

    def __repr__(self) -> str:
        return f"ExplicitMatroid({self.independents})"


def matroid_from_family(universe: Universe, independents: Iterable[Iterable[str]]) -> ExplicitMatroid:
    """Explicit matroid from label lists; the empty set is always added."""
    fam = SetFamily.from_labels(universe, [*independents, []])
    return ExplicitMatroid(universe, fam)


def _check(m: MatroidOracle, x: Subset) -> None:
    if not isinstance(x, Subset) or x.universe != m.universe:
        raise DomainError("subset is not over the matroid's universe")


def min_family(a: SetFamily) -> SetFamily:
    """Inclusion-minimal members of ``a``."""
    minimal: list[int] = []
    for s in sorted(a.masks, key=lambda m: (m.bit_count(), m)):
        if not any(not t & ~s for t in minimal):
            minimal.append(s)
    return SetFamily.from_masks(a.universe, minimal)


def opp_family(a: SetFamily, limit: int | None = None) -> SetFamily:
    """All subsets of the universe that are not members of ``a``."""
    n = a.universe.n
    require_exhaustive(n, limit, "opp_family")
    members = set(a.masks)
    return SetFamily.from_masks(a.universe, (s for s in range(1 << n) if s not in members))


def check_matroid_axioms(independents: SetFamily, limit: int | None = None) -> Report:
    """Check (I1) emptiness, (I2) heredity and (I3) augmentation.

    (I2) is scanned over one-element deletions, which implies it for all
    subsets. (I3) is scanned over every ordered pair of members.
    """
    u = independents.universe
    require_exhaustive(u.n, limit)
    members = independents.masks
    present = set(members)
    i1 = Collector("I1")
    if 0 not in present:
        i1.fail({"missing": []})
    i2 = Collector("I2")
    for s in members:
        for e in iter_bits(s):
            if s ^ (1 << e) not in present:
                i2.fail({"I": labels_of(u, s), "subset": labels_of(u, s ^ (1 << e))})
    i3 = Collector("I3")
    for a in members:
        ca = a.bit_count()
        for b in members:
            if b.bit_count() <= ca:
                continue
            if not any(a | (1 << e) in present for e in iter_bits(b & ~a)):
                i3.fail({"I1": labels_of(u, a), "I2": labels_of(u, b)})
    return Report((i1.result(), i2.result(), i3.result()))


def dependent_sets(m: MatroidOracle, limit: int | None = None) -> SetFamily:
    require_exhaustive(m.n, limit, "dependent_sets")
    return SetFamily.from_masks(m.universe, (s for s in range(1 << m.n) if not m.independent_mask(s)))


def circuits(m: MatroidOracle, limit: int | None = None) -> SetFamily:
    """Minimal dependent sets."""
    return min_family(dependent_sets(m, limit))


def _greedy_rank(m: MatroidOracle, mask: int) -> int:
    basis = 0
    for e in bit_tuple(mask):
        if m.independent_mask(basis | (1 << e)):
            basis |= 1 << e
    return basis.bit_count()


def _exhaustive_rank(m: MatroidOracle, mask: int) -> int:
    best = 0
    s = mask
    while True:
        c = s.bit_count()
        if c > best and m.independent_mask(s):
            best = c
        if s == 0:
            return best
        s = (s - 1) & mask


def rank_greedy(m: MatroidOracle, x: Subset) -> int:
    """Greedy rank in ascending element order; exact only for genuine matroids."""
    _check(m, x)
    return _greedy_rank(m, x.mask)


def rank_exhaustive(m: MatroidOracle, x: Subset) -> int:
    """``max{|I| : I <= X, I independent}`` by scanning every subset of X."""
    _check(m, x)
    return _exhaustive_rank(m, x.mask)


def rank(m: MatroidOracle, x: Subset) -> int:
    _check(m, x)
    return _greedy_rank(m, x.mask) if m.verified else _exhaustive_rank(m, x.mask)


def _rank_mask(m: MatroidOracle, mask: int) -> int:
    return _greedy_rank(m, mask) if m.verified else _exhaustive_rank(m, mask)


def _closure_mask(m: MatroidOracle, mask: int) -> int:
    r = _rank_mask(m, mask)
    out = mask
    for u in range(m.n):
        if not mask >> u & 1 and _rank_mask(m, mask | (1 << u)) == r:
            out |= 1 << u
    return out


def closure(m: MatroidOracle, x: Subset) -> Subset:
    """``{u : r(X + u) = r(X)}``."""
    _check(m, x)
    return Subset(m.universe, _closure_mask(m, x.mask))


def is_closed(m: MatroidOracle, x: Subset) -> bool:
    return closure(m, x) == x


def rank_table(m: MatroidOracle, limit: int | None = None) -> list[int]:
    """Rank of every subset, indexed by mask."""
    require_exhaustive(m.n, limit)
    if isinstance(m, ExplicitMatroid) and m.n <= 6:
        return kernels.family_rank_table(m.family_mask, m.n)
    return [_rank_mask(m, s) for s in range(1 << m.n)]


def closure_table(m: MatroidOracle, limit: int | None = None) -> list[int]:
    """Closure of every subset, indexed by mask."""
    return kernels.closure_table(rank_table(m, limit), m.n)


def check_closure_operator(universe: Universe, table: list[int]) -> Report:
    """Check (CL1)-(CL4) for an arbitrary operator given as a full table."""
    n = universe.n
    if len(table) != 1 << n:
        raise DomainError(f"closure table needs {1 << n} entries, got {len(table)}")
    (c1, w1), (c2, w2), (c3, w3), (c4, w4) = kernels.closure_axiom_failures(table, n, Collector("").cap)
    lab = lambda s: labels_of(universe, s)  # noqa: E731
    return Report((
        result("CL1", c1, ({"X": lab(x)} for (x,) in w1)),
        result("CL2", c2, ({"X": lab(x), "Y": lab(y)} for x, y in w2)),
        result("CL3", c3, ({"X": lab(x)} for (x,) in w3)),
        result("CL4", c4, ({"X": lab(x), "x": universe.labels[a], "y": universe.labels[b]} for x, a, b in w4)),
    ))


def check_closure_axioms(m: MatroidOracle, limit: int | None = None) -> Report:
    """Exhaustive (CL1)-(CL4) check of the rank-based closure of ``m``."""
    return check_closure_operator(m.universe, closure_table(m, limit))


def closure_via_circuits(m: MatroidOracle, x: Subset, circuit_family: SetFamily | None = None,
                         limit: int | None = None) -> Subset:
    """``X + {u : some circuit C has u in C <= X + u}``."""
    _check(m, x)
    cs = circuit_family.masks if circuit_family is not None else circuits(m, limit).masks
    mask = x.mask
    out = mask
    for u in range(m.n):
        bit = 1 << u
        grown = mask | bit
        if any(c & bit and not c & ~grown for c in cs):
            out |= bit
    return Subset(m.universe, out)


def loops(m: MatroidOracle, circuit_family: SetFamily | None = None) -> Subset:
    """Elements forming one-element circuits."""
    cs = circuit_family if circuit_family is not None else circuits(m)
    out = 0
    for c in cs.masks:
        if c.bit_count() == 1:
            out |= c
    return Subset(m.universe, out)
