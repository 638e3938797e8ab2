"""Exhaustive law verifier.

Every relation on a universe of size ``1..n`` (and every matroid on a
universe of size ``1..n``) is pushed through a catalog of laws. Each law
yields one :class:`TheoremCase`. Law ids are ``<kind><section>.<name>`` where
the kind letter is D(efinition), L(emma), P(roposition), T(heorem) or
C(orollary); the ids are stable names for this package and the README maps
them to the statements they check.

Subjects are enumerated in ascending order (relations by flattened adjacency
number, matroids by family bit mask), and witnesses are kept in that order,
so reports are reproducible byte for byte, also when the work is sharded
across processes.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from . import induced as ind
from . import kernels
from . import matroid as mat
from . import relation as rel
from . import relation_matroid as rmod
from . import rough
from .errors import CapacityError, PreconditionError, RelMatroidError
from .sets import SetFamily, Subset, Universe, iter_bits

RELATION_LIMIT = 4
MATROID_LIMIT = 4
WITNESS_CAP = 5
SCOPES = ("relations", "matroids")

SKIP = object()


@dataclass(frozen=True)
class TheoremCase:
    id: str
    scope: str
    n: int
    status: str
    witnesses: tuple = ()
    checked: int = 0
    failures: int = 0

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "pass") != (not self.witnesses):
            raise ValueError("a passing case has no witnesses and a failing one has at least one")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "scope": self.scope,
            "n": self.n,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
            "witnesses": list(self.witnesses),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True) + "\n"


def _universe(n: int) -> Universe:
    return Universe.of_size(n, start=1)


def enumerate_relations(n: int) -> Iterator[rel.BinaryRelation]:
    """All ``2**(n*n)`` relations on ``{1..n}`` by ascending flattened adjacency number."""
    _bounds(n, RELATION_LIMIT, "relation enumeration")
    u = _universe(n)
    for code in range(1 << (n * n)):
        yield rel.BinaryRelation.from_code(u, code)


def enumerate_matroids(n: int) -> Iterator[mat.ExplicitMatroid]:
    """Every family on ``{1..n}`` satisfying (I1)-(I3), found by brute-force filtering."""
    _bounds(n, MATROID_LIMIT, "matroid enumeration")
    u = _universe(n)
    for fam in kernels.matroid_families(n):
        yield mat.ExplicitMatroid.from_family_mask(u, fam)


def _bounds(n: int, limit: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"{what} needs a universe size n >= 1, got {n!r}")
    if n > limit:
        raise CapacityError(f"{what} is capped at n = {limit}, got n = {n}")


def _family(m: mat.MatroidOracle) -> frozenset[int]:
    return frozenset(s for s in range(1 << m.n) if m.independent_mask(s))


def _labels(u: Universe, mask: int) -> list[str]:
    return sorted(u.labels[i] for i in iter_bits(mask))


class RelationSubject:
    """Lazily computed views of one relation shared by the relation laws."""

    def __init__(self, r: rel.BinaryRelation):
        self.r = r
        self.u = r.universe
        self.n = r.n
        self.size = 1 << r.n

    def describe(self) -> dict:
        return {"relation": [list(p) for p in self.r.label_pairs()]}

    def subset(self, mask: int) -> Subset:
        return Subset(self.u, mask)

    @cached_property
    def inverse(self):
        return rel.inverse(self.r)

    @cached_property
    def reflexive(self):
        return rel.is_reflexive(self.r)

    @cached_property
    def transitive(self):
        return rel.is_transitive(self.r)

    @cached_property
    def equivalence(self):
        return rel.is_equivalence(self.r)

    @cached_property
    def upper(self):
        return kernels.upper_table(self.r.rows, self.n)

    @cached_property
    def rm(self):
        return rmod.build_relation_matroid(self.r)

    @cached_property
    def rm_pred(self):
        return rmod.build_relation_matroid(self.r, rmod.PREDECESSOR)

    @cached_property
    def generic_family(self):
        return _family(self.rm)

    @cached_property
    def generic_circuits(self):
        return mat.circuits(self.rm)

    @cached_property
    def round_trip(self):
        return ind.induce_relation(self.rm, self.generic_circuits).relation

    @cached_property
    def comparison(self):
        return rmod.compare_closure_and_upper(self.r)


# -- relation laws -------------------------------------------------------------

def law_successor_predecessor(s: RelationSubject):
    for x in range(s.n):
        if rel.successor_neighborhood(s.r, x) != rel.predecessor_neighborhood(s.inverse, x):
            return {"x": s.u.labels[x]}
        for y in range(s.n):
            if (y in rel.successor_neighborhood(s.r, x)) != (x in rel.predecessor_neighborhood(s.r, y)):
                return {"x": s.u.labels[x], "y": s.u.labels[y]}
    return None


def law_h_properties(s: RelationSubject):
    report = rough.check_h_properties(s.r)
    bad = report.failures()
    return {"property": bad[0].property, "witness": bad[0].witness} if bad else None


def law_pawlak(s: RelationSubject):
    if not s.equivalence:
        return SKIP
    report = rough.check_pawlak_properties(s.r)
    bad = report.failures()
    return {"property": bad[0].property, "witness": bad[0].witness} if bad else None


def law_pawlak_coincidence(s: RelationSubject):
    # generalized operators agree with the class-based definitions
    if not s.equivalence:
        return SKIP
    classes = rel.equivalence_classes(s.r).masks
    for x in range(s.size):
        upper = 0
        lower = 0
        for c in classes:
            if c & x:
                upper |= c
            if not c & ~x:
                lower |= c
        if rough.upper_approx(s.r, s.subset(x)).mask != upper or rough.lower_approx(s.r, s.subset(x)).mask != lower:
            return {"X": _labels(s.u, x)}
    return None


def law_reflexive_iff_extensive(s: RelationSubject):
    extensive = all(not x & ~s.upper[x] for x in range(s.size))
    return None if extensive == s.reflexive else {"reflexive": s.reflexive, "extensive": extensive}


def law_transitive_iff_contracting(s: RelationSubject):
    up = s.upper
    contracting = all(not up[up[x]] & ~up[x] for x in range(s.size))
    return None if contracting == s.transitive else {"transitive": s.transitive, "contracting": contracting}


def _axioms(m: mat.MatroidOracle):
    fam = SetFamily.from_masks(m.universe, _family(m))
    bad = mat.check_matroid_axioms(fam).failures()
    return {"axiom": bad[0].property, "witness": bad[0].witness} if bad else None


def law_axioms_successor(s: RelationSubject):
    return _axioms(s.rm)


def law_axioms_predecessor(s: RelationSubject):
    return _axioms(s.rm_pred)


def law_successor_eq_predecessor_of_inverse(s: RelationSubject):
    other = rmod.build_relation_matroid(s.inverse, rmod.PREDECESSOR)
    return None if _family(other) == s.generic_family else {"inverse": [list(p) for p in s.inverse.label_pairs()]}


def law_dependent_closed_form(s: RelationSubject):
    closed = rmod.rm_dependent_sets(s.rm)
    generic = mat.dependent_sets(s.rm)
    if closed != generic:
        return {"closed_form": closed.to_labels(), "generic": generic.to_labels()}
    return None


def law_circuits_closed_form(s: RelationSubject):
    closed = rmod.rm_circuits(s.rm)
    if closed != s.generic_circuits:
        return {"closed_form": closed.to_labels(), "generic": s.generic_circuits.to_labels()}
    return None


def law_rank_closed_form(s: RelationSubject):
    for x in range(s.size):
        sub = s.subset(x)
        closed = rmod.rm_rank(s.rm, sub)
        if closed != mat.rank(s.rm, sub) or closed != mat.rank_exhaustive(s.rm, sub):
            return {"X": _labels(s.u, x), "closed_form": closed, "generic": mat.rank_exhaustive(s.rm, sub)}
    return None


def law_closure_closed_form(s: RelationSubject):
    for x in range(s.size):
        sub = s.subset(x)
        closed = rmod.rm_closure(s.rm, sub)
        generic = mat.closure(s.rm, sub)
        if closed != generic:
            return {"X": _labels(s.u, x), "closed_form": closed.sorted_labels(), "generic": generic.sorted_labels()}
    return None


def law_closed_set_criterion(s: RelationSubject):
    for x in range(s.size):
        sub = s.subset(x)
        if rmod.rm_is_closed(s.rm, sub) != mat.is_closed(s.rm, sub):
            return {"X": _labels(s.u, x)}
    return None


def law_closure_axioms(s: RelationSubject):
    bad = mat.check_closure_axioms(s.rm).failures()
    return {"axiom": bad[0].property, "witness": bad[0].witness} if bad else None


def law_same_matroid_criterion(s: RelationSubject):
    # M(R) fixes the blocks (its parallel classes) and the blocks fix M(R)
    fam = s.generic_family
    from_blocks = frozenset(x for x in range(s.size) if all((x & b).bit_count() <= 1 for b in s.rm.blocks.masks))
    if fam != from_blocks:
        return {"blocks": s.rm.blocks.to_labels()}
    parallel = []
    for x in range(s.n):
        cls = 1 << x
        for y in range(s.n):
            if y != x and ((1 << x) | (1 << y)) not in fam:
                cls |= 1 << y
        parallel.append(cls)
    if SetFamily.from_masks(s.u, parallel) != s.rm.blocks:
        return {"blocks": s.rm.blocks.to_labels(), "parallel_classes": SetFamily.from_masks(s.u, parallel).to_labels()}
    return None


def law_reflexive_cl_subset_h(s: RelationSubject):
    if not s.reflexive:
        return SKIP
    chk = s.comparison.checks["reflexive-implies-containment"]
    return None if chk.passed else chk.witness


def law_cl_eq_h_iff_equivalence(s: RelationSubject):
    chk = s.comparison.checks["equality-iff-equivalence"]
    return None if chk.passed else chk.witness


def law_round_trip(s: RelationSubject):
    induced = s.round_trip
    expected = ind.same_neighborhood_relation(s.r)
    if induced != expected:
        return {"induced": [list(p) for p in induced.label_pairs()]}
    if not rel.is_equivalence(induced):
        return {"not_equivalence": rel.failed_properties(induced)}
    if rel.equivalence_classes(induced) != s.rm.blocks:
        return {"classes": rel.equivalence_classes(induced).to_labels(), "blocks": s.rm.blocks.to_labels()}
    return None


def law_reflexive_round_trip_subset(s: RelationSubject):
    if not s.reflexive:
        return SKIP
    if not s.round_trip.issubset(s.r):
        extra = [[s.u.labels[x], s.u.labels[y]] for x, y in s.round_trip.pairs() if not s.r.contains(x, y)]
        return {"pair": extra[0]}
    return None


def law_fixed_point_iff_equivalence(s: RelationSubject):
    equal = s.round_trip == s.r
    return None if equal == s.equivalence else {"equal": equal, "equivalence": s.equivalence}


def law_round_trip_idempotent(s: RelationSubject):
    once = s.round_trip
    twice = ind.induce_relation(rmod.build_relation_matroid(once)).relation
    return None if twice == once else {"twice": [list(p) for p in twice.label_pairs()]}


# -- matroid laws --------------------------------------------------------------

class MatroidSubject:
    def __init__(self, m: mat.ExplicitMatroid):
        self.m = m
        self.u = m.universe
        self.n = m.n
        self.size = 1 << m.n

    def describe(self) -> dict:
        return {"independents": self.m.independents.to_labels()}

    @cached_property
    def circuits(self):
        return mat.circuits(self.m)

    @cached_property
    def closure(self):
        return mat.closure_table(self.m)

    @cached_property
    def induced(self):
        return ind.induce_relation(self.m, self.circuits).relation

    @cached_property
    def loops(self):
        return mat.loops(self.m, self.circuits).mask


def law_enumeration_axioms(s: MatroidSubject):
    bad = mat.check_matroid_axioms(s.m.independents).failures()
    return {"axiom": bad[0].property, "witness": bad[0].witness} if bad else None


def law_greedy_rank(s: MatroidSubject):
    for x in range(s.size):
        sub = Subset(s.u, x)
        if mat.rank_greedy(s.m, sub) != mat.rank_exhaustive(s.m, sub):
            return {"X": _labels(s.u, x)}
    return None


def law_rank_determines_independence(s: MatroidSubject):
    for x in range(s.size):
        if (mat.rank(s.m, Subset(s.u, x)) == x.bit_count()) != s.m.independent_mask(x):
            return {"X": _labels(s.u, x)}
    return None


def law_matroid_closure_axioms(s: MatroidSubject):
    bad = mat.check_closure_operator(s.u, s.closure).failures()
    return {"axiom": bad[0].property, "witness": bad[0].witness} if bad else None


def law_induced_equivalence(s: MatroidSubject):
    missing = rel.failed_properties(s.induced)
    return {"not": missing} if missing else None


def law_singleton_h_subset_cl(s: MatroidSubject):
    for x in range(s.n):
        h = kernels.upper_approx(s.induced.rows, 1 << x)
        if h & ~s.closure[1 << x]:
            return {"x": s.u.labels[x]}
    return None


def law_singleton_decomposition(s: MatroidSubject):
    for x in range(s.n):
        h = kernels.upper_approx(s.induced.rows, 1 << x)
        if s.closure[1 << x] != h | s.loops:
            return {"x": s.u.labels[x], "cl": _labels(s.u, s.closure[1 << x]), "H": _labels(s.u, h),
                    "loops": _labels(s.u, s.loops)}
    return None


def law_h_subset_cl(s: MatroidSubject):
    up = kernels.upper_table(s.induced.rows, s.n)
    for x in range(s.size):
        if up[x] & ~s.closure[x]:
            return {"X": _labels(s.u, x)}
    return None


def law_closure_via_circuits(s: MatroidSubject):
    for x in range(s.size):
        sub = Subset(s.u, x)
        if mat.closure_via_circuits(s.m, sub, s.circuits) != mat.closure(s.m, sub):
            return {"X": _labels(s.u, x)}
    return None


@dataclass(frozen=True)
class Law:
    id: str
    scope: str
    check: Callable = field(repr=False)
    statement: str = ""


LAWS: tuple[Law, ...] = (
    Law("L3.successor-eq-predecessor-of-inverse", "relations", law_successor_predecessor,
        "RS_R(x) = RP_{R^-1}(x), and y in RS_R(x) iff x in RP_R(y)"),
    Law("P2.H-properties", "relations", law_h_properties,
        "H(empty) = empty, H(X|Y) = H(X)|H(Y), X<=Y => H(X)<=H(Y)"),
    Law("P2.pawlak", "relations", law_pawlak,
        "(1L)-(8H) hold for equivalence relations"),
    Law("D2.pawlak-coincidence", "relations", law_pawlak_coincidence,
        "for equivalence relations L_R/H_R equal the class-based approximations"),
    Law("L3.reflexive-iff-extensive", "relations", law_reflexive_iff_extensive,
        "R reflexive iff X <= H(X) for all X"),
    Law("L3.transitive-iff-contracting", "relations", law_transitive_iff_contracting,
        "R transitive iff H(H(X)) <= H(X) for all X"),
    Law("P3.I-axioms-successor", "relations", law_axioms_successor,
        "I_S(R) satisfies (I1)-(I3)"),
    Law("P3.I-axioms-predecessor", "relations", law_axioms_predecessor,
        "I_P(R) satisfies (I1)-(I3)"),
    Law("T3.MS-eq-MP-inverse", "relations", law_successor_eq_predecessor_of_inverse,
        "M_S(R) = M_P(R^-1)"),
    Law("P3.dependent-closed-form", "relations", law_dependent_closed_form,
        "D(M(R)) = sets with two distinct elements of equal RS"),
    Law("P3.circuits-closed-form", "relations", law_circuits_closed_form,
        "C(M(R)) = pairs {x, y}, x != y, RS(x) = RS(y)"),
    Law("P3.rank-closed-form", "relations", law_rank_closed_form,
        "r(X) = number of distinct RS(x), x in X"),
    Law("P3.closure-closed-form", "relations", law_closure_closed_form,
        "cl(X) = {u : RS(u) = RS(x) for some x in X}"),
    Law("P3.closed-set-criterion", "relations", law_closed_set_criterion,
        "cl(X) = X iff no x in X, u outside X share RS"),
    Law("P2.closure-axioms-relation-matroid", "relations", law_closure_axioms,
        "cl_{M(R)} satisfies (CL1)-(CL4)"),
    Law("T3.same-matroid-criterion", "relations", law_same_matroid_criterion,
        "M(R1) = M(R2) iff RS-equality agrees on all pairs"),
    Law("P3.reflexive-cl-subset-H", "relations", law_reflexive_cl_subset_h,
        "R reflexive => cl_{M(R)}(X) <= H_R(X)"),
    Law("T3.cl-eq-H-iff-equivalence", "relations", law_cl_eq_h_iff_equivalence,
        "cl_{M(R)} = H_R iff R is an equivalence relation"),
    Law("T4.round-trip", "relations", law_round_trip,
        "R(M(R)) = {(x, y) : RS(x) = RS(y)}, an equivalence whose classes are the blocks"),
    Law("P4.reflexive-round-trip-subset", "relations", law_reflexive_round_trip_subset,
        "R reflexive => R(M(R)) <= R"),
    Law("P4.fixed-point-iff-equivalence", "relations", law_fixed_point_iff_equivalence,
        "R(M(R)) = R iff R is an equivalence relation"),
    Law("T4.round-trip-idempotent", "relations", law_round_trip_idempotent,
        "R(M(R(M(R)))) = R(M(R))"),
    Law("D2.enumerated-matroid-axioms", "matroids", law_enumeration_axioms,
        "every enumerated family satisfies (I1)-(I3)"),
    Law("D2.greedy-rank", "matroids", law_greedy_rank,
        "greedy rank equals max independent subset size"),
    Law("P2.rank-determines-independence", "matroids", law_rank_determines_independence,
        "r(X) = |X| iff X independent"),
    Law("P2.closure-axioms", "matroids", law_matroid_closure_axioms,
        "cl_M satisfies (CL1)-(CL4)"),
    Law("P4.R(M)-equivalence", "matroids", law_induced_equivalence,
        "R(M) is an equivalence relation"),
    Law("P4.singleton-H-subset-cl", "matroids", law_singleton_h_subset_cl,
        "H_{R(M)}({x}) <= cl_M({x})"),
    Law("P4.singleton-decomposition", "matroids", law_singleton_decomposition,
        "cl_M({x}) = H_{R(M)}({x}) | loops"),
    Law("C4.H-subset-cl", "matroids", law_h_subset_cl,
        "H_{R(M)}(X) <= cl_M(X)"),
    Law("L4.closure-via-circuits", "matroids", law_closure_via_circuits,
        "cl_M(X) = X | {u : u in C <= X + u for some circuit C}"),
)

LAW_IDS = tuple(law.id for law in LAWS)
_BY_ID = {law.id: law for law in LAWS}


class _Tally:
    __slots__ = ("checked", "failures", "witnesses")

    def __init__(self):
        self.checked = 0
        self.failures = 0
        self.witnesses: list = []

    def merge(self, other: "_Tally") -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = WITNESS_CAP - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])


def _apply(laws: list[Law], subject, tallies: dict[str, _Tally]) -> None:
    for law in laws:
        try:
            outcome = law.check(subject)
        except RelMatroidError as exc:
            outcome = {"error": f"{type(exc).__name__}: {exc}"}
        if outcome is SKIP:
            continue
        t = tallies[law.id]
        t.checked += 1
        if outcome is not None:
            t.failures += 1
            if len(t.witnesses) < WITNESS_CAP:
                t.witnesses.append({**subject.describe(), "detail": outcome})


def _relation_chunk(args):
    n, start, stop, ids = args
    laws = [_BY_ID[i] for i in ids]
    tallies = {i: _Tally() for i in ids}
    u = _universe(n)
    for code in range(start, stop):
        _apply(laws, RelationSubject(rel.BinaryRelation.from_code(u, code)), tallies)
    return tallies


def _matroid_chunk(args):
    n, fams, ids = args
    laws = [_BY_ID[i] for i in ids]
    tallies = {i: _Tally() for i in ids}
    u = _universe(n)
    for fam in fams:
        _apply(laws, MatroidSubject(mat.ExplicitMatroid.from_family_mask(u, fam)), tallies)
    return tallies


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def run_all(n: int = 3, scope: str = "all", laws: Iterable[str] | None = None, jobs: int = 1) -> list[TheoremCase]:
    """Run the law catalog on every subject of size ``1..n``.

    ``scope`` is ``"relations"``, ``"matroids"`` or ``"all"``; ``laws``
    restricts the run to the given ids. Returns one case per selected law, in
    catalog order. Law failures never raise.
    """
    if scope not in (*SCOPES, "all"):
        raise PreconditionError(f"scope must be one of relations, matroids, all; got {scope!r}")
    if laws is None:
        selected = [law for law in LAWS if scope in ("all", law.scope)]
    else:
        wanted = list(dict.fromkeys(laws))
        unknown = [i for i in wanted if i not in _BY_ID]
        if unknown:
            raise PreconditionError(f"unknown law id(s): {', '.join(unknown)}")
        selected = [law for law in LAWS if law.id in wanted and scope in ("all", law.scope)]
    rel_ids = [law.id for law in selected if law.scope == "relations"]
    mat_ids = [law.id for law in selected if law.scope == "matroids"]
    if rel_ids:
        _bounds(n, RELATION_LIMIT, "relation scope")
    if mat_ids:
        _bounds(n, MATROID_LIMIT, "matroid scope")

    jobs_list = []
    for k in range(1, n + 1):
        if rel_ids:
            for a, b in _chunks(1 << (k * k), jobs):
                jobs_list.append((_relation_chunk, (k, a, b, rel_ids)))
        if mat_ids:
            fams = kernels.matroid_families(k)
            for a, b in _chunks(len(fams), jobs):
                jobs_list.append((_matroid_chunk, (k, fams[a:b], mat_ids)))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, args) for fn, args in jobs_list]
            partials = [f.result() for f in futures]
    else:
        partials = [fn(args) for fn, args in jobs_list]

    totals = {law.id: _Tally() for law in selected}
    for part in partials:
        for law_id, tally in part.items():
            totals[law_id].merge(tally)
    out = []
    for law in selected:
        t = totals[law.id]
        out.append(TheoremCase(
            id=law.id,
            scope=law.scope,
            n=n,
            status="pass" if t.failures == 0 else "fail",
            witnesses=tuple(t.witnesses),
            checked=t.checked,
            failures=t.failures,
        ))
    return out


def report_lines(cases: Iterable[TheoremCase]) -> str:
    return "".join(c.to_json_line() for c in cases)
