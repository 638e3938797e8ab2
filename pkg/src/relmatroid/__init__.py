"""Relation matroids and generalized rough sets on finite universes."""
from .errors import (
    CapacityError,
    DomainError,
    InvariantViolation,
    LoadError,
    PreconditionError,
    RelMatroidError,
)
from .induced import (
    check_round_trip_laws,
    check_upper_subset_closure,
    compare_upper_and_closure_singleton,
    induce_relation,
    round_trip_relation,
    same_neighborhood_relation,
)
from .kernels import BACKEND
from .matroid import (
    ExplicitMatroid,
    MatroidOracle,
    check_closure_axioms,
    check_matroid_axioms,
    circuits,
    closure,
    closure_via_circuits,
    dependent_sets,
    is_closed,
    matroid_from_family,
    min_family,
    opp_family,
    rank,
)
from .relation import (
    BinaryRelation,
    equivalence_classes,
    inverse,
    is_equivalence,
    is_reflexive,
    is_symmetric,
    is_transitive,
    predecessor_neighborhood,
    successor_neighborhood,
)
from .relation_matroid import (
    RelationMatroid,
    build_relation_matroid,
    compare_closure_and_upper,
    rm_circuits,
    rm_independent_sets,
    rm_closure,
    rm_dependent_sets,
    rm_is_closed,
    rm_rank,
    same_matroid,
)
from .rough import ApproximationPair, approximate, check_h_properties, check_pawlak_properties, lower_approx, upper_approx
from .sets import SetFamily, Subset, Universe

__version__ = "0.1.0"
