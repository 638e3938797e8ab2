import itertools

import pytest

import oracles
from conftest import all_relations, fam
from relmatroid import (
    BinaryRelation,
    DomainError,
    PreconditionError,
    Universe,
    equivalence_classes,
    inverse,
    is_equivalence,
    is_reflexive,
    is_symmetric,
    is_transitive,
    predecessor_neighborhood,
    successor_neighborhood,
)
from relmatroid.relation import failed_properties


def as_pairs(r):
    return set(r.pairs())


class TestInverse:
    def test_single_pair(self):
        u = Universe(["1", "2"])
        r = BinaryRelation.from_label_pairs(u, [("1", "2")])
        assert inverse(r).label_pairs() == [("2", "1")]

    def test_identity_fixed(self, u3):
        ident = BinaryRelation.identity(u3)
        assert inverse(ident) == ident

    def test_example(self, example_relation, u3):
        expected = BinaryRelation.from_label_pairs(
            u3, [("1", "1"), ("2", "1"), ("1", "2"), ("3", "2"), ("1", "3"), ("3", "3")]
        )
        assert inverse(example_relation) == expected

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_involutive_and_swaps(self, n):
        for r in all_relations(n):
            assert inverse(inverse(r)) == r
            assert as_pairs(inverse(r)) == {(y, x) for x, y in as_pairs(r)}


class TestPredicates:
    def test_identity(self, u3):
        r = BinaryRelation.identity(u3)
        assert (is_reflexive(r), is_symmetric(r), is_transitive(r), is_equivalence(r)) == (True,) * 4

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_empty(self, n):
        r = BinaryRelation.empty(Universe.of_size(n))
        assert (is_reflexive(r), is_symmetric(r), is_transitive(r)) == (False, True, True)

    def test_example_not_reflexive(self, example_relation):
        assert not is_reflexive(example_relation)
        assert not example_relation.contains(1, 1)
        assert "reflexive" in failed_properties(example_relation)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_literal_definitions(self, n):
        for r in all_relations(n):
            pairs = as_pairs(r)
            universe = range(n)
            assert is_reflexive(r) == oracles.reflexive(pairs, universe)
            assert is_symmetric(r) == oracles.symmetric(pairs)
            assert is_transitive(r) == oracles.transitive(pairs)

    def test_equivalence_count_is_bell_number(self):
        # Bell numbers 1, 2, 5, 15
        assert [sum(map(is_equivalence, all_relations(n))) for n in (1, 2, 3)] == [1, 2, 5]


class TestNeighborhoods:
    def test_example_successors(self, example_relation):
        got = [successor_neighborhood(example_relation, x).labels() for x in range(3)]
        assert got == [["1", "2"], ["1", "3"], ["1", "3"]]

    def test_example_predecessors(self, example_relation):
        got = [predecessor_neighborhood(example_relation, x).labels() for x in range(3)]
        assert got == [["1", "2", "3"], ["1"], ["2", "3"]]

    def test_empty_relation(self, u3):
        r = BinaryRelation.empty(u3)
        assert all(not successor_neighborhood(r, x) for x in range(3))

    def test_out_of_universe(self, example_relation):
        with pytest.raises(DomainError):
            successor_neighborhood(example_relation, 3)
        with pytest.raises(DomainError):
            predecessor_neighborhood(example_relation, -1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_duality_laws(self, n):
        for r in all_relations(n):
            inv = inverse(r)
            for x, y in itertools.product(range(n), repeat=2):
                assert (y in successor_neighborhood(r, x)) == (x in predecessor_neighborhood(r, y))
            for x in range(n):
                assert successor_neighborhood(r, x) == predecessor_neighborhood(inv, x)


class TestEquivalenceClasses:
    def test_identity(self, u3):
        assert equivalence_classes(BinaryRelation.identity(u3)) == fam(u3, "1", "2", "3")

    def test_full(self, u3):
        assert equivalence_classes(BinaryRelation.full(u3)) == fam(u3, "123")

    def test_round_trip_example(self, u3):
        r = BinaryRelation.from_label_pairs(u3, [("1", "1"), ("2", "2"), ("3", "3"), ("2", "3"), ("3", "2")])
        assert equivalence_classes(r) == fam(u3, "1", "23")

    def test_non_equivalence_names_property(self, example_relation):
        with pytest.raises(PreconditionError, match="reflexive"):
            equivalence_classes(example_relation)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_reconstructs_relation(self, n):
        for r in all_relations(n):
            if not is_equivalence(r):
                with pytest.raises(PreconditionError):
                    equivalence_classes(r)
                continue
            blocks = equivalence_classes(r)
            assert sum(len(b) for b in blocks) == n
            assert BinaryRelation.from_partition(r.universe, [list(b) for b in blocks]) == r


class TestConstruction:
    def test_empty_universe_rejected(self):
        with pytest.raises(PreconditionError):
            Universe([])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DomainError):
            Universe(["a", "a"])

    def test_duplicate_pairs_ignored(self, u3):
        r = BinaryRelation.from_label_pairs(u3, [("1", "2"), ("1", "2")])
        assert len(r) == 1

    def test_unknown_label(self, u3):
        with pytest.raises(DomainError, match="'9'"):
            BinaryRelation.from_label_pairs(u3, [("1", "9")])

    def test_code_round_trip(self):
        for r in all_relations(2):
            assert BinaryRelation.from_code(r.universe, r.code) == r

    def test_adjacency(self, example_relation):
        assert example_relation.adjacency == (
            (True, True, False),
            (True, False, True),
            (True, False, True),
        )

    def test_wide_universe_uses_dynamic_width(self):
        u = Universe.of_size(70)
        r = BinaryRelation.from_pairs(u, [(0, 69), (69, 0), (5, 5)])
        assert inverse(r) == r
        assert is_symmetric(r) and not is_reflexive(r)
        assert successor_neighborhood(r, 69).labels() == ["0"]
