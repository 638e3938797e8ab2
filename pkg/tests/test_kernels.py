import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from relmatroid import kernels
from relmatroid.kernels import _pykernels


def rows_strategy(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n).map(tuple)
    )


def pair_set(rows):
    return {(x, y) for x, row in enumerate(rows) for y in range(len(rows)) if row >> y & 1}


def frozen(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def test_python_backend_always_available():
    assert "python" in kernels.backends()
    assert kernels.BACKEND in kernels.backends()


@given(rows=rows_strategy())
@settings(max_examples=200, deadline=None)
def test_backends_agree_on_relation_kernels(rows):
    n = len(rows)
    outs = []
    for mod in kernels.backends().values():
        outs.append((
            mod.transpose(rows, n),
            mod.is_reflexive(rows),
            mod.is_symmetric(rows),
            mod.is_transitive(rows),
            mod.upper_table(rows, n),
            mod.lower_table(rows, n),
        ))
    assert all(o == outs[0] for o in outs)


@given(rows=rows_strategy())
@settings(max_examples=200, deadline=None)
def test_relation_kernels_match_literal_definitions(rows):
    n = len(rows)
    pairs = pair_set(rows)
    universe = range(n)
    assert pair_set(_pykernels.transpose(rows, n)) == {(y, x) for x, y in pairs}
    assert _pykernels.is_reflexive(rows) == oracles.reflexive(pairs, universe)
    assert _pykernels.is_symmetric(rows) == oracles.symmetric(pairs)
    assert _pykernels.is_transitive(rows) == oracles.transitive(pairs)
    up = _pykernels.upper_table(rows, n)
    low = _pykernels.lower_table(rows, n)
    for x in range(1 << n):
        assert frozen(up[x]) == oracles.upper(pairs, universe, frozen(x))
        assert frozen(low[x]) == oracles.lower(pairs, universe, frozen(x))


def test_width_64_boundary(backend):
    n = 64
    rows = tuple((1 << ((x + 1) % n)) | (1 << x) for x in range(n))
    assert backend.is_reflexive(rows)
    assert not backend.is_symmetric(rows)
    assert backend.transpose(rows, n) == _pykernels.transpose(rows, n)
    assert backend.upper_approx(rows, 1 << 63) == (1 << 63) | (1 << 62)


def test_dispatch_falls_back_beyond_fixed_width():
    n = 70
    rows = tuple(1 << x for x in range(n))
    assert kernels.is_transitive(rows)
    assert kernels.upper_approx(rows, 1 << 69) == 1 << 69


def _naive_binary(table, n, kind, cap):
    count, ws = 0, []
    for x in range(1 << n):
        for y in range(1 << n):
            if kind == _pykernels.UNION:
                bad = table[x | y] != table[x] | table[y]
            elif kind == _pykernels.INTERSECTION:
                bad = table[x & y] != table[x] & table[y]
            else:
                bad = (x & ~y) == 0 and table[x] & ~table[y]
            if bad:
                count += 1
                if len(ws) < cap:
                    ws.append((x, y))
    return count, ws


@pytest.mark.parametrize("kind", [kernels.UNION, kernels.INTERSECTION, kernels.MONOTONE])
def test_binary_law_failures_matches_naive_scan(backend, kind):
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(30):
            table = [rng.randrange(1 << n) for _ in range(1 << n)]
            assert backend.binary_law_failures(table, n, kind, 5) == _naive_binary(table, n, kind, 5)


def test_binary_law_failures_clean_tables(backend):
    rows = (0b011, 0b011, 0b100)
    up = backend.upper_table(rows, 3)
    low = backend.lower_table(rows, 3)
    assert backend.binary_law_failures(up, 3, kernels.UNION, 5) == (0, [])
    assert backend.binary_law_failures(low, 3, kernels.INTERSECTION, 5) == (0, [])
    assert backend.binary_law_failures(up, 3, kernels.MONOTONE, 5) == (0, [])


def family_of(fs, n):
    out = 0
    for s in fs:
        out |= 1 << sum(1 << i for i in s)
    return out


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_matroid_families_match_oracle(backend, n):
    expected = sorted(family_of(f, n) for f in oracles.all_matroids(range(n)))
    assert backend.matroid_families(n) == expected


def test_matroid_families_n4_counts(backend):
    assert len(backend.matroid_families(4)) == 68


def test_family_is_matroid_rejects(backend):
    # {∅, {0}, {1}, {0,1}, {2}}: {2} cannot be augmented from {0,1}
    fam = family_of([(), (0,), (1,), (0, 1), (2,)], 3)
    assert not backend.family_is_matroid(fam, 3)
    # missing the empty set
    assert not backend.family_is_matroid(family_of([(0,)], 1), 1)
    # not hereditary
    assert not backend.family_is_matroid(family_of([(), (0, 1)], 2), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_and_closure_tables_match_oracle(backend, n):
    universe = range(n)
    for f in oracles.all_matroids(universe):
        fam = family_of(f, n)
        rank = backend.family_rank_table(fam, n)
        cl = backend.closure_table(rank, n)
        for x in range(1 << n):
            assert rank[x] == oracles.rank(f, frozen(x))
            assert frozen(cl[x]) == oracles.closure(universe, f, frozen(x))
        assert backend.closure_axiom_failures(cl, n, 5) == ((0, []), (0, []), (0, []), (0, []))


def test_closure_axiom_failures_detects_each_axiom(backend):
    n = 2
    # constant-∅ operator: not extensive; the rest hold
    zero = [0] * 4
    c1, c2, c3, c4 = backend.closure_axiom_failures(zero, n, 5)
    assert c1 == (3, [(1,), (2,), (3,)]) and c2[0] == 0 and c3[0] == 0 and c4[0] == 0
    # cl(∅) = {0}, cl({0}) = {0,1}: extensive and monotone but not idempotent
    table = [0b01, 0b11, 0b11, 0b11]
    _, _, c3, _ = backend.closure_axiom_failures(table, n, 5)
    assert c3 == (1, [(0,)])
    # cl({0}) = {0} but cl({0,1}) = {1}: not monotone
    table = [0b00, 0b01, 0b10, 0b10]
    _, c2, _, _ = backend.closure_axiom_failures(table, n, 5)
    assert c2[0] > 0
    # cl({0}) = {0,1}, cl({1}) = {1}: breaks only exchange
    table = [0b00, 0b11, 0b10, 0b11]
    c1, c2, c3, c4 = backend.closure_axiom_failures(table, n, 5)
    assert (c1[0], c2[0], c3[0]) == (0, 0, 0)
    assert c4[0] == 1 and c4[1][0][0] == 0


def test_backends_agree_on_closure_scans():
    rng = random.Random(11)
    mods = list(kernels.backends().values())
    for n in (1, 2, 3, 4):
        for _ in range(40):
            table = [rng.randrange(1 << n) | x for x in range(1 << n)]
            outs = [m.closure_axiom_failures(table, n, 3) for m in mods]
            assert all(o == outs[0] for o in outs)
