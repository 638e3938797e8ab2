"""Literal frozenset implementations of the definitions, for differential tests.

Nothing here imports relmatroid; elements are plain ints and sets are
frozensets, so these cannot share a bug with the bitmask code paths.
"""
from itertools import chain, combinations


def powerset(universe):
    items = sorted(universe)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def succ(rel, x):
    return frozenset(y for (a, y) in rel if a == x)


def pred(rel, x):
    return frozenset(a for (a, y) in rel if y == x)


def upper(rel, universe, X):
    return frozenset(u for u in universe if succ(rel, u) & X)


def lower(rel, universe, X):
    return frozenset(u for u in universe if succ(rel, u) <= X)


def reflexive(rel, universe):
    return all((x, x) in rel for x in universe)


def symmetric(rel):
    return all((y, x) in rel for (x, y) in rel)


def transitive(rel):
    return all((x, z) in rel for (x, y) in rel for (y2, z) in rel if y == y2)


def independent_succ(rel, X):
    return all(succ(rel, x) != succ(rel, y) for x in X for y in X if x != y)


def is_matroid(universe, family):
    fam = set(family)
    if frozenset() not in fam:
        return False
    for I in fam:
        for J in powerset(I):
            if J not in fam:
                return False
    for A in fam:
        for B in fam:
            if len(A) < len(B) and not any(A | {u} in fam for u in B - A):
                return False
    return True


def all_matroids(universe):
    subsets = powerset(universe)
    out = []
    for k in range(1 << len(subsets)):
        fam = [s for i, s in enumerate(subsets) if k >> i & 1]
        if is_matroid(universe, fam):
            out.append(frozenset(fam))
    return out


def rank(family, X):
    return max(len(I) for I in family if I <= X)


def closure(universe, family, X):
    r = rank(family, X)
    return frozenset(u for u in universe if rank(family, X | {u}) == r)


def circuits(universe, family):
    dependent = [S for S in powerset(universe) if S not in family]
    return {S for S in dependent if not any(T < S for T in dependent)}


def induced_relation(universe, family):
    cs = circuits(universe, family)
    return {(x, y) for x in universe for y in universe if x == y or frozenset({x, y}) in cs}
