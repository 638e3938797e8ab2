"""Pure-Python bitmask kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output, including witness order. Subsets are ints (bit ``i`` is
element ``i``); a relation is a tuple of successor rows; a set family over a
universe of size ``n`` is an int whose bit ``S`` says whether subset ``S`` is a
member.
"""

UNION = 0
INTERSECTION = 1
MONOTONE = 2


def popcount(x):
    return x.bit_count()


def transpose(rows, n):
    cols = [0] * n
    for x in range(n):
        row = rows[x]
        bit = 1 << x
        for y in range(n):
            if row >> y & 1:
                cols[y] |= bit
    return tuple(cols)


def is_reflexive(rows):
    return all(row >> x & 1 for x, row in enumerate(rows))


def is_symmetric(rows):
    return transpose(rows, len(rows)) == tuple(rows)


def is_transitive(rows):
    for row in rows:
        m = row
        while m:
            low = m & -m
            y = low.bit_length() - 1
            if rows[y] & ~row:
                return False
            m ^= low
    return True


def upper_approx(rows, x):
    out = 0
    for u, row in enumerate(rows):
        if row & x:
            out |= 1 << u
    return out


def lower_approx(rows, x):
    out = 0
    for u, row in enumerate(rows):
        if not row & ~x:
            out |= 1 << u
    return out


def upper_table(rows, n):
    # H distributes over unions, so H(X) = H(X minus its lowest bit) | H({lowest})
    size = 1 << n
    singles = [upper_approx(rows, 1 << i) for i in range(n)]
    table = [0] * size
    for x in range(1, size):
        low = x & -x
        table[x] = table[x ^ low] | singles[low.bit_length() - 1]
    return table


def lower_table(rows, n):
    return [lower_approx(rows, x) for x in range(1 << n)]


def binary_law_failures(table, n, kind, cap):
    """Count and collect (X, Y) pairs violating a two-set law over ``table``.

    Pairs are scanned with X ascending, then Y ascending, so the first
    collected witness is the numerically smallest one.
    """
    size = 1 << n
    full = size - 1
    count = 0
    witnesses = []
    if kind == MONOTONE:
        for x in range(size):
            comp = full & ~x
            tx = table[x]
            s = 0
            while True:
                y = x | s
                if tx & ~table[y]:
                    count += 1
                    if len(witnesses) < cap:
                        witnesses.append((x, y))
                if s == comp:
                    break
                s = (s - comp) & comp
        return count, witnesses
    for x in range(size):
        tx = table[x]
        for y in range(size):
            if kind == UNION:
                bad = table[x | y] != tx | table[y]
            else:
                bad = table[x & y] != tx & table[y]
            if bad:
                count += 1
                if len(witnesses) < cap:
                    witnesses.append((x, y))
    return count, witnesses


def family_is_matroid(fam, n):
    if not fam & 1:
        return False
    members = [s for s in range(1 << n) if fam >> s & 1]
    for s in members:
        m = s
        while m:
            low = m & -m
            if not fam >> (s ^ low) & 1:
                return False
            m ^= low
    for a in members:
        ca = a.bit_count()
        for b in members:
            if b.bit_count() <= ca:
                continue
            d = b & ~a
            ok = False
            while d:
                low = d & -d
                if fam >> (a | low) & 1:
                    ok = True
                    break
                d ^= low
            if not ok:
                return False
    return True


def matroid_families(n):
    return [fam for fam in range(1, 1 << (1 << n), 2) if family_is_matroid(fam, n)]


def family_rank_table(fam, n):
    size = 1 << n
    rank = [0] * size
    for x in range(1, size):
        if fam >> x & 1:
            rank[x] = x.bit_count()
            continue
        best = 0
        m = x
        while m:
            low = m & -m
            r = rank[x ^ low]
            if r > best:
                best = r
            m ^= low
        rank[x] = best
    return rank


def closure_table(rank, n):
    size = 1 << n
    out = [0] * size
    for x in range(size):
        rx = rank[x]
        cl = 0
        for u in range(n):
            if rank[x | (1 << u)] == rx:
                cl |= 1 << u
        out[x] = cl
    return out


def closure_axiom_failures(cl, n, cap):
    """Scan (CL1)-(CL4) over a full closure table.

    Returns four ``(count, witnesses)`` pairs. Monotonicity is scanned over
    covering pairs ``(X, X + u)``, which is equivalent by chaining.
    """
    size = 1 << n
    counts = [0, 0, 0, 0]
    found = [[], [], [], []]

    def hit(k, w):
        counts[k] += 1
        if len(found[k]) < cap:
            found[k].append(w)

    for x in range(size):
        cx = cl[x]
        if x & ~cx:
            hit(0, (x,))
        for u in range(n):
            xu = x | (1 << u)
            if xu != x and cx & ~cl[xu]:
                hit(1, (x, xu))
        if cl[cx] != cx:
            hit(2, (x,))
        for a in range(n):
            gained = cl[x | (1 << a)] & ~cx
            for b in range(n):
                if gained >> b & 1 and not cl[x | (1 << b)] >> a & 1:
                    hit(3, (x, a, b))
    return tuple(zip(counts, found))
