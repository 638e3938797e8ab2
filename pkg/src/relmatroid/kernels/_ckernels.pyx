# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels; same contract as ``_pykernels``.

Rows and subsets are ``uint64_t`` so callers must keep ``n <= 64`` for the
relation kernels and ``n <= 6`` for the set-family kernels; the dispatcher in
``relmatroid.kernels`` routes larger inputs to the Python backend.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

UNION = 0
INTERSECTION = 1
MONOTONE = 2


cdef inline int pc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef uint64_t* to_array(seq, Py_ssize_t size) except NULL:
    cdef uint64_t* arr = <uint64_t*> malloc(max(size, 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        arr[i] = <uint64_t> seq[i]
    return arr


cdef list from_array(uint64_t* arr, Py_ssize_t size):
    cdef Py_ssize_t i
    return [arr[i] for i in range(size)]


def popcount(uint64_t x):
    return pc(x)


def transpose(rows, int n):
    cdef uint64_t* r = to_array(rows, n)
    cdef uint64_t* c = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    cdef int x, y
    try:
        for y in range(n):
            c[y] = 0
        for x in range(n):
            for y in range(n):
                if (r[x] >> y) & 1:
                    c[y] |= (<uint64_t> 1) << x
        return tuple(from_array(c, n))
    finally:
        free(r)
        free(c)


def is_reflexive(rows):
    cdef int x
    for x in range(len(rows)):
        if not ((<uint64_t> rows[x]) >> x) & 1:
            return False
    return True


def is_symmetric(rows):
    cdef int n = len(rows)
    return transpose(rows, n) == tuple(rows)


def is_transitive(rows):
    cdef int n = len(rows)
    cdef uint64_t* r = to_array(rows, n)
    cdef int x, y
    cdef uint64_t m
    try:
        for x in range(n):
            m = r[x]
            while m:
                y = __builtin_ctzll(m)
                if r[y] & ~r[x]:
                    return False
                m &= m - 1
        return True
    finally:
        free(r)


cdef inline uint64_t c_upper(uint64_t* r, int n, uint64_t x) nogil:
    cdef uint64_t out = 0
    cdef int u
    for u in range(n):
        if r[u] & x:
            out |= (<uint64_t> 1) << u
    return out


cdef inline uint64_t c_lower(uint64_t* r, int n, uint64_t x) nogil:
    cdef uint64_t out = 0
    cdef int u
    for u in range(n):
        if not (r[u] & ~x):
            out |= (<uint64_t> 1) << u
    return out


def upper_approx(rows, uint64_t x):
    cdef int n = len(rows)
    cdef uint64_t* r = to_array(rows, n)
    try:
        return c_upper(r, n, x)
    finally:
        free(r)


def lower_approx(rows, uint64_t x):
    cdef int n = len(rows)
    cdef uint64_t* r = to_array(rows, n)
    try:
        return c_lower(r, n, x)
    finally:
        free(r)


def upper_table(rows, int n):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef uint64_t* r = to_array(rows, n)
    cdef uint64_t* t = <uint64_t*> malloc(size * sizeof(uint64_t))
    cdef Py_ssize_t x
    try:
        for x in range(size):
            t[x] = c_upper(r, n, x)
        return from_array(t, size)
    finally:
        free(r)
        free(t)


def lower_table(rows, int n):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef uint64_t* r = to_array(rows, n)
    cdef uint64_t* t = <uint64_t*> malloc(size * sizeof(uint64_t))
    cdef Py_ssize_t x
    try:
        for x in range(size):
            t[x] = c_lower(r, n, x)
        return from_array(t, size)
    finally:
        free(r)
        free(t)


def binary_law_failures(table, int n, int kind, Py_ssize_t cap):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef uint64_t full = <uint64_t> (size - 1)
    cdef uint64_t* t = to_array(table, size)
    cdef uint64_t x, y, s, comp, tx
    cdef int64_t count = 0
    cdef bint bad
    witnesses = []
    try:
        if kind == MONOTONE:
            for x in range(<uint64_t> size):
                comp = full & ~x
                tx = t[x]
                s = 0
                while True:
                    y = x | s
                    if tx & ~t[y]:
                        count += 1
                        if len(witnesses) < cap:
                            witnesses.append((x, y))
                    if s == comp:
                        break
                    s = (s - comp) & comp
            return count, witnesses
        for x in range(<uint64_t> size):
            tx = t[x]
            for y in range(<uint64_t> size):
                if kind == UNION:
                    bad = t[x | y] != (tx | t[y])
                else:
                    bad = t[x & y] != (tx & t[y])
                if bad:
                    count += 1
                    if len(witnesses) < cap:
                        witnesses.append((x, y))
        return count, witnesses
    finally:
        free(t)


cdef bint c_family_is_matroid(uint64_t fam, int n) nogil:
    cdef int size = 1 << n
    cdef int a, b, ca
    cdef uint64_t m, low, d
    cdef bint ok
    if not fam & 1:
        return False
    for a in range(size):
        if not (fam >> a) & 1:
            continue
        m = <uint64_t> a
        while m:
            low = m & (~m + 1)
            if not (fam >> (a ^ low)) & 1:
                return False
            m ^= low
    for a in range(size):
        if not (fam >> a) & 1:
            continue
        ca = pc(a)
        for b in range(size):
            if not (fam >> b) & 1 or pc(b) <= ca:
                continue
            d = (<uint64_t> b) & ~(<uint64_t> a)
            ok = False
            while d:
                low = d & (~d + 1)
                if (fam >> (a | low)) & 1:
                    ok = True
                    break
                d ^= low
            if not ok:
                return False
    return True


def family_is_matroid(uint64_t fam, int n):
    return c_family_is_matroid(fam, n)


def matroid_families(int n):
    cdef uint64_t fam
    cdef uint64_t top = (<uint64_t> 1) << (1 << n)
    out = []
    fam = 1
    while fam < top:
        if c_family_is_matroid(fam, n):
            out.append(fam)
        fam += 2
    return out


def family_rank_table(uint64_t fam, int n):
    cdef int size = 1 << n
    cdef int x, best, r
    cdef uint64_t m, low
    cdef int* rank = <int*> malloc(size * sizeof(int))
    try:
        rank[0] = 0
        for x in range(1, size):
            if (fam >> x) & 1:
                rank[x] = pc(x)
                continue
            best = 0
            m = <uint64_t> x
            while m:
                low = m & (~m + 1)
                r = rank[x ^ <int> low]
                if r > best:
                    best = r
                m ^= low
            rank[x] = best
        return [rank[x] for x in range(size)]
    finally:
        free(rank)


def closure_table(rank, int n):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef uint64_t* rk = to_array(rank, size)
    cdef uint64_t* out = <uint64_t*> malloc(size * sizeof(uint64_t))
    cdef uint64_t x, cl
    cdef int u
    try:
        for x in range(<uint64_t> size):
            cl = 0
            for u in range(n):
                if rk[x | ((<uint64_t> 1) << u)] == rk[x]:
                    cl |= (<uint64_t> 1) << u
            out[x] = cl
        return from_array(out, size)
    finally:
        free(rk)
        free(out)


def closure_axiom_failures(cl, int n, Py_ssize_t cap):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef uint64_t* c = to_array(cl, size)
    cdef uint64_t x, cx, xu, gained
    cdef int u, a, b
    cdef int64_t counts[4]
    found = [[], [], [], []]
    counts[0] = counts[1] = counts[2] = counts[3] = 0
    try:
        for x in range(<uint64_t> size):
            cx = c[x]
            if x & ~cx:
                counts[0] += 1
                if len(found[0]) < cap:
                    found[0].append((x,))
            for u in range(n):
                xu = x | ((<uint64_t> 1) << u)
                if xu != x and (cx & ~c[xu]):
                    counts[1] += 1
                    if len(found[1]) < cap:
                        found[1].append((x, xu))
            if c[cx] != cx:
                counts[2] += 1
                if len(found[2]) < cap:
                    found[2].append((x,))
            for a in range(n):
                gained = c[x | ((<uint64_t> 1) << a)] & ~cx
                for b in range(n):
                    if (gained >> b) & 1 and not ((c[x | ((<uint64_t> 1) << b)] >> a) & 1):
                        counts[3] += 1
                        if len(found[3]) < cap:
                            found[3].append((x, a, b))
        return tuple((counts[k], found[k]) for k in range(4))
    finally:
        free(c)
