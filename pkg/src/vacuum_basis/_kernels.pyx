# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same signatures and results as ``_pykernels``."""
from heapq import heapify, heappop, heappush
from libc.stdlib cimport calloc, free
from math import gcd


def max_path_load(rows, diags, mults, Py_ssize_t nrows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 0
    cdef Py_ssize_t i, r, j, lo, hi, width
    cdef long long a, b, best
    lo = min(diags) - 1
    hi = max(diags) + 1
    width = hi - lo + 1
    cdef long long *load = <long long *> calloc(nrows * width, sizeof(long long))
    cdef long long *prev = <long long *> calloc(width, sizeof(long long))
    cdef long long *cur = <long long *> calloc(width, sizeof(long long))
    cdef long long *tmp
    if load == NULL or prev == NULL or cur == NULL:
        free(load); free(prev); free(cur)
        raise MemoryError()
    try:
        for i in range(n):
            load[<Py_ssize_t> rows[i] * width + (<Py_ssize_t> diags[i] - lo)] += <long long> mults[i]
        for j in range(width):
            prev[j] = load[j]
        for r in range(1, nrows):
            cur[0] = load[r * width] + prev[0]
            for j in range(1, width):
                a = prev[j]
                b = prev[j - 1]
                cur[j] = load[r * width + j] + (a if a > b else b)
            tmp = prev
            prev = cur
            cur = tmp
        best = prev[0]
        for j in range(1, width):
            if prev[j] > best:
                best = prev[j]
        return best
    finally:
        free(load)
        free(prev)
        free(cur)


def reduce_row(vec, dict pivots):
    """Fraction-free reduction; returns ``(reduced, scale)`` as the fallback does."""
    cdef dict v = dict(vec)
    cdef dict row
    cdef list cand = [c for c in v if c in pivots]
    cdef object scale = 1, col, a, p, g, mp, ma, c, x, old, nv
    heapify(cand)
    while cand:
        col = heappop(cand)
        a = v.get(col)
        if a is None:
            continue
        row = <dict> pivots[col]
        p = row[col]
        g = gcd(p, a)
        mp = p // g
        ma = a // g
        if mp != 1:
            for c in v:
                v[c] = v[c] * mp
            scale = scale * mp
        for c, x in row.items():
            old = v.get(c)
            if old is None:
                v[c] = -ma * x
                if c in pivots:
                    heappush(cand, c)
            else:
                nv = old - ma * x
                if nv:
                    v[c] = nv
                else:
                    del v[c]
    return v, scale
