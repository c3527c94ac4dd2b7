"""Pure-Python versions of the hot kernels (fallback for ``_kernels.pyx``)."""
from heapq import heapify, heappop, heappush
from math import gcd


def max_path_load(rows, diags, mults, nrows):
    """Heaviest downward path through the rotated array.

    Node ``(r, d)`` has children ``(r+1, d)`` and ``(r+1, d+1)``; loads are
    nonnegative so clipping to the support's diagonal window loses nothing.
    """
    n = len(rows)
    if n == 0:
        return 0
    lo = min(diags) - 1
    width = max(diags) + 2 - lo
    load = [[0] * width for _ in range(nrows)]
    for i in range(n):
        load[rows[i]][diags[i] - lo] += mults[i]
    prev = load[0]
    for r in range(1, nrows):
        row = load[r]
        cur = [0] * width
        cur[0] = row[0] + prev[0]
        for j in range(1, width):
            a = prev[j]
            b = prev[j - 1]
            cur[j] = row[j] + (a if a > b else b)
        prev = cur
    return max(prev)


def reduce_row(vec, pivots):
    """Fraction-free reduction of a sparse integer vector against echelon rows.

    ``vec`` is a dict ``col -> int``; ``pivots`` maps a pivot column to a row
    dict whose leading column is that pivot.  Returns ``(reduced, scale)``
    with ``reduced = scale * vec - (integer combination of pivot rows)``.
    """
    vec = dict(vec)
    scale = 1
    cand = [c for c in vec if c in pivots]
    heapify(cand)
    while cand:
        col = heappop(cand)
        a = vec.get(col)
        if a is None:
            continue
        row = pivots[col]
        p = row[col]
        g = gcd(p, a)
        mp = p // g
        ma = a // g
        if mp != 1:
            for c in vec:
                vec[c] *= mp
            scale *= mp
        for c, v in row.items():
            old = vec.get(c)
            if old is None:
                vec[c] = -ma * v
                if c in pivots:
                    heappush(cand, c)
            else:
                nv = old - ma * v
                if nv:
                    vec[c] = nv
                else:
                    del vec[c]
    return vec, scale
