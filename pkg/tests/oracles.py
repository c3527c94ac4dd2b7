"""Independent brute-force references used by the tests."""
from itertools import product

from vacuum_basis.arrays import array_position


def brute_max_load(pi):
    """Max path load by listing every downward path (no DP, no window clipping)."""
    arr = pi.array
    L = arr.side
    at = {}
    for g, m in pi.parts:
        p = array_position(g, arr)
        at[(p.row, p.diag)] = at.get((p.row, p.diag), 0) + m
    if not at:
        return 0
    hi = max(d for _, d in at)
    best = 0
    for start in range(0, hi + 1):
        for steps in product((0, 1), repeat=L):
            d, total = start, at.get((0, start), 0)
            for r, s in enumerate(steps, 1):
                d += s
                total += at.get((r, d), 0)
            best = max(best, total)
    return best


def theta_over_phi(n_max):
    """Coefficients of sum_m q^{m^2} / prod_{j>=1} (1 - q^j), the A1 level-1 vacuum character."""
    theta = [0] * (n_max + 1)
    m = 0
    while m * m <= n_max:
        theta[m * m] += 1 if m == 0 else 2
        m += 1
    p = [1] + [0] * n_max
    for j in range(1, n_max + 1):
        for n in range(j, n_max + 1):
            p[n] += p[n - j]
    return [sum(theta[i] * p[n - i] for i in range(n + 1)) for n in range(n_max + 1)]


def count_pbw_words(dim, n_max):
    """Coefficients of prod_{j>=1} (1 - q^j)^{-dim}."""
    c = [1] + [0] * n_max
    for j in range(1, n_max + 1):
        for _ in range(dim):
            for n in range(j, n_max + 1):
                c[n] += c[n - j]
    return c

