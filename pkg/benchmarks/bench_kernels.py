"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload is run with both backends and must give identical results.
"""
import argparse
import random
import time

from vacuum_basis import _pykernels, kernels
from vacuum_basis.arrays import ArrayKind, GeneratorArray, _position_cache

try:
    from vacuum_basis import _kernels
except ImportError:
    _kernels = None


def path_load_workload(n_cases=20000, seed=1):
    rng = random.Random(seed)
    arr = GeneratorArray(2, ArrayKind.FULL)
    gens = arr.generators(6)
    cases = []
    for _ in range(n_cases):
        picks = rng.sample(gens, rng.randint(1, 6))
        pos = [_position_cache(arr, g) for g in picks]
        cases.append(([p[0] for p in pos], [p[1] for p in pos],
                      [rng.randint(1, 3) for _ in picks], arr.nrows))
    return cases


def echelon_workload(rank=2, level=1, degree=5):
    """Relation vectors of one quotient slice, replayed through reduce_row."""
    from vacuum_basis.pbw import VacuumQuotient
    q = VacuumQuotient.for_rank(rank, level)
    q.slice(degree - 1)
    sl = q._empty_slice(degree)
    prev = q.slice(degree - 1)
    wts = q.module.model.weights
    vectors = []
    for wt, vecs in prev.generators.items():
        for i in range(q.module.dim):
            x = q.algebra.code(i, -1)
            target = tuple(a + b for a, b in zip(wt, wts[i]))
            for v in vecs:
                vectors.append((target, sl.to_sparse(q.module.act(x, v))))
    return vectors


def run_paths(fn, cases):
    return [fn(*c) for c in cases]


def run_echelon(fn, vectors):
    blocks = {}
    ranks = 0
    for wt, v in vectors:
        piv = blocks.setdefault(wt, {})
        res, _ = fn(v, piv)
        if res:
            lead = min(res)
            from vacuum_basis.linalg import primitive
            piv[lead] = primitive(res)
            ranks += 1
    return ranks


def timed(fn, *args, repeat=3):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--degree", type=int, default=5)
    args = ap.parse_args()
    print(f"selected backend: {kernels.BACKEND}")
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return
    cases = path_load_workload()
    vectors = echelon_workload(degree=args.degree)
    rows = []
    for name, runner, data, py, cy in (
        ("max_path_load", run_paths, cases, _pykernels.max_path_load, _kernels.max_path_load),
        ("reduce_row", run_echelon, vectors, _pykernels.reduce_row, _kernels.reduce_row),
    ):
        tp, rp = timed(runner, py, data, repeat=args.repeat)
        tc, rc = timed(runner, cy, data, repeat=args.repeat)
        assert rp == rc, f"{name}: backends disagree"
        rows.append((name, len(data), tp, tc))
    print(f"{'kernel':<14}{'inputs':>8}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, n, tp, tc in rows:
        print(f"{name:<14}{n:>8}{tp:>11.3f}{tc:>11.3f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
