import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from vacuum_basis import _pykernels, kernels
from vacuum_basis.linalg import EchelonBasis, combine, primitive, tracked_rank

try:
    from vacuum_basis import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [_pykernels] + ([_kernels] if _kernels else [])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 8), st.integers(0, 20), st.integers(1, 4)),
                                   min_size=1, max_size=8))
def test_path_load_backends_agree(impl, ell, items):
    nrows = 2 * ell + 1
    rows = [r % nrows for r, _, _ in items]
    diags = [d for _, d, _ in items]
    mults = [m for _, _, m in items]
    assert impl.max_path_load(rows, diags, mults, nrows) == _pykernels.max_path_load(rows, diags, mults, nrows)


def _random_rows(rng, n, width, density=0.4):
    out = []
    for _ in range(n):
        v = {c: rng.randint(-4, 4) for c in range(width) if rng.random() < density}
        out.append({c: x for c, x in v.items() if x})
    return out


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_reduce_row_contract(impl):
    rng = random.Random(11)
    for _ in range(50):
        rows = _random_rows(rng, 6, 8)
        basis = EchelonBasis()
        for r in rows:
            basis.add(r)
        vec = _random_rows(rng, 1, 8)[0]
        red, scale = impl.reduce_row(vec, basis.pivots)
        assert red == _pykernels.reduce_row(vec, basis.pivots)[0]
        assert all(c not in basis.pivots for c in red)
        # scale * vec - red lies in the row space
        diff = {c: scale * vec.get(c, 0) - red.get(c, 0) for c in set(vec) | set(red)}
        assert basis.contains({c: x for c, x in diff.items() if x})


def test_rank_against_sympy():
    import sympy
    rng = random.Random(5)
    for _ in range(30):
        rows = _random_rows(rng, rng.randint(1, 7), 6, 0.5)
        mat = sympy.Matrix([[r.get(c, 0) for c in range(6)] for r in rows])
        basis = EchelonBasis()
        for r in rows:
            basis.add(r)
        rank, cert = tracked_rank(rows)
        assert rank == basis.rank == mat.rank()
        if cert is not None:
            assert any(cert) and not combine(rows, cert)
        else:
            assert rank == len(rows)


def test_primitive():
    assert primitive({2: -4, 5: 6}) == {2: 2, 5: -3}
    assert primitive({}) == {}


def test_backend_selection():
    assert kernels.BACKEND in ("python", "cython")
    env = dict(os.environ, VACUUM_BASIS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from vacuum_basis import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
