import pytest

from vacuum_basis.arrays import (ArrayKind, ArrayPosition, Generator, GeneratorArray, array_position,
                                 downward_paths_through, generator_at, top_row_points)
from vacuum_basis.lie import ColorLabel, weight_of

KINDS = [ArrayKind.FULL, ArrayKind.FS]


def G(text, deg, arr):
    return Generator(ColorLabel.parse(text, arr.rank), deg)


@pytest.mark.parametrize("ell", range(1, 5))
@pytest.mark.parametrize("kind", KINDS)
def test_rows_and_path_counts(ell, kind):
    arr = GeneratorArray(ell, kind)
    rows = {array_position(g, arr).row for g in arr.generators(4)}
    assert rows == set(range(2 * ell + 1))
    for p in top_row_points(arr, 3):
        paths = downward_paths_through(p, arr)
        assert len(paths) == 2 ** (2 * ell)
        assert len(set(paths)) == len(paths)
        assert all(len(path) == 2 * ell + 1 for path in paths)


@pytest.mark.parametrize("ell", range(1, 4))
@pytest.mark.parametrize("kind", KINDS)
def test_position_roundtrip_and_bijectivity(ell, kind):
    arr = GeneratorArray(ell, kind)
    gens = arr.generators(5)
    positions = [array_position(g, arr) for g in gens]
    assert len(set(positions)) == len(gens)
    for g, p in zip(gens, positions):
        assert generator_at(p, arr) == g
    # degrees -1..-2j fill the diagonals 0 .. 2 ell j - 1 completely
    arr4 = [array_position(g, arr) for g in arr.generators(4)]
    filled = {(p.row, p.diag) for p in arr4 if p.diag < 4 * ell}
    assert len(filled) == (2 * ell + 1) * 4 * ell


def test_top_row_starts_with_squares():
    arr = GeneratorArray(2)
    assert generator_at(ArrayPosition(0, 0), arr) == G("1 1", -2, arr)
    assert generator_at(ArrayPosition(0, 1), arr) == G("2 2", -2, arr)
    assert array_position(G("1 1", -1, arr), arr) == ArrayPosition(4, 0)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_gluing_is_adjacency_with_weight_shift(ell):
    """a 1̲(-n) and 1 a(-n-1) are neighbours, and wt(1a(-n-1)) = -α0 + wt(a 1̲(-n))."""
    arr = GeneratorArray(ell)
    for n in range(1, 6):
        for a in range(1, ell + 1):
            lower = G(f"{a} 1_", -n, arr) if a > 1 else G("1 1_", -n, arr)
            upper = G(f"1 {a}", -n - 1, arr)
            p, q = array_position(lower, arr), array_position(upper, arr)
            assert abs(p.row - q.row) == 1
            top, bottom = (p, q) if p.row < q.row else (q, p)
            assert bottom.diag - top.diag in (0, 1)
            # ε parts: ε1+εa = 2ε1 + (εa - ε1); δ parts: -(n+1) = -1 - n
            wu, wl = weight_of(upper.color).eps, weight_of(lower.color).eps
            theta = (2,) + (0,) * (ell - 1)
            assert tuple(x - y for x, y in zip(wu, wl)) == theta
            assert upper.degree == lower.degree - 1


def test_paths_require_top_row():
    with pytest.raises(ValueError):
        downward_paths_through(ArrayPosition(1, 0), GeneratorArray(1))


def test_generator_rejects_nonnegative_degree():
    with pytest.raises(ValueError):
        Generator(ColorLabel.parse("1 1", 1), 0)


def test_fs_contains_only_plain_colors():
    arr = GeneratorArray(2, ArrayKind.FS)
    assert len(arr.colors()) == 10
    assert all(c.shape == "plain" and c.rank == 4 for c in arr.colors())
    with pytest.raises(ValueError):
        array_position(Generator(ColorLabel.parse("1 1_", 4), -1), arr)
