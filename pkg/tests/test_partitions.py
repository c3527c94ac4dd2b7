import json

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_max_load
from vacuum_basis.arrays import ArrayKind, Generator, GeneratorArray
from vacuum_basis.lie import ColorLabel
from vacuum_basis.partitions import (ColoredPartition, ResourceCapExceeded, all_partitions, counts_csv,
                                     counts_text, enumerate_admissible, is_admissible, max_path_load,
                                     partition_from_records, partition_records, partitions_to_json,
                                     phi_bijection, phi_inverse, sort_monomial)


def P(text, ell, kind=ArrayKind.FULL):
    return ColoredPartition.parse(text, GeneratorArray(ell, kind))


def test_degree_length_and_str():
    pi = P("1 2_(-1)^1, 2_ 1_(-3)^2", 2)
    assert pi.degree == 7
    assert pi.length == 3
    assert str(pi) == "2̲ 1̲(-3)^2, 1 2̲(-1)^1"
    assert str(P("", 1)) == "∅" and P("", 1).degree == 0


def test_sort_monomial_golden():
    pi = P("1 2_(-1), 2_ 1_(-3)^2, 1 1(-2), 2 2(-1)", 2)
    assert [str(g) for g in sort_monomial(pi)] == [
        "2̲ 1̲(-3)", "2̲ 1̲(-3)", "1 1(-2)", "2 2(-1)", "1 2̲(-1)"]


def test_load_examples():
    pi = P("1 1(-1), 1_ 1_(-1)", 1)
    assert max_path_load(pi) == brute_max_load(pi)
    assert max_path_load(P("1 1(-1)^2", 1)) == 2
    assert not is_admissible(P("1 1(-1)^2", 1), 1)
    assert is_admissible(P("1 1(-1)^2", 1), 2)
    assert max_path_load(P("", 2)) == 0


@pytest.mark.parametrize("ell,kind", [(1, ArrayKind.FULL), (2, ArrayKind.FULL), (1, ArrayKind.FS)])
def test_load_matches_brute_force_exhaustively(ell, kind):
    for n in range(1, 4 if ell == 2 else 5):
        for pi in all_partitions(ell, n, kind):
            assert max_path_load(pi) == brute_max_load(pi), pi


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.lists(st.tuples(st.integers(0, 200), st.integers(1, 3)), min_size=1, max_size=6))
def test_load_matches_brute_force_random(ell, picks):
    arr = GeneratorArray(ell)
    gens = arr.generators(4)
    counts = {}
    for i, m in picks:
        g = gens[i % len(gens)]
        counts[g] = counts.get(g, 0) + m
    pi = ColoredPartition.from_counts(counts, arr)
    assert max_path_load(pi) == brute_max_load(pi)


@pytest.mark.parametrize("k", [1, 2])
def test_enumeration_matches_brute_filter(k):
    got = enumerate_admissible(1, k, 6)
    for n in range(1, 7):
        brute = [p for p in all_partitions(1, n) if brute_max_load(p) <= k]
        assert sorted(map(str, got[n])) == sorted(map(str, brute))


def test_enumeration_counts():
    assert [len(v) for v in enumerate_admissible(1, 1, 8).values()] == [3, 4, 7, 13, 19, 29, 43, 62]
    assert [len(v) for v in enumerate_admissible(1, 2, 6).values()] == [3, 9, 15, 30, 54, 94]
    assert [len(v) for v in enumerate_admissible(2, 1, 4).values()] == [10, 30, 85, 205]
    assert enumerate_admissible(1, 1, 0) == {}


def test_enumeration_order_is_lexicographic():
    for parts in enumerate_admissible(2, 2, 4).values():
        keys = [[g.sort_key for g in sort_monomial(p)] for p in parts]
        assert keys == sorted(keys)


def test_enumeration_cap():
    with pytest.raises(ResourceCapExceeded):
        enumerate_admissible(2, 2, 4, cap=50)
    with pytest.raises(ValueError):
        enumerate_admissible(1, 0, 2)


@pytest.mark.parametrize("ell", [1, 2])
def test_phi_invariance_exhaustive(ell):
    for n in range(1, 6 if ell == 1 else 5):
        for pi in all_partitions(ell, n):
            img = phi_bijection(pi)
            assert img.degree == pi.degree and img.length == pi.length
            assert max_path_load(img) == max_path_load(pi)
            assert phi_inverse(img) == pi


def test_phi_examples():
    assert str(phi_bijection(P("2 3_(-1)", 3))) == "2 4(-1)^1"
    assert str(phi_bijection(P("1_ 1_(-2)", 3))) == "6 6(-2)^1"
    assert str(phi_bijection(P("3_ 3_(-1)", 3))) == "4 4(-1)^1"


@pytest.mark.parametrize("k", [1, 2])
def test_admissibility_equivalence_under_phi(k):
    for n in range(1, 6):
        full = {str(phi_bijection(p)) for p in enumerate_admissible(1, k, n)[n]}
        fs = {str(p) for p in enumerate_admissible(1, k, n, ArrayKind.FS)[n]}
        assert full == fs


def test_records_roundtrip():
    arr = GeneratorArray(2)
    pi = P("1 2_(-1)^1, 2_ 1_(-3)^2", 2)
    assert partition_from_records(partition_records(pi), arr) == pi
    data = json.loads(partitions_to_json(enumerate_admissible(1, 1, 2)))
    assert list(data) == ["1", "2"] and len(data["2"]) == 4
    assert counts_csv(enumerate_admissible(1, 1, 2)) == "degree,count\n1,3\n2,4\n"
    assert counts_text(enumerate_admissible(1, 1, 2)) == "degree 1: 3\ndegree 2: 4\n"


def test_invalid_partitions():
    with pytest.raises(ValueError):
        ColoredPartition.from_counts({Generator(ColorLabel.parse("1 1_", 2), -1): 1},
                                     GeneratorArray(1, ArrayKind.FS))
    with pytest.raises(ValueError):
        ColoredPartition.from_counts({Generator(ColorLabel.parse("1 1", 1), -1): -1}, GeneratorArray(1))
