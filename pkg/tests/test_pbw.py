import random
from fractions import Fraction
from math import comb

import pytest

from oracles import count_pbw_words
from vacuum_basis.arrays import ArrayKind, GeneratorArray
from vacuum_basis.derivations import ambient_algebra, apply_T, color_shift, embedded_monomial, shift_plan, t_color
from vacuum_basis.lie import build_symplectic_model
from vacuum_basis.partitions import ColoredPartition, ResourceCapExceeded, all_partitions, enumerate_admissible
from vacuum_basis.pbw import (PBWAlgebra, UElement, VacuumModule, VacuumQuotient, adjoint_word_action,
                              build_quotient_slices)


def module(rank, k):
    return VacuumModule(build_symplectic_model(rank), k)


def test_codes_follow_generator_order():
    alg = PBWAlgebra(build_symplectic_model(2))
    gens = GeneratorArray(2).generators(3)
    codes = [alg.generator_code(g) for g in gens]
    assert codes == sorted(codes)


def test_normal_ordering_sl2():
    alg = PBWAlgebra(build_symplectic_model(1))
    e, h, f = (alg.code(c, -1) for c in ("1 1", "1 1_", "1_ 1_"))
    # e(-1) f(-1) = f(-1) e(-1) + [e, f](-2) = f(-1) e(-1) + h(-2)
    got = UElement.from_letters(alg, [e, f])
    assert got.terms == {(f, e): 1, (alg.code("1 1_", -2),): 1}
    assert UElement.from_letters(alg, [f, e]).terms == {(f, e): 1}


def test_uelement_associativity_random():
    alg = ambient_algebra(1)
    rng = random.Random(3)
    for _ in range(200):
        x, y, z = (UElement.from_letters(alg, [alg.code(rng.randrange(alg.dim), rng.randint(-2, 0))
                                               for _ in range(rng.randint(0, 2))]) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x + y) * z == x * z + y * z


def test_ratio():
    alg = ambient_algebra(1)
    u = UElement.from_letters(alg, [alg.code(0, -1), alg.code(3, -2)])
    assert (u * 3).ratio_to(u) == 3
    assert u.ratio_to(u + UElement.one(alg)) is None
    assert UElement(alg).ratio_to(u) == 0


def test_act_examples():
    M = module(1, 3)
    alg = M.algebra
    e1, f_1 = alg.code("1 1", 1), alg.code("1_ 1_", -1)
    # 11(1) 1̲1̲(-1) v = [11, 1̲1̲](0) v + 1 * <11, 1̲1̲> * k v = h(0) v + k v = k v
    assert M.act(e1, {(f_1,): 1}) == {(): 3}
    assert M.act(alg.code("1 1_", 0), {(): 1}) == {}
    e_1 = alg.code("1 1", -1)
    assert M.act(e_1, {(): 1}) == {(e_1,): 1}
    # h(1) h(-1) v = 1 * <h, h> * k v = 2k v
    assert M.act(alg.code("1 1_", 1), {(alg.code("1 1_", -1),): 1}) == {(): 6}


def test_monomial_vector_is_pbw_word():
    M = module(2, 1)
    for pi in enumerate_admissible(2, 1, 3)[3]:
        vec = M.monomial_vector(pi)
        assert vec == {M.algebra.word_of(pi): 1}
    assert M.monomial_vector(ColoredPartition((), GeneratorArray(2))) == {(): 1}


@pytest.mark.parametrize("rank", [1, 2])
def test_free_module_counts(rank):
    M = module(rank, 1)
    expect = count_pbw_words(M.dim, 5)
    assert [len(M.words_of_degree(n)) for n in range(6)] == expect


@pytest.mark.parametrize("rank,k", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_singular_closure_dimension(rank, k):
    """The g-module generated by x_θ(-1)^{k+1} v is Sym^{2(k+1)} of the natural rep."""
    q = VacuumQuotient.for_rank(rank, k)
    assert q.slice(k + 1).relation_rank == comb(2 * rank + 2 * k + 1, 2 * k + 2)
    assert all(q.slice(n).relation_rank == 0 for n in range(k + 1))


@pytest.mark.parametrize("rank,k,n", [(1, 1, 5), (1, 2, 5), (2, 1, 3)])
def test_degree_zero_closure_adds_nothing(rank, k, n):
    q = VacuumQuotient.for_rank(rank, k)
    for m in range(k + 1, n + 1):
        assert q.closure_defect(m) == 0


def test_singular_vector_is_singular():
    for k in (1, 2):
        M = module(2, k)
        s = {M.singular_word(): 1}
        for i in range(M.dim):
            for d in (0, 1):
                wt = [x for x in M.model.weights[i] if x]
                if d == 0 and (not wt or wt[0] < 0):
                    continue
                # positive root vectors at degree 0 and all of g(1) kill the singular vector
                assert M.act(M.algebra.code(i, d), s) == {}, (i, d)


def test_slice_basics():
    sl = build_quotient_slices(2, 1, 1)
    assert [s.quotient_dim for s in sl] == [1, 10]
    q = VacuumQuotient.for_rank(1, 1)
    assert [q.slice(n).quotient_dim for n in range(7)] == [1, 3, 4, 7, 13, 19, 29]


def test_rank_test_and_certificate():
    q = VacuumQuotient.for_rank(1, 1)
    assert q.rank_test([]).rank == 0
    allp = all_partitions(1, 3)
    res = q.rank_test(allp)
    assert res.rank == 7 and res.count == len(allp) and res.certificate is not None
    assert any(res.certificate)
    assert q.certificate_holds(allp, res.certificate)
    bad = [Fraction(0)] * len(allp)
    bad[0] = Fraction(1)
    assert not q.certificate_holds(allp, bad)
    adm = enumerate_admissible(1, 1, 3)[3]
    res = q.rank_test(adm)
    assert res.full and res.certificate is None
    with pytest.raises(ValueError):
        q.rank_test(adm + enumerate_admissible(1, 1, 2)[2])


def test_slice_cap():
    with pytest.raises(ResourceCapExceeded):
        VacuumQuotient.for_rank(2, 1, cap_slice_dim=20).slice(2)


def test_t_annihilates_vacuum():
    for ell in (1, 2):
        M = VacuumModule(build_symplectic_model(2 * ell), 1, ambient_algebra(ell))
        for a in range(1, ell + 1):
            assert adjoint_word_action(M, [(t_color(a, ell), 1)], {(): 1}) == {}


def test_adjoint_action_matches_derivation_random():
    """t_a (u v) = (T_a u) v on random words of degree <= 4, ℓ = 1."""
    alg = ambient_algebra(1)
    M = VacuumModule(alg.model, 2, alg)
    rng = random.Random(7)
    t = t_color(1, 1)
    for _ in range(300):
        letters, budget = [], rng.randint(1, 4)
        while budget:
            d = rng.randint(1, budget)
            letters.append(alg.code(rng.randrange(alg.dim), -d))
            budget -= d
        u = UElement.from_letters(alg, letters)
        power = rng.randint(1, 3)
        assert adjoint_word_action(M, [(t, power)], u.on_vacuum()) == apply_T(1, u, power).on_vacuum()


def test_full_shift_word_on_monomials():
    ell, k = 1, 2
    alg = ambient_algebra(ell)
    M = VacuumModule(alg.model, k, alg)
    for pi in enumerate_admissible(ell, k, 3)[3]:
        plan = shift_plan(pi)
        out = adjoint_word_action(M, plan.t_word, embedded_monomial(pi, alg).on_vacuum())
        target = UElement.from_generators(alg, [g for g, m in color_shift(pi).parts for _ in range(m)])
        c = UElement(alg, out).ratio_to(UElement(alg, target.on_vacuum()))
        assert c is not None and c != 0


def test_fs_subspace_rank_k1():
    q = VacuumQuotient.for_rank(2, 1)
    adm = enumerate_admissible(1, 1, 4, ArrayKind.FS)
    for n in range(1, 5):
        res = q.rank_test(adm[n])
        assert res.full, n
