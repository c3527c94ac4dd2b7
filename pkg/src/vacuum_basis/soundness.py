"""Algebraic sanity checks: Jacobi, invariance of the form, Leibniz rule, module axiom."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .derivations import ambient_algebra, apply_T
from .lie import LieAlgebraModel, build_symplectic_model
from .pbw import UElement, VacuumModule, _accumulate


@dataclass
class SoundnessResult:
    name: str
    instances: int
    failures: int
    example: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        tail = f"  first failure: {self.example}" if self.example else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  instances={self.instances}  failures={self.failures}{tail}"


def structure_tensor(model: LieAlgebraModel) -> np.ndarray:
    """``C[i, j, k]`` with ``[x_i, x_j] = sum_k C[i, j, k] x_k``."""
    d = model.dim
    C = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            for k, c in model.brackets[i][j]:
                C[i, j, k] = c
    return C


def jacobi_exhaustive(model: LieAlgebraModel) -> SoundnessResult:
    """ad[x_i, x_j] = [ad x_i, ad x_j] for all pairs; equivalent to Jacobi on all triples.

    Integer entries are small, so float64 products are exact.
    """
    C = structure_tensor(model)
    d = model.dim
    ad = np.transpose(C, (0, 2, 1)).astype(np.float64)  # ad[i][k, j] = C[i, j, k]
    flat = ad.reshape(d, d * d)
    bad = 0
    example = None
    for i in range(d):
        lhs = (C[i].astype(np.float64) @ flat).reshape(d, d, d)
        rhs = ad[i][None, :, :] @ ad - ad @ ad[i][None, :, :]
        wrong = np.argwhere(np.any(lhs != rhs, axis=(1, 2)))
        bad += len(wrong) * d
        if len(wrong) and example is None:
            example = f"[{model.basis[i]}], [{model.basis[int(wrong[0][0])]}]"
    return SoundnessResult(f"jacobi exhaustive rank={model.rank}", d ** 3, bad, example)


def antisymmetry(model: LieAlgebraModel) -> SoundnessResult:
    C = structure_tensor(model)
    bad = int(np.count_nonzero(np.any(C + np.transpose(C, (1, 0, 2)) != 0, axis=2)))
    return SoundnessResult(f"antisymmetry rank={model.rank}", model.dim ** 2, bad)


def form_invariance_exhaustive(model: LieAlgebraModel) -> SoundnessResult:
    """<[x,y],z> = <x,[y,z]> on all triples, plus symmetry of the form."""
    C = structure_tensor(model).astype(np.float64)
    F = np.array(model.form, dtype=np.float64)
    left = np.einsum("ijk,kl->ijl", C, F)   # <[x_i,x_j], x_l>
    right = np.einsum("jlk,ik->ijl", C, F)  # <x_i, [x_j,x_l]>
    bad = int(np.count_nonzero(left != right)) + int(np.count_nonzero(F != F.T))
    return SoundnessResult(f"form invariance rank={model.rank}", model.dim ** 3, bad)


def _random_vec(rng: random.Random, d: int, size: int = 3) -> dict:
    out = {}
    for _ in range(size):
        k = rng.randrange(d)
        out[k] = out.get(k, 0) + rng.randint(-3, 3)
    return {k: v for k, v in out.items() if v}


def jacobi_random(model: LieAlgebraModel, samples: int, seed: int) -> SoundnessResult:
    """Jacobi on random integer combinations (not just basis triples)."""
    rng = random.Random(seed)
    bad, example = 0, None
    br = model.bracket_vec
    for _ in range(samples):
        x, y, z = (_random_vec(rng, model.dim) for _ in range(3))
        total: dict = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for k, v in br(a, br(b, c)).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            bad += 1
            example = example or f"{x} {y} {z}"
    return SoundnessResult(f"jacobi random rank={model.rank}", samples, bad, example)


def _random_word(rng: random.Random, algebra, max_len: int, degrees: Tuple[int, int]) -> List[int]:
    lo, hi = degrees
    return [algebra.code(rng.randrange(algebra.dim), rng.randint(lo, hi))
            for _ in range(rng.randint(0, max_len))]


def leibniz_random(ell: int, samples: int, seed: int) -> SoundnessResult:
    """T_a(u w) = T_a(u) w + u T_a(w) for random words u, w of U(ĝ_{<=0}) in rank 2ℓ."""
    rng = random.Random(seed)
    algebra = ambient_algebra(ell)
    bad, example = 0, None
    for _ in range(samples):
        a = rng.randint(1, ell)
        u = UElement.from_letters(algebra, _random_word(rng, algebra, 2, (-2, 0)))
        w = UElement.from_letters(algebra, _random_word(rng, algebra, 2, (-2, 0)))
        lhs = apply_T(a, u * w)
        rhs = apply_T(a, u) * w + u * apply_T(a, w)
        if lhs != rhs:
            bad += 1
            example = example or f"a={a} u={u} w={w}"
    return SoundnessResult(f"leibniz random ell={ell}", samples, bad, example)


def module_axiom_random(rank: int, level: int, samples: int, seed: int,
                        max_degree: int = 3) -> SoundnessResult:
    """x(y w) - y(x w) = [x,y] w + i <x,y> k δ_{i+j,0} w on M(kΛ0)."""
    rng = random.Random(seed)
    module = VacuumModule(build_symplectic_model(rank), level)
    algebra = module.algebra
    bad, example = 0, None
    for _ in range(samples):
        x = algebra.code(rng.randrange(module.dim), rng.randint(-2, 2))
        y = algebra.code(rng.randrange(module.dim), rng.randint(-2, 2))
        letters = []
        budget = rng.randint(0, max_degree)
        while budget > 0:
            d = rng.randint(1, budget)
            letters.append(algebra.code(rng.randrange(module.dim), -d))
            budget -= d
        w = algebra.normal_order(letters) if letters else {(): 1}
        lhs = dict(module.act(x, module.act(y, w)))
        _accumulate(lhs, module.act(y, module.act(x, w)), -1)
        terms, scalar = module.affine_bracket(x, y)
        rhs: dict = {}
        for z, c in terms:
            _accumulate(rhs, module.act(z, w), c)
        if scalar:
            _accumulate(rhs, w, scalar)
        if lhs != rhs:
            bad += 1
            example = example or f"x={algebra.letter_str(x)} y={algebra.letter_str(y)} w={w}"
    return SoundnessResult(f"module axiom rank={rank} level={level}", samples, bad, example)


def run_all(samples: int = 10000, seed: int = 0, exhaustive_max_rank: int = 6) -> List[SoundnessResult]:
    out = []
    for m in range(1, exhaustive_max_rank + 1):
        model = build_symplectic_model(m)
        out += [antisymmetry(model), jacobi_exhaustive(model), form_invariance_exhaustive(model)]
    out.append(jacobi_random(build_symplectic_model(4), samples, seed))
    out.append(leibniz_random(1, samples, seed))
    out.append(leibniz_random(2, samples, seed + 1))
    out.append(module_axiom_random(1, 1, samples, seed))
    out.append(module_axiom_random(2, 2, samples, seed + 1))
    return out
