"""Color-shift derivations T_a = ad(t_a) with t_a = a (2ℓ-a+1) in C_{2ℓ}.

The operators act on U(ĝ_{<=0}) of the rank-2ℓ algebra through the Leibniz
rule.  ``shift_plan`` does the bookkeeping m_a̲(π), M(π) and t(π);
``color_shift`` relabels barred colors onto the FS array.  The ``verify_*``
functions check the action identities exactly and return line reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .arrays import ArrayKind, Generator, GeneratorArray
from .lie import ColorLabel, IndexLabel, LieAlgebraModel, build_symplectic_model
from .partitions import ColoredPartition, sort_monomial
from .pbw import PBWAlgebra, UElement, VacuumModule, Word, _accumulate, adjoint_word_action


def t_color(a: int, ell: int) -> ColorLabel:
    if not 1 <= a <= ell:
        raise ValueError(f"need 1 <= a <= ell, got a={a}, ell={ell}")
    return ColorLabel(IndexLabel(a), IndexLabel(2 * ell - a + 1), 2 * ell)


@lru_cache(maxsize=None)
def ambient_algebra(ell: int) -> PBWAlgebra:
    """Shared normal-ordering engine of U(ĝ_{<=0}) for C_{2ℓ}."""
    return PBWAlgebra(build_symplectic_model(2 * ell))


def _derive_word(algebra: PBWAlgebra, t: int, word: Word, memo: Dict[Word, Dict[Word, int]]):
    r = memo.get(word)
    if r is None:
        r = {}
        for i, x in enumerate(word):
            for z, c in algebra.bracket_codes(t, x):
                head = word[:i] + (z,)
                _accumulate(r, algebra.multiply_left(head, {word[i + 1:]: 1}), c)
        memo[word] = r
    return r


def apply_T(a: int, u: UElement, times: int = 1) -> UElement:
    """``ad(t_a)^times u`` by the Leibniz rule; ``u`` lives in the rank-2ℓ algebra."""
    if times < 0:
        raise ValueError("times must be nonnegative")
    algebra = u.algebra
    rank = algebra.model.rank
    if rank % 2:
        raise ValueError("derivations act on the even-rank ambient algebra")
    t = algebra.code(t_color(a, rank // 2), 0)
    memo = algebra.derive_memo.setdefault(t, {})
    terms = dict(u.terms)
    for _ in range(times):
        out: Dict[Word, Fraction] = {}
        for w, c in terms.items():
            _accumulate(out, _derive_word(algebra, t, w, memo), c)
        terms = out
        if not terms:
            break
    return UElement(algebra, terms)


def nilpotency_order(a: int, u: UElement, limit: int = 16) -> Optional[int]:
    """Least ``j`` with ``T_a^j u = 0`` (None when above ``limit``)."""
    for j in range(limit + 1):
        if u.is_zero():
            return j
        u = apply_T(a, u, 1)
    return None


# -- bookkeeping ---------------------------------------------------------------

@dataclass(frozen=True)
class ShiftPlan:
    pi: ColoredPartition
    m_underline: Tuple[int, ...]
    bigM: int
    t_word: Tuple[Tuple[ColorLabel, int], ...]

    @property
    def ell(self) -> int:
        return self.pi.array.ell


def shift_plan(pi: ColoredPartition) -> ShiftPlan:
    arr = pi.array
    if arr.kind is not ArrayKind.FULL:
        raise ValueError("shift_plan expects a partition on the full array")
    ell = arr.ell
    m = [0] * ell
    for g, mult in pi.parts:
        for a in range(1, ell + 1):
            m[a - 1] += mult * g.color.count_label(IndexLabel(a, True))
    t_word = tuple((t_color(a, ell), m[a - 1]) for a in range(1, ell + 1))
    return ShiftPlan(pi, tuple(m), sum(m), t_word)


def shifted_color(c: ColorLabel, ell: int) -> ColorLabel:
    """``ab -> ab``, ``a b̲ -> a (2ℓ-b+1)``, ``a̲ b̲ -> (2ℓ-a+1)(2ℓ-b+1)``."""
    def lift(lab: IndexLabel) -> IndexLabel:
        return IndexLabel(2 * ell - lab.value + 1) if lab.barred else IndexLabel(lab.value)
    return ColorLabel.make(lift(c.first), lift(c.second), 2 * ell)


def color_shift(pi: ColoredPartition) -> ColoredPartition:
    arr = pi.array
    if arr.kind is not ArrayKind.FULL:
        raise ValueError("color_shift expects a partition on the full array")
    counts: Dict[Generator, int] = {}
    for g, mult in pi.parts:
        h = Generator(shifted_color(g.color, arr.ell), g.degree)
        counts[h] = counts.get(h, 0) + mult
    return ColoredPartition.from_counts(counts, GeneratorArray(arr.ell, ArrayKind.FS))


def embedded_monomial(pi: ColoredPartition, algebra: Optional[PBWAlgebra] = None) -> UElement:
    """``u(π)`` inside the rank-2ℓ enveloping algebra."""
    ell = pi.array.ell
    algebra = algebra or ambient_algebra(ell)
    rank = algebra.model.rank
    letters = [algebra.code(ColorLabel(g.color.first, g.color.second, rank), g.degree)
               for g in sort_monomial(pi)]
    return UElement.from_letters(algebra, letters)


def apply_plan(plan: ShiftPlan, u: UElement) -> UElement:
    """``T(π) u``: T_ℓ^{m_ℓ̲} acts first, T_1^{m_1̲} last."""
    for a in range(plan.ell, 0, -1):
        u = apply_T(a, u, plan.m_underline[a - 1])
    return u


# -- reports ---------------------------------------------------------------------

@dataclass
class IdentityCheck:
    identity: str
    expected: str
    scalar: Optional[Fraction]
    passed: bool

    def line(self) -> str:
        s = "-" if self.scalar is None else str(self.scalar)
        return f"{'PASS' if self.passed else 'FAIL'}  {self.identity}  expected {self.expected}  c={s}"


@dataclass
class Report:
    title: str
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> List[str]:
        return [c.line() for c in self.checks]

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _bar(a: int) -> IndexLabel:
    return IndexLabel(a, True)


def _power_str(letter: str, m: int) -> str:
    return f"({letter})^{m}" if m > 1 else f"({letter})"


def _check_proportional(report: Report, name: str, result: UElement, target: UElement,
                        target_name: str) -> None:
    c = result.ratio_to(target)
    report.checks.append(IdentityCheck(name, f"Q^x * {target_name}", c, c is not None and c != 0))


def _check_zero(report: Report, name: str, result: UElement) -> None:
    report.checks.append(IdentityCheck(name, "0", None, result.is_zero()))


def _letter(algebra: PBWAlgebra, c: ColorLabel, n: int) -> UElement:
    return UElement.from_letters(algebra, [algebra.code(c, n)])


def verify_lemma_single(a: int, ell: int, n: int, algebra: Optional[PBWAlgebra] = None) -> Report:
    """Single-letter action identities of T_a at degree ``n``."""
    if not 1 <= a <= ell:
        raise ValueError("need 1 <= a <= ell")
    algebra = algebra or ambient_algebra(ell)
    R = 2 * ell
    A = R - a + 1
    rep = Report(f"single a={a} ell={ell} n={n}")
    ab, Ab = _bar(a), _bar(A)

    def col(x: IndexLabel, y: IndexLabel) -> ColorLabel:
        return ColorLabel.make(x, y, R)

    def T(j: int, c: ColorLabel) -> Tuple[str, UElement]:
        return f"T_{ab}^{j}({c}({n}))", apply_T(a, _letter(algebra, c, n), j)

    for b in range(1, a + 1):
        src, dst = col(ab, _bar(b)), col(IndexLabel(A), _bar(b))
        name, res = T(1, src)
        _check_proportional(rep, name, res, _letter(algebra, dst, n), f"{dst}({n})")
    for c in range(1, A + 1):
        src, dst = col(IndexLabel(c), ab), col(IndexLabel(c), IndexLabel(A))
        name, res = T(1, src)
        _check_proportional(rep, name, res, _letter(algebra, dst, n), f"{dst}({n})")
        _check_zero(rep, *T(2, src))
    for b in range(1, a):
        _check_zero(rep, *T(2, col(ab, _bar(b))))
    _check_zero(rep, *T(3, col(ab, ab)))
    for c in algebra.model.basis:
        if not (c.has_label(ab) or c.has_label(Ab)):
            _check_zero(rep, *T(2, c))
    return rep


POWER_CASES = ("diagonal", "column", "row")


def verify_lemma_powers(a: int, ell: int, m: int, case: str, n: int = -1,
                        algebra: Optional[PBWAlgebra] = None) -> Report:
    """Power identities on pure powers of a single generator.

    diagonal: T^{2m} (a̲a̲)^m ~ (AA)^m and T^{2m+1} kills it;
    column:   T^m (a̲b̲)^m ~ (A b̲)^m for b < a, T^{m+1} kills it;
    row:      T^m (c a̲)^m ~ (c A)^m for c <= A, T^{m+1} kills it;
    where A = 2ℓ-a+1.
    """
    if case not in POWER_CASES:
        raise ValueError(f"case must be one of {POWER_CASES}")
    if m < 1:
        raise ValueError("m must be >= 1")
    algebra = algebra or ambient_algebra(ell)
    R = 2 * ell
    A = R - a + 1
    ab = _bar(a)
    rep = Report(f"powers a={a} ell={ell} m={m} {case}")
    if case == "diagonal":
        pairs = [(ColorLabel.make(ab, ab, R), ColorLabel.make(IndexLabel(A), IndexLabel(A), R), 2)]
    elif case == "column":
        pairs = [(ColorLabel.make(ab, _bar(b), R), ColorLabel.make(IndexLabel(A), _bar(b), R), 1)
                 for b in range(1, a)]
    else:
        pairs = [(ColorLabel.make(IndexLabel(c), ab, R), ColorLabel.make(IndexLabel(c), IndexLabel(A), R), 1)
                 for c in range(1, A + 1)]
    for src, dst, per in pairs:
        u = UElement.from_letters(algebra, [algebra.code(src, n)] * m)
        target = UElement.from_letters(algebra, [algebra.code(dst, n)] * m)
        name = _power_str(f"{src}({n})", m)
        top = apply_T(a, u, per * m)
        _check_proportional(rep, f"T_{ab}^{per * m}{name}", top, target,
                            _power_str(f"{dst}({n})", m) if m > 1 else f"{dst}({n})")
        _check_zero(rep, f"T_{ab}^{per * m + 1}{name}", apply_T(a, top, 1))
    return rep


def verify_color_shift_end_to_end(pi: ColoredPartition, k: int,
                                  others: Iterable[ColoredPartition] = (),
                                  module: Optional[VacuumModule] = None) -> Report:
    """T(π)u(π) ~ w(π') in U, t(π)(u(π)v) = (T(π)u(π))v in M(kΛ0), and selection.

    Selection: T(π)u(π~) = 0 for every π~ in ``others`` with M(π~) <= M(π)
    and t(π~) != t(π).
    """
    ell = pi.array.ell
    algebra = module.algebra if module else ambient_algebra(ell)
    module = module or VacuumModule(algebra.model, k, algebra)
    plan = shift_plan(pi)
    rep = Report(f"color shift {pi}")
    u = embedded_monomial(pi, algebra)
    tu = apply_plan(plan, u)
    shifted = color_shift(pi)
    w = UElement.from_generators(algebra, sort_monomial(shifted))
    _check_proportional(rep, f"T(π)u(π) for π={pi}", tu, w, f"w({shifted})")
    via_module = adjoint_word_action(module, plan.t_word, u.on_vacuum())
    ok = via_module == tu.on_vacuum()
    rep.checks.append(IdentityCheck(f"t(π)(u(π)v) for π={pi}", "(T(π)u(π))v", None, ok))
    for other in others:
        op = shift_plan(other)
        if other == pi or op.bigM > plan.bigM or op.m_underline == plan.m_underline:
            continue
        res = apply_plan(plan, embedded_monomial(other, algebra))
        _check_zero(rep, f"T(π)u(π~) for π={pi}, π~={other}", res)
    return rep


def verify_color_shift_suite(ell: int, k: int, partitions: Sequence[ColoredPartition]) -> Report:
    """End-to-end check for every π in ``partitions`` with selection over the same set."""
    algebra = ambient_algebra(ell)
    module = VacuumModule(algebra.model, k, algebra)
    rep = Report(f"color shift suite ell={ell} k={k}")
    for pi in partitions:
        rep.extend(verify_color_shift_end_to_end(pi, k, partitions, module))
    return rep


def verify_lemma_suite(ell_max: int = 3, m_max: int = 3, degrees: Sequence[int] = (-1, -2),
                       model: Optional[LieAlgebraModel] = None) -> Report:
    """All single and power identities for 1 <= a <= ℓ <= ell_max.

    ``model`` overrides the rank-2ℓ algebra (its rank fixes ℓ); used for
    negative controls with a corrupted bracket table.
    """
    rep = Report("lemma suite")
    ells = [model.rank // 2] if model is not None else range(1, ell_max + 1)
    for ell in ells:
        algebra = PBWAlgebra(model) if model is not None else ambient_algebra(ell)
        for a in range(1, ell + 1):
            for n in degrees:
                rep.extend(verify_lemma_single(a, ell, n, algebra))
                for m in range(1, m_max + 1):
                    for case in POWER_CASES:
                        rep.extend(verify_lemma_powers(a, ell, m, case, n, algebra))
    return rep
