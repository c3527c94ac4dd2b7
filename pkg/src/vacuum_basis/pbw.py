"""Truncated exact model of U(ĝ) acting on the vacuum generalized Verma module.

Letters of a word are integer codes ``degree * dim + index`` where ``index``
follows the ascending color order, so the PBW order ``⪯`` on generators is
the integer order on codes.  Words are sorted tuples of codes.

``PBWAlgebra`` normal-orders products in U(ĝ_{<=0}) (no central terms occur
there).  ``VacuumModule`` adds the action of nonnegative modes on
M(kΛ0) = U(ĝ_{<0}) v, and ``VacuumQuotient`` builds the graded slices of the
irreducible quotient L(kΛ0) by the submodule generated by
``x_θ(-1)^{k+1} v``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import kernels
from .arrays import Generator
from .lie import ColorLabel, LieAlgebraModel, build_symplectic_model
from .linalg import EchelonBasis, SparseVec, tracked_rank
from .partitions import ColoredPartition, ResourceCapExceeded, sort_monomial

Word = Tuple[int, ...]
ModuleVector = Dict[Word, int]
Weight = Tuple[int, ...]
Scalar = Union[int, Fraction]

DEFAULT_SLICE_CAP = int(os.environ.get("VACUUM_BASIS_CAP_SLICE_DIM", "200000"))


def _accumulate(out: Dict[Word, Scalar], vec: Mapping[Word, Scalar], c: Scalar) -> None:
    for w, x in vec.items():
        nv = out.get(w, 0) + c * x
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)


class PBWAlgebra:
    """Normal ordering in U(ĝ_{<=0}) for the loop algebra of ``model``."""

    def __init__(self, model: LieAlgebraModel):
        self.model = model
        self.dim = model.dim
        self._br = model.brackets
        self._insert_memo: Dict[Tuple[int, Word], Dict[Word, int]] = {}
        self._bracket_memo: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = {}
        # ad(x) on single words, filled by the derivation engine
        self.derive_memo: Dict[int, Dict[Word, Dict[Word, int]]] = {}

    # -- letters ---------------------------------------------------------
    def code(self, color: Union[ColorLabel, str, int], degree: int) -> int:
        idx = color if isinstance(color, int) else self.model.idx(color)
        return degree * self.dim + idx

    def decode(self, code: int) -> Tuple[int, int]:
        """``(index, degree)`` of a letter."""
        degree, idx = divmod(code, self.dim)
        return idx, degree

    def generator_code(self, g: Generator) -> int:
        return self.code(self.model.index[g.color], g.degree)

    def letter_str(self, code: int) -> str:
        idx, degree = self.decode(code)
        return f"{self.model.basis[idx]}({degree})"

    def word_str(self, word: Word) -> str:
        return " ".join(self.letter_str(c) for c in word) or "1"

    def word_of(self, pi: ColoredPartition) -> Word:
        return tuple(self.generator_code(g) for g in sort_monomial(pi))

    def weight(self, word: Word) -> Weight:
        wts = self.model.weights
        total = [0] * self.model.rank
        for code in word:
            for i, x in enumerate(wts[code % self.dim]):
                total[i] += x
        return tuple(total)

    @staticmethod
    def degree_of(word: Word, dim: int) -> int:
        return -sum(c // dim for c in word)

    def bracket_codes(self, x: int, y: int) -> Tuple[Tuple[int, int], ...]:
        """Loop part of ``[x, y]`` as ``((code, coeff), ...)``."""
        key = (x, y)
        r = self._bracket_memo.get(key)
        if r is None:
            dx, ix = divmod(x, self.dim)
            dy, iy = divmod(y, self.dim)
            shift = (dx + dy) * self.dim
            r = tuple((shift + k, c) for k, c in self._br[ix][iy])
            self._bracket_memo[key] = r
        return r

    # -- normal ordering -------------------------------------------------
    def insert(self, x: int, word: Word) -> Dict[Word, int]:
        """Normal form of ``x * word`` for a sorted ``word``; all degrees <= 0."""
        key = (x, word)
        r = self._insert_memo.get(key)
        if r is not None:
            return r
        if not word or x <= word[0]:
            r = {(x,) + word: 1}
        else:
            w1 = word[0]
            rest = word[1:]
            out: Dict[Word, int] = {}
            for wd, c in self.insert(x, rest).items():
                _accumulate(out, self.insert(w1, wd), c)
            for z, c in self.bracket_codes(x, w1):
                _accumulate(out, self.insert(z, rest), c)
            r = out
        self._insert_memo[key] = r
        return r

    def multiply_left(self, letters: Sequence[int], vec: Mapping[Word, Scalar]) -> Dict[Word, Scalar]:
        """Normal form of ``letters[0] * ... * letters[-1] * vec``."""
        cur: Dict[Word, Scalar] = dict(vec)
        for x in reversed(letters):
            nxt: Dict[Word, Scalar] = {}
            for w, c in cur.items():
                _accumulate(nxt, self.insert(x, w), c)
            cur = nxt
        return cur

    def normal_order(self, letters: Sequence[int]) -> Dict[Word, int]:
        if not letters:
            return {(): 1}
        return self.multiply_left(letters[:-1], {(letters[-1],): 1})


class UElement:
    """Element of U(ĝ_{<=0}) in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PBWAlgebra, terms: Optional[Mapping[Word, Scalar]] = None):
        self.algebra = algebra
        self.terms: Dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, algebra: PBWAlgebra) -> "UElement":
        return cls(algebra, {(): 1})

    @classmethod
    def from_letters(cls, algebra: PBWAlgebra, letters: Sequence[int]) -> "UElement":
        return cls(algebra, algebra.normal_order(list(letters)))

    @classmethod
    def from_generators(cls, algebra: PBWAlgebra, gens: Iterable[Generator]) -> "UElement":
        return cls.from_letters(algebra, [algebra.generator_code(g) for g in gens])

    def __add__(self, other: "UElement") -> "UElement":
        out = dict(self.terms)
        _accumulate(out, other.terms, 1)
        return UElement(self.algebra, out)

    def __sub__(self, other: "UElement") -> "UElement":
        out = dict(self.terms)
        _accumulate(out, other.terms, -1)
        return UElement(self.algebra, out)

    def __neg__(self) -> "UElement":
        return UElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def scale(self, c: Scalar) -> "UElement":
        return UElement(self.algebra, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UElement):
            return self.scale(other)
        out: Dict[Word, Scalar] = {}
        for w, c in self.terms.items():
            _accumulate(out, self.algebra.multiply_left(w, other.terms), c)
        return UElement(self.algebra, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, UElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def ratio_to(self, other: "UElement") -> Optional[Fraction]:
        """``c`` with ``self == c * other``, or None when not proportional."""
        if not other.terms:
            return Fraction(0) if not self.terms else None
        if set(self.terms) != set(other.terms):
            return Fraction(0) if not self.terms else None
        w0 = next(iter(other.terms))
        c = Fraction(self.terms[w0]) / other.terms[w0]
        if all(self.terms[w] == c * x for w, x in other.terms.items()):
            return c
        return None

    def on_vacuum(self) -> ModuleVector:
        """``u v``: words ending in a degree-0 letter kill the vacuum."""
        return {w: c for w, c in self.terms.items() if not w or w[-1] < 0}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.algebra.word_str(w)}" for w, c in sorted(self.terms.items()))


class VacuumModule:
    """The generalized Verma module M(kΛ0), free over U(ĝ_{<0})."""

    def __init__(self, model: LieAlgebraModel, level: int, algebra: Optional[PBWAlgebra] = None):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.model = model
        self.level = level
        self.algebra = algebra or PBWAlgebra(model)
        self.dim = model.dim
        self._pos_memo: Dict[Tuple[int, Word], Dict[Word, int]] = {}

    def affine_bracket(self, x: int, y: int) -> Tuple[Tuple[Tuple[int, int], ...], int]:
        """``[x(i), y(j)]``: loop terms and the central scalar ``i <x,y> k``."""
        terms = self.algebra.bracket_codes(x, y)
        i, ix = divmod(x, self.dim)
        j, iy = divmod(y, self.dim)
        scalar = i * self.model.form[ix][iy] * self.level if i + j == 0 else 0
        return terms, scalar

    def act_word(self, x: int, word: Word) -> Dict[Word, int]:
        d = x // self.dim
        if d < 0:
            return self.algebra.insert(x, word)
        if d == 0:
            return {w: c for w, c in self.algebra.insert(x, word).items() if not w or w[-1] < 0}
        return self._act_positive(x, word)

    def _act_positive(self, x: int, word: Word) -> Dict[Word, int]:
        key = (x, word)
        r = self._pos_memo.get(key)
        if r is not None:
            return r
        out: Dict[Word, int] = {}
        if word:
            w1, rest = word[0], word[1:]
            for wd, c in self._act_positive(x, rest).items():
                _accumulate(out, self.algebra.insert(w1, wd), c)
            terms, scalar = self.affine_bracket(x, w1)
            for z, c in terms:
                _accumulate(out, self.act_word(z, rest), c)
            if scalar:
                _accumulate(out, {rest: 1}, scalar)
        self._pos_memo[key] = out
        return out

    def act(self, x: int, vec: Mapping[Word, Scalar]) -> Dict[Word, Scalar]:
        out: Dict[Word, Scalar] = {}
        for w, c in vec.items():
            _accumulate(out, self.act_word(x, w), c)
        return out

    def act_generator(self, g: Union[Generator, Tuple[ColorLabel, int]], vec: Mapping[Word, Scalar]):
        if isinstance(g, Generator):
            code = self.algebra.generator_code(g)
        else:
            code = self.algebra.code(g[0], g[1])
        return self.act(code, vec)

    def monomial_vector(self, pi: ColoredPartition) -> ModuleVector:
        """``u(π) v``, computed by acting right to left; asserts it is the PBW word."""
        letters = [self.algebra.generator_code(g) for g in sort_monomial(pi)]
        vec: Dict[Word, int] = {(): 1}
        for x in reversed(letters):
            vec = self.act(x, vec)
        assert vec == {tuple(letters): 1}, "sorted monomial is not a PBW word"
        return vec

    def singular_word(self) -> Word:
        return (self.algebra.code(self.model.theta, -1),) * (self.level + 1)

    def words_of_degree(self, n: int) -> List[Word]:
        """All PBW words of total degree ``n`` (free basis of M_n), sorted."""
        D = self.dim
        out: List[Word] = []

        def grow(prefix: Tuple[int, ...], lo: int, budget: int):
            if budget == 0:
                out.append(prefix)
                return
            for code in range(lo, 0):
                d = -(code // D)
                if d <= budget:
                    grow(prefix + (code,), code, budget - d)

        if n >= 0:
            grow((), -n * D, n)
        out.sort()
        return out


@dataclass
class GradedSlice:
    degree: int
    ambient_basis: List[Word]
    column: Dict[Word, int]
    blocks: Dict[Weight, EchelonBasis] = field(default_factory=dict)
    generators: Dict[Weight, List[ModuleVector]] = field(default_factory=dict)
    block_sizes: Dict[Weight, int] = field(default_factory=dict)

    @property
    def relation_rank(self) -> int:
        return sum(b.rank for b in self.blocks.values())

    @property
    def quotient_dim(self) -> int:
        return len(self.ambient_basis) - self.relation_rank

    def to_sparse(self, vec: Mapping[Word, int]) -> SparseVec:
        col = self.column
        return {col[w]: c for w, c in vec.items()}

    def block(self, wt: Weight) -> EchelonBasis:
        b = self.blocks.get(wt)
        if b is None:
            b = self.blocks[wt] = EchelonBasis()
        return b

    def add_relation(self, wt: Weight, vec: ModuleVector) -> bool:
        if self.block(wt).add(self.to_sparse(vec)):
            self.generators.setdefault(wt, []).append(vec)
            return True
        return False

    def in_relations(self, wt: Weight, vec: ModuleVector) -> bool:
        return self.block(wt).contains(self.to_sparse(vec))

    def quotient_dim_by_weight(self) -> Dict[Weight, int]:
        return {wt: n - (self.blocks[wt].rank if wt in self.blocks else 0)
                for wt, n in self.block_sizes.items()}


class VacuumQuotient:
    """Graded slices of L(kΛ0) = M(kΛ0) / U(ĝ) x_θ(-1)^{k+1} v, built degree by degree.

    The relation slice in degree ``k+1`` is the g-closure of the singular
    vector; above that, ``R_n = g(-1) R_{n-1}`` because g(-1) generates
    U(ĝ_{<0}) and the submodule is stable under g.
    """

    def __init__(self, module: VacuumModule, cap_slice_dim: Optional[int] = None):
        self.module = module
        self.algebra = module.algebra
        self.cap = cap_slice_dim if cap_slice_dim is not None else DEFAULT_SLICE_CAP
        self._slices: Dict[int, GradedSlice] = {}

    @classmethod
    def for_rank(cls, rank: int, level: int, cap_slice_dim: Optional[int] = None) -> "VacuumQuotient":
        return cls(VacuumModule(build_symplectic_model(rank), level), cap_slice_dim)

    def _empty_slice(self, n: int) -> GradedSlice:
        words = self.module.words_of_degree(n)
        if len(words) > self.cap:
            raise ResourceCapExceeded(f"degree {n} slice has {len(words)} > {self.cap} PBW words")
        sl = GradedSlice(n, words, {w: i for i, w in enumerate(words)})
        for w in words:
            wt = self.algebra.weight(w)
            sl.block_sizes[wt] = sl.block_sizes.get(wt, 0) + 1
        return sl

    def slice(self, n: int) -> GradedSlice:
        if n in self._slices:
            return self._slices[n]
        k = self.module.level
        sl = self._empty_slice(n)
        if n == k + 1:
            self._close_singular(sl)
        elif n > k + 1:
            prev = self.slice(n - 1)
            lower = [self.algebra.code(i, -1) for i in range(self.module.dim)]
            wts = self.module.model.weights
            for wt, vecs in prev.generators.items():
                for x in lower:
                    xw = wts[x % self.module.dim]
                    target = tuple(a + b for a, b in zip(wt, xw))
                    for vec in vecs:
                        sl.add_relation(target, self.module.act(x, vec))
        self._slices[n] = sl
        return sl

    def _close_singular(self, sl: GradedSlice) -> None:
        s = {self.module.singular_word(): 1}
        degree0 = list(range(self.module.dim))
        wts = self.module.model.weights
        wt0 = self.algebra.weight(self.module.singular_word())
        sl.add_relation(wt0, s)
        queue = [(wt0, s)]
        while queue:
            wt, vec = queue.pop()
            for z in degree0:
                out = self.module.act(z, vec)
                if not out:
                    continue
                target = tuple(a + b for a, b in zip(wt, wts[z]))
                if sl.add_relation(target, out):
                    queue.append((target, out))

    def slices(self, max_degree: int) -> List[GradedSlice]:
        return [self.slice(n) for n in range(max_degree + 1)]

    def closure_defect(self, n: int) -> int:
        """Number of degree-0 images of relation generators falling outside R_n (expect 0)."""
        sl = self.slice(n)
        wts = self.module.model.weights
        bad = 0
        for wt, vecs in sl.generators.items():
            for vec in vecs:
                for z in range(self.module.dim):
                    out = self.module.act(z, vec)
                    if out:
                        target = tuple(a + b for a, b in zip(wt, wts[z]))
                        bad += not sl.in_relations(target, out)
        return bad

    # -- rank tests ------------------------------------------------------
    def rank_test(self, partitions: Sequence[ColoredPartition]) -> "RankResult":
        if not partitions:
            return RankResult(0, 0, None)
        degrees = {p.degree for p in partitions}
        if len(degrees) != 1:
            raise ValueError(f"partitions of mixed degrees {sorted(degrees)}")
        n = degrees.pop()
        sl = self.slice(n)
        by_weight: Dict[Weight, List[int]] = {}
        words = []
        for i, p in enumerate(partitions):
            w = self.algebra.word_of(p)
            words.append(w)
            by_weight.setdefault(self.algebra.weight(w), []).append(i)
        total = 0
        certificate = None
        for wt, idxs in by_weight.items():
            block = sl.block(wt)
            residuals, scales = [], []
            for i in idxs:
                res, scale = kernels.reduce_row({sl.column[words[i]]: 1}, block.pivots)
                residuals.append(res)
                scales.append(scale)
            r, dep = tracked_rank(residuals)
            total += r
            if dep is not None and certificate is None:
                certificate = [Fraction(0)] * len(partitions)
                for j, i in enumerate(idxs):
                    certificate[i] = dep[j] * scales[j]
        return RankResult(total, len(partitions), certificate)

    def certificate_holds(self, partitions: Sequence[ColoredPartition], coeffs: Sequence[Fraction]) -> bool:
        """Check that ``sum c_π u(π) v`` lies in the relation space."""
        n = partitions[0].degree
        sl = self.slice(n)
        den = 1
        for c in coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        by_weight: Dict[Weight, Dict[int, int]] = {}
        for p, c in zip(partitions, coeffs):
            if c:
                w = self.algebra.word_of(p)
                vec = by_weight.setdefault(self.algebra.weight(w), {})
                col = sl.column[w]
                vec[col] = vec.get(col, 0) + int(c * den)
        return all(sl.block(wt).contains(v) for wt, v in by_weight.items())


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass
class RankResult:
    rank: int
    count: int
    certificate: Optional[List[Fraction]]

    @property
    def full(self) -> bool:
        return self.rank == self.count


def build_quotient_slices(ell: int, k: int, max_degree: int,
                          cap_slice_dim: Optional[int] = None) -> List[GradedSlice]:
    return VacuumQuotient.for_rank(ell, k, cap_slice_dim).slices(max_degree)


def adjoint_word_action(module: VacuumModule, t_word: Sequence[Tuple[ColorLabel, int]],
                        vec: Mapping[Word, Scalar]) -> Dict[Word, Scalar]:
    """Apply ``t_1^{m_1} ... t_ℓ^{m_ℓ}`` (degree-0 modes, rightmost first) to ``vec``."""
    out: Dict[Word, Scalar] = dict(vec)
    for color, power in reversed(list(t_word)):
        code = module.algebra.code(color, 0)
        for _ in range(power):
            out = module.act(code, out)
    return out
