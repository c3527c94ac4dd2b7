"""Exact model of the symplectic Lie algebra sp(2m) = C_m.

Basis vectors are named by unordered pairs of index labels taken from
``1, ..., m, m̲, ..., 1̲`` (the pair ``a a̲`` is the Cartan element ``h_a``).
Brackets come from an explicit 2m x 2m matrix realization and are stored
as integer structure constants; the invariant form is the trace form,
which already satisfies <theta, theta> = 2 for type C.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

BAR = "̲"

# (index into basis, coefficient)
Combination = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class IndexLabel:
    value: int
    barred: bool = False

    @property
    def key(self) -> Tuple[int, int]:
        """Sort key: ``x ≻ y`` iff ``x.key < y.key``."""
        return (1, -self.value) if self.barred else (0, self.value)

    def position(self, m: int) -> int:
        """1-based position in ``1 ≻ ... ≻ m ≻ m̲ ≻ ... ≻ 1̲``."""
        return 2 * m + 1 - self.value if self.barred else self.value

    @classmethod
    def from_position(cls, p: int, m: int) -> "IndexLabel":
        if not 1 <= p <= 2 * m:
            raise ValueError(f"position {p} out of range for rank {m}")
        return cls(p) if p <= m else cls(2 * m + 1 - p, True)

    @property
    def sign(self) -> int:
        return -1 if self.barred else 1

    def __str__(self) -> str:
        return f"{self.value}{BAR}" if self.barred else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "IndexLabel":
        text = text.strip()
        barred = text.endswith(BAR) or text.endswith("_")
        digits = text.rstrip(BAR + "_")
        if not digits.isdigit():
            raise ValueError(f"bad index label {text!r}")
        return cls(int(digits), barred)


@dataclass(frozen=True)
class ColorLabel:
    """Basis element ``first second`` of sp(2·rank) with ``first ⪰ second``."""

    first: IndexLabel
    second: IndexLabel
    rank: int

    def __post_init__(self):
        for lab in (self.first, self.second):
            if not 1 <= lab.value <= self.rank:
                raise ValueError(f"label {lab} invalid for rank {self.rank}")
        if self.first.key > self.second.key:
            raise ValueError(f"color {self.first}{self.second} not in canonical order")

    @classmethod
    def make(cls, x: IndexLabel, y: IndexLabel, rank: int) -> "ColorLabel":
        if x.key > y.key:
            x, y = y, x
        return cls(x, y, rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "ColorLabel":
        parts = text.split()
        if len(parts) != 2:
            raise ValueError(f"color must be two labels separated by a space: {text!r}")
        return cls.make(IndexLabel.parse(parts[0]), IndexLabel.parse(parts[1]), rank)

    @property
    def shape(self) -> str:
        if self.first.barred:
            return "bar-bar"
        if not self.second.barred:
            return "plain"
        return "cartan" if self.first.value == self.second.value else "mixed"

    @property
    def is_cartan(self) -> bool:
        return self.shape == "cartan"

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        """Ascending in the lexicographic order ``⪯`` (``1̲1̲`` smallest)."""
        (b1, v1), (b2, v2) = self.first.key, self.second.key
        return (-b1, -v1, -b2, -v2)

    def positions(self) -> Tuple[int, int]:
        return self.first.position(self.rank), self.second.position(self.rank)

    def labels(self) -> Tuple[IndexLabel, IndexLabel]:
        return self.first, self.second

    def has_label(self, lab: IndexLabel) -> bool:
        return lab in (self.first, self.second)

    def count_label(self, lab: IndexLabel) -> int:
        return (self.first == lab) + (self.second == lab)

    def __str__(self) -> str:
        return f"{self.first} {self.second}"


@dataclass(frozen=True)
class WeightVector:
    eps: Tuple[int, ...]
    delta: int = 0
    level: int = 0

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            self.delta + other.delta,
            self.level + other.level,
        )

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.eps), -self.delta, -self.level)


def pair_product(w1: WeightVector, w2: WeightVector) -> Tuple[int, int]:
    """Normalized pairing as the fraction (num, den); (eps_i|eps_j) = δ_ij / 2,
    (Λ0|δ) = 1, everything else zero."""
    num = sum(a * b for a, b in zip(w1.eps, w2.eps))
    num += 2 * (w1.level * w2.delta + w1.delta * w2.level)
    return num, 2


def all_colors(m: int) -> List[ColorLabel]:
    labels = [IndexLabel.from_position(p, m) for p in range(1, 2 * m + 1)]
    out = []
    for i, x in enumerate(labels):
        for y in labels[i:]:
            out.append(ColorLabel(x, y, m))
    out.sort(key=lambda c: c.sort_key)
    return out


def weight_of(c: ColorLabel) -> WeightVector:
    eps = [0] * c.rank
    if not c.is_cartan:
        for lab in c.labels():
            eps[lab.value - 1] += lab.sign
    return WeightVector(tuple(eps))


def grade_of(c: ColorLabel) -> int:
    """Grade for the minuscule coweight with value 1/2 on every eps_i."""
    if c.is_cartan:
        return 0
    return sum(weight_of(c).eps) // 2


def _row(lab: IndexLabel, m: int) -> int:
    return lab.value - 1 + (m if lab.barred else 0)


def color_matrix(c: ColorLabel) -> np.ndarray:
    m = c.rank
    x = np.zeros((2 * m, 2 * m), dtype=np.int64)
    a, b = c.first, c.second
    if c.shape == "plain":
        x[_row(a, m), _row(IndexLabel(b.value, True), m)] += 1
        if a != b:
            x[_row(b, m), _row(IndexLabel(a.value, True), m)] += 1
    elif c.shape == "bar-bar":
        x[_row(a, m), _row(IndexLabel(b.value), m)] += 1
        if a != b:
            x[_row(b, m), _row(IndexLabel(a.value), m)] += 1
    else:
        # a b̲ (incl. h_a): E_{a,b} - E_{b̲,a̲}
        x[a.value - 1, b.value - 1] += 1
        x[m + b.value - 1, m + a.value - 1] -= 1
    return x


def _probe(c: ColorLabel) -> Tuple[int, int]:
    """A matrix entry where ``c`` is nonzero and every other basis matrix vanishes."""
    m = c.rank
    a, b = c.first, c.second
    if c.shape == "plain":
        return _row(a, m), _row(IndexLabel(b.value, True), m)
    if c.shape == "bar-bar":
        return _row(a, m), _row(IndexLabel(b.value), m)
    return a.value - 1, b.value - 1


@dataclass(frozen=True, eq=False)
class LieAlgebraModel:
    rank: int
    basis: Tuple[ColorLabel, ...]
    index: Dict[ColorLabel, int]
    brackets: Tuple[Tuple[Combination, ...], ...]
    form: Tuple[Tuple[int, ...], ...]
    theta: int
    grading: Tuple[int, ...]
    weights: Tuple[Tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def color(self, text: str) -> ColorLabel:
        return ColorLabel.parse(text, self.rank)

    def idx(self, c) -> int:
        if isinstance(c, str):
            c = self.color(c)
        return self.index[c]

    def bracket(self, x, y) -> Dict[ColorLabel, int]:
        return {self.basis[k]: v for k, v in self.brackets[self.idx(x)][self.idx(y)]}

    def pairing(self, x, y) -> int:
        return self.form[self.idx(x)][self.idx(y)]

    def bracket_vec(self, u: Dict[int, int], v: Dict[int, int]) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.brackets[i][j]:
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def with_brackets(self, brackets) -> "LieAlgebraModel":
        """Copy with a replaced bracket table (used for negative controls)."""
        return LieAlgebraModel(self.rank, self.basis, self.index, brackets,
                               self.form, self.theta, self.grading, self.weights)


@lru_cache(maxsize=None)
def build_symplectic_model(m: int) -> LieAlgebraModel:
    if m < 1:
        raise ValueError("rank must be >= 1")
    basis = tuple(all_colors(m))
    index = {c: i for i, c in enumerate(basis)}
    mats = [color_matrix(c) for c in basis]
    probes = [_probe(c) for c in basis]

    def expand(x: np.ndarray) -> Combination:
        terms = []
        for i, (r, s) in enumerate(probes):
            v = int(x[r, s])
            if v:
                q, rem = divmod(v, int(mats[i][r, s]))
                assert rem == 0
                terms.append((i, q))
        back = sum((q * mats[i] for i, q in terms), np.zeros_like(x))
        if not np.array_equal(back, x):
            raise AssertionError("matrix not in the span of the basis")
        return tuple(terms)

    d = len(basis)
    brackets = tuple(
        tuple(expand(mats[i] @ mats[j] - mats[j] @ mats[i]) for j in range(d))
        for i in range(d)
    )
    form = tuple(tuple(int(np.trace(mats[i] @ mats[j])) for j in range(d)) for i in range(d))
    theta = index[ColorLabel(IndexLabel(1), IndexLabel(1), m)]
    grading = tuple(grade_of(c) for c in basis)
    weights = tuple(weight_of(c).eps for c in basis)
    return LieAlgebraModel(m, basis, index, brackets, form, theta, grading, weights)


def affine_bracket(model: LieAlgebraModel, x, i: int, y, j: int, level: int
                   ) -> Tuple[Dict[Tuple[ColorLabel, int], int], int]:
    """``[x(i), y(j)]`` with the central element evaluated at ``level``.

    Returns ``({(color, degree): coeff}, scalar)``.
    """
    terms = {(c, i + j): v for c, v in model.bracket(x, y).items()}
    scalar = i * model.pairing(x, y) * level if i + j == 0 else 0
    return terms, scalar


def embed_label(c: ColorLabel, rank: int) -> ColorLabel:
    if rank < c.rank:
        raise ValueError("target rank smaller than source rank")
    return ColorLabel(c.first, c.second, rank)


def embed_subalgebra(ell: int) -> Dict[ColorLabel, ColorLabel]:
    """Label-preserving inclusion of C_ell into C_{2 ell} on indices 1..ell."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return {c: embed_label(c, 2 * ell) for c in build_symplectic_model(ell).basis}


def dump_model(model: LieAlgebraModel) -> str:
    lines = [f"# sp({2 * model.rank}) model", f"rank {model.rank}", f"basis {model.dim}"]
    for i, c in enumerate(model.basis):
        lines.append(f"{i}\t{c}\tgrade {model.grading[i]:+d}\tweight {' '.join(map(str, model.weights[i]))}")
    lines.append("brackets")
    for i in range(model.dim):
        for j in range(i + 1, model.dim):
            terms = model.brackets[i][j]
            if terms:
                rhs = " + ".join(f"{v}*[{model.basis[k]}]" for k, v in terms)
                lines.append(f"[{model.basis[i]}] , [{model.basis[j]}] = {rhs}")
    lines.append("form")
    for i in range(model.dim):
        for j in range(i, model.dim):
            v = model.form[i][j]
            if v:
                lines.append(f"<{model.basis[i]} , {model.basis[j]}> = {v}")
    return "\n".join(lines) + "\n"


