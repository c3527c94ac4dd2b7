"""Exact sparse row echelon forms over the integers (fraction-free)."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from . import kernels

SparseVec = Dict[int, int]


def content(vec: SparseVec) -> int:
    return reduce(gcd, vec.values(), 0)


def primitive(vec: SparseVec) -> SparseVec:
    """Divide by the content and make the leading entry positive."""
    if not vec:
        return vec
    g = content(vec)
    if vec[min(vec)] < 0:
        g = -g
    if g == 1:
        return vec
    return {c: v // g for c, v in vec.items()}


class EchelonBasis:
    """Incrementally built echelon basis of a row space.

    Rows are primitive integer vectors keyed by their leading column.
    """

    def __init__(self):
        self.pivots: Dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """A primitive representative of ``vec`` modulo the row space (up to scale)."""
        res, _ = kernels.reduce_row(vec, self.pivots)
        return primitive(res)

    def add(self, vec: SparseVec) -> bool:
        if not vec:
            return False
        res, _ = kernels.reduce_row(vec, self.pivots)
        if not res:
            return False
        res = primitive(res)
        self.pivots[min(res)] = res
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not kernels.reduce_row(vec, self.pivots)[0]

    def rows(self) -> List[SparseVec]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def tracked_rank(vectors: Sequence[SparseVec]) -> Tuple[int, Optional[List[Fraction]]]:
    """Rank of ``vectors`` and, when they are dependent, one rational
    dependency ``c`` with ``sum(c[i] * vectors[i]) == 0``.

    Each row carries its integer combination of the inputs, so the
    certificate is exact.
    """
    pivots: Dict[int, Tuple[SparseVec, SparseVec]] = {}
    certificate: Optional[List[Fraction]] = None
    for i, v in enumerate(vectors):
        vec = dict(v)
        combo = {i: 1}
        while vec:
            cols = [c for c in vec if c in pivots]
            if not cols:
                break
            col = min(cols)
            row, rcombo = pivots[col]
            p, a = row[col], vec[col]
            g = gcd(p, a)
            mp, ma = p // g, a // g
            vec = _axpy(mp, vec, -ma, row)
            combo = _axpy(mp, combo, -ma, rcombo)
        if vec:
            g = gcd(content(vec), content(combo))
            if vec[min(vec)] < 0:
                g = -g
            pivots[min(vec)] = ({c: x // g for c, x in vec.items()},
                                {c: x // g for c, x in combo.items()})
        elif certificate is None:
            certificate = [Fraction(0)] * len(vectors)
            g = content(combo)
            for j, x in combo.items():
                certificate[j] = Fraction(x, g)
    return len(pivots), certificate


def _axpy(a: int, x: SparseVec, b: int, y: SparseVec) -> SparseVec:
    out = {c: a * v for c, v in x.items()} if a != 1 else dict(x)
    for c, v in y.items():
        nv = out.get(c, 0) + b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def combine(vectors: Sequence[SparseVec], coeffs: Sequence[Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for v, c in zip(vectors, coeffs):
        if c:
            for col, x in v.items():
                out[col] = out.get(col, 0) + c * x
    return {c: x for c, x in out.items() if x}
