"""Graded dimensions of L(kΛ0) for C_ℓ^(1) by the affine Freudenthal recursion.

Weights are ``kΛ0 + μ - nδ`` with ``μ`` in ε-coordinates.  The form has
``(ε_i|ε_j) = δ_ij / 2`` (so ``(θ|θ) = 2``); below everything is doubled to
stay in integers.  Roots: ``±ε_i±ε_j``, ``±2ε_i`` at every level ``m`` of δ,
and imaginary ``mδ`` with multiplicity ℓ.
"""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from .partitions import ResourceCapExceeded

Weight = Tuple[int, ...]

DEFAULT_WEIGHT_CAP = int(os.environ.get("VACUUM_BASIS_CAP_WEIGHTS", "2000000"))


def finite_roots(ell: int) -> List[Weight]:
    out = []
    for i in range(ell):
        for s in (1, -1):
            v = [0] * ell
            v[i] = 2 * s
            out.append(tuple(v))
        for j in range(i + 1, ell):
            for s, t in product((1, -1), repeat=2):
                v = [0] * ell
                v[i], v[j] = s, t
                out.append(tuple(v))
    return out


def _is_positive(alpha: Weight) -> bool:
    for x in alpha:
        if x:
            return x > 0
    return False


def _dot(x: Weight, y: Weight) -> int:
    return sum(a * b for a, b in zip(x, y))


def _ball(ell: int, radius2: int) -> List[Weight]:
    """Root-lattice points (even coordinate sum) with sum of squares <= radius2."""
    r = int(radius2 ** 0.5)
    out = []

    def grow(prefix, budget):
        if len(prefix) == ell:
            if sum(prefix) % 2 == 0:
                out.append(tuple(prefix))
            return
        for x in range(-r, r + 1):
            if x * x <= budget:
                grow(prefix + [x], budget - x * x)

    grow([], radius2)
    return out


def weight_multiplicities(ell: int, k: int, max_degree: int,
                          cap: Optional[int] = None) -> Dict[Tuple[int, Weight], int]:
    """Nonzero multiplicities ``{(n, μ): mult}`` of L(kΛ0) for ``n <= max_degree``."""
    if ell < 1 or k < 1 or max_degree < 0:
        raise ValueError("need ell >= 1, k >= 1, max_degree >= 0")
    cap = DEFAULT_WEIGHT_CAP if cap is None else cap
    h = ell + 1
    rho = tuple(ell - i for i in range(ell))
    roots = finite_roots(ell)
    positive = [a for a in roots if _is_positive(a)]
    mult: Dict[Tuple[int, Weight], int] = {(0, (0,) * ell): 1}

    def get(n: int, mu: Weight) -> int:
        return mult.get((n, mu), 0)

    for n in range(0, max_degree + 1):
        cands = _ball(ell, 4 * k * n)
        if len(cands) > cap:
            raise ResourceCapExceeded(f"{len(cands)} candidate weights at degree {n}")
        cands.sort(key=lambda mu: -_dot(mu, rho))
        for mu in cands:
            if n == 0 and not any(mu):
                continue
            lhs = 4 * n * (k + h) - _dot(mu, mu) - 2 * _dot(mu, rho)
            if lhs <= 0:
                continue
            rhs = 0
            # real roots α + mδ: m = 0 needs α > 0, m >= 1 takes all α
            for m in range(0, n + 1):
                for alpha in (positive if m == 0 else roots):
                    aa = _dot(alpha, alpha)
                    base = 2 * k * m + _dot(mu, alpha)
                    j = 1
                    while n - j * m >= 0:
                        nu = tuple(x + j * y for x, y in zip(mu, alpha))
                        if _dot(nu, nu) > 4 * k * (n - j * m):
                            break
                        rhs += (base + j * aa) * get(n - j * m, nu)
                        j += 1
                if m >= 1:
                    for j in range(1, n // m + 1):
                        rhs += ell * 2 * k * m * get(n - j * m, mu)
            value, rem = divmod(2 * rhs, lhs)
            if rem:
                raise ArithmeticError(f"non-integral multiplicity at n={n}, mu={mu}")
            if value:
                mult[(n, mu)] = value
    return mult


@dataclass
class GradedDimTable:
    """Per-degree record; columns a producer does not fill stay ``None``."""

    ell: int
    level: int
    max_degree: int
    dims: List[int]
    ambient: Optional[List[int]] = None
    relation_rank: Optional[List[int]] = None
    admissible: Optional[List[int]] = None
    rank: Optional[List[int]] = None
    verdict: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    COLUMNS = ("degree", "ambient", "relation_rank", "dim", "admissible", "rank")

    def rows(self) -> List[List[Optional[int]]]:
        cols = [self.ambient, self.relation_rank, self.dims, self.admissible, self.rank]
        return [[n] + [c[n] if c is not None else None for c in cols]
                for n in range(self.max_degree + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.COLUMNS)
        for row in self.rows():
            w.writerow(["" if x is None else x for x in row])
        return buf.getvalue()

    def to_text(self) -> str:
        head = f"ell={self.ell} level={self.level} max_degree={self.max_degree}\n"
        width = [max(len(c), 6) for c in self.COLUMNS]
        lines = ["  ".join(c.rjust(w) for c, w in zip(self.COLUMNS, width))]
        for row in self.rows():
            lines.append("  ".join(("-" if x is None else str(x)).rjust(w) for x, w in zip(row, width)))
        tail = ""
        if self.verdict is not None:
            tail = f"verdict: {'PASS' if self.verdict else 'FAIL'}\n"
        return head + "\n".join(lines) + "\n" + "".join(n + "\n" for n in self.notes) + tail

    def to_structured(self) -> str:
        payload = {
            "ell": self.ell, "level": self.level, "max_degree": self.max_degree,
            "rows": [dict(zip(self.COLUMNS, row)) for row in self.rows()],
            "verdict": None if self.verdict is None else ("PASS" if self.verdict else "FAIL"),
            "notes": self.notes,
        }
        return json.dumps(payload, indent=1) + "\n"

    def emit(self, fmt: str) -> str:
        return {"csv": self.to_csv, "text": self.to_text, "structured": self.to_structured}[fmt]()


def graded_dims(ell: int, k: int, max_degree: int, cap: Optional[int] = None) -> GradedDimTable:
    mult = weight_multiplicities(ell, k, max_degree, cap)
    dims = [0] * (max_degree + 1)
    for (n, _), m in mult.items():
        dims[n] += m
    return GradedDimTable(ell, k, max_degree, dims)
