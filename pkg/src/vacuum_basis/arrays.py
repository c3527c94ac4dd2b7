"""The generator arrays of negative modes, rotated by 45 degrees.

Each t-degree contributes one triangle of colors; consecutive triangles are
glued along the ``x 1̲`` side of degree -n and the ``1 x`` side of degree
-n-1.  After rotation the array is a strip with ``2 ell + 1`` rows in which
node ``(r, d)`` is adjacent to ``(r+1, d)`` and ``(r+1, d+1)``.

With ``p <= q`` the positions of a color's two labels in the triangle and
``j = (n - 1) // 2`` for the degree ``-n``::

    n odd:   row = 2 ell - (q - p),   diag = 2 ell j + p - 1
    n even:  row = q - p,             diag = 2 ell j + q - 1

The top row therefore starts ``11(-2), 22(-2), ...``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from .lie import ColorLabel, IndexLabel, all_colors


class ArrayKind(enum.Enum):
    FULL = "full"
    FS = "fs"


@dataclass(frozen=True)
class Generator:
    """``color ⊗ t^degree``; ordering is the PBW order ``⪯``."""

    color: ColorLabel
    degree: int

    def __post_init__(self):
        if self.degree >= 0:
            raise ValueError("generators of the array have negative degree")

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "Generator") -> bool:
        return self.sort_key <= other.sort_key

    def __gt__(self, other: "Generator") -> bool:
        return self.sort_key > other.sort_key

    def __ge__(self, other: "Generator") -> bool:
        return self.sort_key >= other.sort_key

    @property
    def sort_key(self):
        return (self.degree, self.color.sort_key)

    def __str__(self) -> str:
        return f"{self.color}({self.degree})"


@dataclass(frozen=True)
class ArrayPosition:
    row: int
    diag: int


DownwardPath = Tuple[ArrayPosition, ...]


@dataclass(frozen=True)
class GeneratorArray:
    """``FULL``: all colors of C_ell.  ``FS``: colors ``ij`` (i <= j) of C_{2 ell}."""

    ell: int
    kind: ArrayKind = ArrayKind.FULL

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")

    @property
    def side(self) -> int:
        return 2 * self.ell

    @property
    def nrows(self) -> int:
        return 2 * self.ell + 1

    @property
    def rank(self) -> int:
        return self.ell if self.kind is ArrayKind.FULL else 2 * self.ell

    def colors(self) -> List[ColorLabel]:
        if self.kind is ArrayKind.FULL:
            return all_colors(self.ell)
        return [c for c in all_colors(2 * self.ell) if c.shape == "plain"]

    def contains(self, c: ColorLabel) -> bool:
        if c.rank != self.rank:
            return False
        return self.kind is ArrayKind.FULL or c.shape == "plain"

    def color_positions(self, c: ColorLabel) -> Tuple[int, int]:
        if not self.contains(c):
            raise ValueError(f"color {c} is not in the {self.kind.value} array for ell={self.ell}")
        if self.kind is ArrayKind.FULL:
            return c.positions()
        return c.first.value, c.second.value

    def color_at(self, p: int, q: int) -> ColorLabel:
        if self.kind is ArrayKind.FULL:
            return ColorLabel(IndexLabel.from_position(p, self.ell),
                              IndexLabel.from_position(q, self.ell), self.ell)
        return ColorLabel(IndexLabel(p), IndexLabel(q), 2 * self.ell)

    def generators(self, max_abs_degree: int) -> List[Generator]:
        """All generators with ``|degree| <= max_abs_degree`` in ascending order."""
        out = [Generator(c, -n) for n in range(1, max_abs_degree + 1) for c in self.colors()]
        out.sort()
        return out


def array_position(g: Generator, arr: GeneratorArray) -> ArrayPosition:
    p, q = arr.color_positions(g.color)
    n = -g.degree
    j = (n - 1) // 2
    L = arr.side
    if n % 2:
        return ArrayPosition(L - (q - p), L * j + p - 1)
    return ArrayPosition(q - p, L * j + q - 1)


def generator_at(pos: ArrayPosition, arr: GeneratorArray) -> Generator:
    L = arr.side
    r, d = pos.row, pos.diag
    if not (0 <= r <= L and d >= 0):
        raise ValueError(f"{pos} is outside the array")
    j, t = divmod(d, L)
    t += 1
    if t <= r:
        p, q, n = t, t + L - r, 2 * j + 1
    else:
        p, q, n = t - r, t, 2 * j + 2
    return Generator(arr.color_at(p, q), -n)


@lru_cache(maxsize=None)
def _position_cache(arr: GeneratorArray, g: Generator) -> Tuple[int, int]:
    pos = array_position(g, arr)
    return pos.row, pos.diag


def downward_paths_through(p: ArrayPosition, arr: GeneratorArray) -> List[DownwardPath]:
    if p.row != 0:
        raise ValueError("paths start in the top row")

    def walk(node: ArrayPosition) -> Iterator[DownwardPath]:
        if node.row == arr.nrows - 1:
            yield (node,)
            return
        for dd in (0, 1):
            for rest in walk(ArrayPosition(node.row + 1, node.diag + dd)):
                yield (node,) + rest

    return list(walk(p))


def top_row_points(arr: GeneratorArray, count: int) -> List[ArrayPosition]:
    return [ArrayPosition(0, d) for d in range(count)]
