"""Colored partitions on the generator arrays: admissibility, enumeration,
the relabeling onto the Feigin-Stoyanovsky array, ordering and I/O."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import kernels
from .arrays import ArrayKind, Generator, GeneratorArray, _position_cache
from .lie import ColorLabel, IndexLabel


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ColoredPartition:
    """Sparse multiset of generators; ``parts`` is sorted ascending in ``⪯``."""

    parts: Tuple[Tuple[Generator, int], ...]
    array: GeneratorArray

    @classmethod
    def from_counts(cls, counts: Mapping[Generator, int], array: GeneratorArray) -> "ColoredPartition":
        for g, m in counts.items():
            if m < 0:
                raise ValueError("multiplicities must be nonnegative")
            if m and not array.contains(g.color):
                raise ValueError(f"{g} not in the {array.kind.value} array")
        parts = tuple(sorted(((g, m) for g, m in counts.items() if m), key=lambda t: t[0].sort_key))
        return cls(parts, array)

    @classmethod
    def from_generators(cls, gens: Iterable[Generator], array: GeneratorArray) -> "ColoredPartition":
        counts: Dict[Generator, int] = {}
        for g in gens:
            counts[g] = counts.get(g, 0) + 1
        return cls.from_counts(counts, array)

    @classmethod
    def parse(cls, text: str, array: GeneratorArray) -> "ColoredPartition":
        """``"1 2̲(-1)^1, 2̲ 1̲(-3)^2"`` style; ``_`` may replace the bar."""
        counts: Dict[Generator, int] = {}
        for chunk in filter(None, (c.strip() for c in text.split(","))):
            body, _, mult = chunk.partition("^")
            color, _, deg = body.partition("(")
            g = Generator(ColorLabel.parse(color, array.rank), int(deg.rstrip(")")))
            counts[g] = counts.get(g, 0) + int(mult or 1)
        return cls.from_counts(counts, array)

    @property
    def counts(self) -> Dict[Generator, int]:
        return dict(self.parts)

    def multiplicity(self, g: Generator) -> int:
        return self.counts.get(g, 0)

    @property
    def degree(self) -> int:
        return sum(-g.degree * m for g, m in self.parts)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.parts)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return ", ".join(f"{g}^{m}" for g, m in self.parts)


def sort_monomial(pi: ColoredPartition) -> List[Generator]:
    out: List[Generator] = []
    for g, m in pi.parts:
        out.extend([g] * m)
    return out


def max_path_load(pi: ColoredPartition) -> int:
    rows, diags, mults = [], [], []
    for g, m in pi.parts:
        r, d = _position_cache(pi.array, g)
        rows.append(r)
        diags.append(d)
        mults.append(m)
    return kernels.max_path_load(rows, diags, mults, pi.array.nrows)


def is_admissible(pi: ColoredPartition, k: int) -> bool:
    return max_path_load(pi) <= k


def enumerate_admissible(ell: int, k: int, max_degree: int,
                         kind: ArrayKind = ArrayKind.FULL,
                         cap: Optional[int] = None) -> Dict[int, List[ColoredPartition]]:
    """All ``k Λ0``-admissible partitions of degrees ``1..max_degree``.

    Partitions are grown along ascending generator sequences; since loads only
    grow when parts are added, an inadmissible prefix prunes its subtree.
    Each degree's list comes out in lexicographic order of sorted sequences.
    """
    if k < 1:
        raise ValueError("level must be >= 1")
    arr = GeneratorArray(ell, kind)
    gens = arr.generators(max_degree)
    pos = [_position_cache(arr, g) for g in gens]
    absdeg = [-g.degree for g in gens]
    nrows = arr.nrows
    result: Dict[int, List[ColoredPartition]] = {n: [] for n in range(1, max_degree + 1)}

    def load(counts: Dict[int, int]) -> int:
        idx = list(counts)
        return kernels.max_path_load([pos[i][0] for i in idx], [pos[i][1] for i in idx],
                                     [counts[i] for i in idx], nrows)

    def grow(start: int, budget: int, total: int, counts: Dict[int, int]):
        for i in range(start, len(gens)):
            d = absdeg[i]
            if d > budget:
                continue
            counts[i] = counts.get(i, 0) + 1
            if load(counts) <= k:
                n = total + d
                bucket = result[n]
                bucket.append(ColoredPartition(
                    tuple((gens[j], counts[j]) for j in sorted(counts)), arr))
                if cap is not None and len(bucket) > cap:
                    raise ResourceCapExceeded(f"more than {cap} partitions of degree {n}")
                grow(i, budget - d, n, counts)
            counts[i] -= 1
            if not counts[i]:
                del counts[i]

    grow(0, max_degree, 0, {})
    for n in result:
        result[n].sort(key=lambda p: [g.sort_key for g in sort_monomial(p)])
    return result


def all_partitions(ell: int, degree: int, kind: ArrayKind = ArrayKind.FULL) -> List[ColoredPartition]:
    """Every colored partition of the given degree (no admissibility filter)."""
    arr = GeneratorArray(ell, kind)
    gens = arr.generators(degree)
    out: List[ColoredPartition] = []

    def grow(start: int, budget: int, chosen: List[Generator]):
        if budget == 0:
            out.append(ColoredPartition.from_generators(chosen, arr))
            return
        for i in range(start, len(gens)):
            d = -gens[i].degree
            if d <= budget:
                chosen.append(gens[i])
                grow(i, budget - d, chosen)
                chosen.pop()

    grow(0, degree, [])
    return out


def phi_color(c: ColorLabel, ell: int) -> ColorLabel:
    """``ab -> ab``, ``a b̲ -> a (2ℓ-b+1)``, ``a̲ b̲ -> (2ℓ-a+1)(2ℓ-b+1)``."""
    p, q = c.positions()
    return ColorLabel(IndexLabel(p), IndexLabel(q), 2 * ell)


def phi_bijection(pi: ColoredPartition) -> ColoredPartition:
    arr = pi.array
    if arr.kind is not ArrayKind.FULL:
        raise ValueError("phi_bijection expects a partition on the full array")
    target = GeneratorArray(arr.ell, ArrayKind.FS)
    return ColoredPartition.from_counts(
        {Generator(phi_color(g.color, arr.ell), g.degree): m for g, m in pi.parts}, target)


def phi_inverse(pi: ColoredPartition) -> ColoredPartition:
    arr = pi.array
    if arr.kind is not ArrayKind.FS:
        raise ValueError("phi_inverse expects a partition on the FS array")
    source = GeneratorArray(arr.ell, ArrayKind.FULL)
    return ColoredPartition.from_counts(
        {Generator(source.color_at(g.color.first.value, g.color.second.value), g.degree): m
         for g, m in pi.parts}, source)


# -- serialization -----------------------------------------------------------

def partition_records(pi: ColoredPartition) -> List[dict]:
    return [{"color": str(g.color), "degree": g.degree, "mult": m} for g, m in pi.parts]


def partition_from_records(records: Sequence[Mapping], array: GeneratorArray) -> ColoredPartition:
    counts: Dict[Generator, int] = {}
    for rec in records:
        g = Generator(ColorLabel.parse(rec["color"], array.rank), int(rec["degree"]))
        counts[g] = counts.get(g, 0) + int(rec["mult"])
    return ColoredPartition.from_counts(counts, array)


def partitions_to_json(by_degree: Mapping[int, Sequence[ColoredPartition]]) -> str:
    payload = {str(n): [partition_records(p) for p in parts] for n, parts in sorted(by_degree.items())}
    return json.dumps(payload, ensure_ascii=False, indent=1)


def counts_csv(by_degree: Mapping[int, Sequence[ColoredPartition]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", "count"])
    for n in sorted(by_degree):
        w.writerow([n, len(by_degree[n])])
    return buf.getvalue()


def counts_text(by_degree: Mapping[int, Sequence[ColoredPartition]]) -> str:
    return "".join(f"degree {n}: {len(by_degree[n])}\n" for n in sorted(by_degree))
