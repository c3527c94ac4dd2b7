"""Desk-scale basis check: admissible count = dim L(kΛ0)_n = rank of monomial vectors."""
from __future__ import annotations

from typing import Optional

from .arrays import ArrayKind
from .character import GradedDimTable, graded_dims
from .partitions import enumerate_admissible
from .pbw import VacuumQuotient


def verify_theorem(ell: int, k: int, max_degree: int, kind: ArrayKind = ArrayKind.FULL,
                   cap_slice_dim: Optional[int] = None, cap_partitions: Optional[int] = None,
                   with_oracle: bool = True) -> GradedDimTable:
    """Table of ambient size, relation rank, quotient dim, admissible count and rank.

    FULL: the module is L(kΛ0) for C_ℓ and the verdict needs
    count = dim = rank (and = the Freudenthal dims when ``with_oracle``).
    FS: the module is L(kΛ0) for C_{2ℓ} and the verdict needs rank = count.
    """
    rank = ell if kind is ArrayKind.FULL else 2 * ell
    quotient = VacuumQuotient.for_rank(rank, k, cap_slice_dim)
    adm = enumerate_admissible(ell, k, max_degree, kind, cap_partitions)
    ambient, rel, dims, counts, ranks = [], [], [], [], []
    ok = True
    notes = []
    for n in range(max_degree + 1):
        sl = quotient.slice(n)
        parts = adm.get(n, [])
        if n == 0:
            count, r = 1, 1
        else:
            res = quotient.rank_test(parts)
            count, r = res.count, res.rank
            if res.certificate is not None and not quotient.certificate_holds(parts, res.certificate):
                ok = False
                notes.append(f"degree {n}: dependency certificate does not check")
        ambient.append(len(sl.ambient_basis))
        rel.append(sl.relation_rank)
        dims.append(sl.quotient_dim)
        counts.append(count)
        ranks.append(r)
        ok &= r == count
        if kind is ArrayKind.FULL:
            ok &= count == sl.quotient_dim
    table = GradedDimTable(rank, k, max_degree, dims, ambient, rel, counts, ranks)
    if kind is ArrayKind.FULL and with_oracle:
        oracle = graded_dims(ell, k, max_degree).dims
        if oracle != dims:
            ok = False
            notes.append(f"oracle dims {oracle} differ from quotient dims {dims}")
        else:
            notes.append("oracle dims agree")
    table.verdict = ok
    table.notes = notes
    return table
