"""Reduced homology over GF(2) and sphere counts from shellings."""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from ._bits import iter_bits, popcount, sort_key
from .complex import SimplicialComplex, all_faces, f_vector
from .oracle import ShellingOrder, restriction_sets

MAX_FACES = 1 << 16


class ComplexTooLarge(RuntimeError):
    pass


def _faces_by_dim(k: SimplicialComplex, limit: int = MAX_FACES) -> dict[int, list[int]]:
    faces = all_faces(k)
    if len(faces) > limit:
        raise ComplexTooLarge(f"{len(faces)} faces exceeds the limit of {limit}")
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(popcount(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=sort_key)
    return by_dim


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a GF(2) matrix given as int-packed rows."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                break
            row ^= p
    return len(pivots)


def _boundary_rank(by_dim: dict[int, list[int]], d: int) -> int:
    # boundary from dimension d to d - 1; d = 0 is the augmentation onto the empty face
    if d not in by_dim or d - 1 not in by_dim:
        return 0
    index = {f: i for i, f in enumerate(by_dim[d - 1])}
    rows = []
    for f in by_dim[d]:
        row = 0
        for x in iter_bits(f):
            row |= 1 << index[f & ~(1 << x)]
        rows.append(row)
    return gf2_rank(rows)


def boundary_rank(k: SimplicialComplex, d: int, limit: int = MAX_FACES) -> int:
    return _boundary_rank(_faces_by_dim(k, limit), d)


class BettiVector:
    """Reduced Betti numbers indexed by dimension -1 .. dim."""

    def __init__(self, values: Iterable[int]):
        self.values = tuple(values)

    def __getitem__(self, d: int) -> int:
        i = d + 1
        return self.values[i] if 0 <= i < len(self.values) else 0

    def as_dict(self, nonzero: bool = True) -> dict[int, int]:
        return {i - 1: b for i, b in enumerate(self.values) if b or not nonzero}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiVector):
            return self.as_dict() == other.as_dict()
        return NotImplemented

    def __repr__(self) -> str:
        return f"BettiVector({self.as_dict(nonzero=False)})"


def reduced_betti(k: SimplicialComplex, limit: int = MAX_FACES) -> BettiVector:
    if k.is_void:
        return BettiVector(())
    by_dim = _faces_by_dim(k, limit)
    top = k.dim
    ranks = {d: _boundary_rank(by_dim, d) for d in range(0, top + 2)}
    values = []
    for d in range(-1, top + 1):
        n_d = len(by_dim.get(d, ()))
        values.append(n_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return BettiVector(values)


def euler_characteristic(k: SimplicialComplex) -> int:
    """Unreduced Euler characteristic from face counts."""
    return sum((-1) ** i * n for i, n in enumerate(f_vector(k)))


def unreduced_betti(k: SimplicialComplex) -> list[int]:
    b = reduced_betti(k)
    vals = [b[d] for d in range(0, (k.dim or 0) + 1)] if not k.is_void else []
    if vals and k.dim >= 0:
        vals[0] += 1
    return vals


def sphere_counts(k: SimplicialComplex, order: ShellingOrder | Iterable[Iterable[int]]) -> dict[int, int]:
    """Number of facets F with R(F) = F, bucketed by dim F."""
    facets = list(order.facets if isinstance(order, ShellingOrder) else order)
    restr = restriction_sets(k, facets)
    counts = Counter(len(f) - 1 for f, rf in zip(facets, restr) if frozenset(f) == rf)
    return dict(sorted(counts.items()))
