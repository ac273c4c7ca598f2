"""Facet-based simplicial complexes.

A complex is stored as its facet antichain, each facet packed into an int
bit mask. The vertex set is the union of the facets; there is no separate
ground set. Two degenerate complexes are distinguished:

* the void complex has no faces at all (no facets),
* the empty complex ``{∅}`` has exactly one facet, the empty set.
"""

from __future__ import annotations

import json
from typing import Iterable

from ._bits import from_mask, iter_bits, popcount, sort_key, to_mask


class ComplexFormatError(ValueError):
    pass


class SimplicialComplex:
    __slots__ = ("_masks", "_support")

    def __init__(self, masks: tuple[int, ...]):
        # Trusted constructor: masks must already be a sorted antichain.
        self._masks = masks
        support = 0
        for m in masks:
            support |= m
        self._support = support

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> SimplicialComplex:
        return cls(_normalize(masks))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def facets(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self._masks]

    @property
    def vertices(self) -> frozenset[int]:
        return from_mask(self._support)

    @property
    def support_mask(self) -> int:
        return self._support

    @property
    def kind(self) -> str:
        if not self._masks:
            return "void"
        if self._masks == (0,):
            return "empty"
        return "general"

    @property
    def is_void(self) -> bool:
        return not self._masks

    @property
    def dim(self) -> int | None:
        """Dimension, or None for the void complex."""
        if not self._masks:
            return None
        return max(popcount(m) for m in self._masks) - 1

    def __len__(self) -> int:
        return len(self._masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        return "SimplicialComplex(" + ", ".join(_fmt(m) for m in self._masks) + ")"


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, iter_bits(mask))) + "}"


def _normalize(masks: Iterable[int]) -> tuple[int, ...]:
    # Drop duplicates and dominated sets; larger sets first so a set is only
    # compared against possible supersets already kept.
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    kept.sort(key=sort_key)
    return tuple(kept)


VOID = SimplicialComplex(())
EMPTY = SimplicialComplex((0,))


def from_facets(candidates: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_masks(to_mask(c) for c in candidates)


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex((to_mask(vertices),))


def _face_mask(f) -> int:
    return f if isinstance(f, int) else to_mask(f)


def is_face(k: SimplicialComplex, f) -> bool:
    f = _face_mask(f)
    return any(f & m == f for m in k.masks)


def _require_face(k: SimplicialComplex, f: int) -> None:
    if not is_face(k, f):
        raise ValueError(f"{_fmt(f)} is not a face of {k!r}")


def link(k: SimplicialComplex, f) -> SimplicialComplex:
    f = _face_mask(f)
    _require_face(k, f)
    return SimplicialComplex.from_masks(m & ~f for m in k.masks if m & f == f)


def deletion(k: SimplicialComplex, f) -> SimplicialComplex:
    """All faces of k disjoint from f."""
    f = _face_mask(f)
    _require_face(k, f)
    return SimplicialComplex.from_masks(m & ~f for m in k.masks)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    if k1.support_mask & k2.support_mask:
        raise ValueError("join needs complexes on disjoint vertex sets")
    return SimplicialComplex.from_masks(a | b for a in k1.masks for b in k2.masks)


def join_all(ks: Iterable[SimplicialComplex]) -> SimplicialComplex:
    out = EMPTY
    for k in ks:
        out = join(out, k)
    return out


def restrict(k: SimplicialComplex, vertices) -> SimplicialComplex:
    """Induced subcomplex on a vertex subset."""
    w = _face_mask(vertices)
    return SimplicialComplex.from_masks(m & w for m in k.masks)


def is_simplex(k: SimplicialComplex) -> bool:
    return len(k.masks) <= 1


def all_faces(k: SimplicialComplex) -> set[int]:
    """Every face of k as a bit mask (exponential in facet size)."""
    faces: set[int] = set()
    for m in k.masks:
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return faces


def f_vector(k: SimplicialComplex) -> list[int]:
    counts: dict[int, int] = {}
    for face in all_faces(k):
        d = popcount(face) - 1
        if d >= 0:
            counts[d] = counts.get(d, 0) + 1
    return [counts.get(i, 0) for i in range(max(counts) + 1)] if counts else []


def canonical_key(k: SimplicialComplex) -> tuple[int, ...]:
    return k.masks


# -- document format ----------------------------------------------------------

def complex_to_dict(k: SimplicialComplex) -> dict:
    return {
        "vertices": sorted(k.vertices),
        "facets": None if k.is_void else [sorted(f) for f in k.facets],
    }


def complex_from_dict(doc: dict) -> SimplicialComplex:
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ComplexFormatError("complex document needs a 'facets' field")
    facets = doc["facets"]
    if facets is None:
        k = VOID
    else:
        try:
            k = from_facets([int(v) for v in f] for f in facets)
        except (TypeError, ValueError) as exc:
            raise ComplexFormatError(f"bad facet list: {exc}") from None
    if "vertices" in doc and sorted(doc["vertices"]) != sorted(k.vertices):
        raise ComplexFormatError("'vertices' does not match the union of facets")
    return k


def dumps_complex(k: SimplicialComplex) -> str:
    """JSON with one facet per line."""
    doc = complex_to_dict(k)
    facets = doc["facets"]
    if facets is None or len(facets) <= 1:
        body = json.dumps(facets)
    else:
        body = "[\n" + ",\n".join("  " + json.dumps(f) for f in facets) + "\n ]"
    return '{\n "vertices": ' + json.dumps(doc["vertices"]) + ',\n "facets": ' + body + "\n}\n"


def loads_complex(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(str(exc)) from None
    return complex_from_dict(doc)
