"""Small helpers for vertex sets packed into Python ints (bit i <=> vertex i)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"vertex labels must be nonnegative, got {v}")
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


@lru_cache(maxsize=1 << 16)
def sort_key(mask: int) -> tuple[int, ...]:
    """Lexicographic key on the ascending member tuple."""
    return tuple(iter_bits(mask))
