"""Bitmask helpers for finite argument and atom sets.

A set over an ordered universe of size ``n`` is an ``int`` whose bit ``i`` is
set iff element ``i`` belongs to the set.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def indices(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def from_indices(idx: Iterable[int]) -> int:
    mask = 0
    for i in idx:
        mask |= 1 << i
    return mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def order_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Deterministic order: cardinality first, then lexicographic on indices."""
    return (popcount(mask), tuple(indices(mask)))


def minimize(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family, sorted by :func:`order_key`."""
    result: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(r & ~m == 0 for r in result):
            result.append(m)
    return sorted(result, key=order_key)


def maximize(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family, sorted by :func:`order_key`."""
    result: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & ~r == 0 for r in result):
            result.append(m)
    return sorted(result, key=order_key)
