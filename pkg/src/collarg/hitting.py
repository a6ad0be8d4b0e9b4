"""Minimal hitting sets (transversals) of a finite family of bitmasks."""

from __future__ import annotations

from typing import Iterable

from . import bits


def minimal_hitting_sets(family: Iterable[int]) -> list[int]:
    """Berge's incremental transversal computation.

    Returns ``[]`` when the family contains the empty set (nothing hits it) and
    ``[0]`` for the empty family.
    """
    edges = bits.minimize(family)
    if edges and edges[0] == 0:
        return []
    transversals = [0]
    for edge in edges:
        grown = []
        for t in transversals:
            if t & edge:
                grown.append(t)
            else:
                grown.extend(t | (1 << i) for i in bits.indices(edge))
        transversals = bits.minimize(grown)
    return transversals
