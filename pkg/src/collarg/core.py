"""Collective argumentation theories: attack relations between sets of arguments.

A :class:`Theory` stores a finite base of generator pairs ``(A, B)``. The
attack relation it denotes is the upward closure of the base::

    attacks(G, D)  iff  some (A, B) in base has A <= G and B <= D

so monotonicity in both positions holds by construction. The base is kept
subsumption-normalized, which makes it the set of minimal attacking pairs;
two theories over the same universe denote the same relation exactly when
their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import bits
from .errors import TheoryError

ArgSetLike = Iterable[str]


@dataclass(frozen=True)
class Argument:
    id: int
    name: str


@dataclass(frozen=True)
class AttackPair:
    source: frozenset
    target: frozenset

    def __str__(self) -> str:
        return f"{set(self.source) or '{}'} -> {set(self.target) or '{}'}"


@dataclass(frozen=True)
class PStablePair:
    lower: frozenset
    upper: frozenset


def normalize_base(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Drop duplicate and subsumed generator pairs; return them in canonical order."""
    kept: list[tuple[int, int]] = []
    for a, b in sorted(set(pairs), key=lambda p: bits.popcount(p[0]) + bits.popcount(p[1])):
        if not any(a2 & ~a == 0 and b2 & ~b == 0 for a2, b2 in kept):
            kept.append((a, b))
    return tuple(sorted(kept, key=pair_key))


def pair_key(pair: tuple[int, int]):
    return (bits.order_key(pair[0]), bits.order_key(pair[1]))


class Theory:
    """Immutable collective argumentation theory over a finite, ordered universe."""

    __slots__ = ("universe", "base", "_index")

    def __init__(self, universe: Sequence[str], base: Iterable[tuple[int, int]] = ()):
        universe = tuple(universe)
        index = {}
        for i, name in enumerate(universe):
            if name in index:
                raise TheoryError(f"duplicate argument name {name!r}")
            index[name] = i
        full = bits.full(len(universe))
        base = list(base)
        for a, b in base:
            if (a | b) & ~full:
                raise TheoryError("attack pair mentions an argument outside the universe")
        self.universe = universe
        self._index = index
        self.base = normalize_base(base)

    @property
    def size(self) -> int:
        return len(self.universe)

    @property
    def full_mask(self) -> int:
        return bits.full(len(self.universe))

    @property
    def arguments(self) -> list[Argument]:
        return [Argument(i, n) for i, n in enumerate(self.universe)]

    def mask(self, names: Union[ArgSetLike, int]) -> int:
        if isinstance(names, int):
            if names & ~self.full_mask:
                raise TheoryError("argument set outside the universe")
            return names
        if isinstance(names, str):
            names = [names]
        m = 0
        for n in names:
            try:
                m |= 1 << self._index[n]
            except KeyError:
                raise TheoryError(f"unknown argument {n!r}") from None
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(self.universe[i] for i in bits.indices(mask))

    def sorted_names(self, mask: int) -> list[str]:
        return [self.universe[i] for i in bits.indices(mask)]

    def pairs(self) -> list[AttackPair]:
        return [AttackPair(self.names(a), self.names(b)) for a, b in self.base]

    def attacks_mask(self, gamma: int, delta: int) -> bool:
        for a, b in self.base:
            if a & ~gamma == 0 and b & ~delta == 0:
                return True
        return False

    def triggered_targets(self, gamma: int) -> list[int]:
        return [b for a, b in self.base if a & ~gamma == 0]

    def __eq__(self, other):
        if not isinstance(other, Theory):
            return NotImplemented
        return self.universe == other.universe and self.base == other.base

    def __hash__(self):
        return hash((self.universe, self.base))

    def __repr__(self):
        pairs = ", ".join(
            f"{{{','.join(self.sorted_names(a))}}}->{{{','.join(self.sorted_names(b))}}}"
            for a, b in self.base
        )
        return f"Theory(universe={list(self.universe)}, base=[{pairs}])"


def new_theory(universe: Sequence[str], generators: Iterable = ()) -> Theory:
    """Build a theory from argument names and generator pairs.

    Each generator is an :class:`AttackPair` or a ``(source, target)`` tuple of
    name collections. Subsumed generators are discarded; the denoted relation
    is unchanged.
    """
    shell = Theory(universe)
    masks = []
    for g in generators:
        if isinstance(g, AttackPair):
            src, tgt = g.source, g.target
        else:
            src, tgt = g
        masks.append((shell.mask(src), shell.mask(tgt)))
    return Theory(shell.universe, masks)


def attacks(t, gamma, delta) -> bool:
    return t.attacks_mask(t.mask(gamma), t.mask(delta))


def attacks_positively(t: Theory, gamma, delta) -> bool:
    """``gamma, delta`` attacks ``delta``: the proponent borrows the opponent's arguments."""
    g, d = t.mask(gamma), t.mask(delta)
    return t.attacks_mask(g | d, d)


def attacks_negatively(t: Theory, gamma, delta) -> bool:
    """``gamma`` attacks ``gamma, delta``."""
    g, d = t.mask(gamma), t.mask(delta)
    return t.attacks_mask(g, g | d)


def is_conflict_free(t: Theory, gamma) -> bool:
    g = t.mask(gamma)
    return not t.attacks_mask(g, g)


# -- closures ---------------------------------------------------------------


def negative_closure(t: Theory) -> Theory:
    """Least negative theory containing ``t``.

    Every pair ``(A, B)`` contributes ``(A | S, B - S)`` for each ``S <= B``.
    Transferring ``S1`` and then ``S2`` is the same as transferring ``S1 | S2``,
    so one pass is already closed under Importation.
    """
    out = []
    for a, b in t.base:
        for s in bits.submasks(b):
            out.append((a | s, b & ~s))
    return Theory(t.universe, out)


def positive_closure(t: Theory) -> Theory:
    """Least positive theory containing ``t``; ``(A - S, B | S)`` for each ``S <= A``."""
    out = []
    for a, b in t.base:
        for s in bits.submasks(a):
            out.append((a & ~s, b | s))
    return Theory(t.universe, out)


def closure(t: Theory, kind: str) -> Theory:
    if kind == "plain":
        return t
    if kind == "positive":
        return positive_closure(t)
    if kind == "negative":
        return negative_closure(t)
    raise ValueError(f"unknown attack kind {kind!r}")


def derivable_in(t: Theory, other: Theory) -> bool:
    """Every generator of ``t`` is an attack of ``other``."""
    return all(other.attacks_mask(a, b) for a, b in t.base)


def same_relation(t1: Theory, t2: Theory) -> bool:
    if t1.universe != t2.universe:
        return False
    return derivable_in(t1, t2) and derivable_in(t2, t1)


# -- structural properties ----------------------------------------------------


def is_affirmative(t: Theory) -> bool:
    return all(b != 0 for _, b in t.base)


def is_local(t: Theory) -> bool:
    # Splitting a generator's target into singletons is enough: any attack on a
    # union is witnessed by a generator whose target lies inside the union.
    for a, b in t.base:
        if t.attacks_mask(a, 0):
            continue
        if not any(t.attacks_mask(a, 1 << i) for i in bits.indices(b)):
            return False
    return True


def is_semi_local(t: Theory) -> bool:
    """If G attacks D,F then G,D attacks F or G,F attacks D."""
    for a, b in t.base:
        for b1 in bits.submasks(b):
            b2 = b & ~b1
            if not (t.attacks_mask(a | b1, b2) or t.attacks_mask(a | b2, b1)):
                return False
    return True


def is_positive(t: Theory) -> bool:
    return derivable_in(positive_closure(t), t)


def is_negative(t: Theory) -> bool:
    return derivable_in(negative_closure(t), t)


def is_normal(t: Theory) -> bool:
    return is_affirmative(t) and is_local(t)


def is_l_positive(t: Theory) -> bool:
    return is_positive(t) and is_semi_local(t)


def properties(t: Theory) -> dict[str, bool]:
    return {
        "affirmative": is_affirmative(t),
        "local": is_local(t),
        "semi_local": is_semi_local(t),
        "positive": is_positive(t),
        "negative": is_negative(t),
        "normal": is_normal(t),
    }
