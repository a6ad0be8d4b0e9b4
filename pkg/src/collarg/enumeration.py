"""Allowable sets, stable sets, p-stable pairs and admissible sets.

Enumeration entry points scan all subsets of the universe, vectorized with
numpy in chunks. Results are sorted by cardinality, then lexicographically by
argument index.
"""

from __future__ import annotations

import warnings

import numpy as np

from . import bits
from .core import PStablePair, Theory, closure
from .errors import CapExceeded, TheoryError
from .hitting import minimal_hitting_sets

MAX_ARGS = 20
WARN_ARGS = 14
KINDS = ("plain", "positive", "negative")
_CHUNK = 1 << 13


def check_cap(n: int, max_args: int = MAX_ARGS) -> None:
    if n > max_args:
        raise CapExceeded(f"universe of {n} arguments exceeds the enumeration cap of {max_args}")
    if n > WARN_ARGS:
        warnings.warn(
            f"enumerating 2^{n} argument sets may not terminate promptly", RuntimeWarning, stacklevel=3
        )


def _chunks(n: int):
    total = 1 << n
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(total, start + _CHUNK), dtype=np.int64)


def _base_arrays(t: Theory):
    a = np.array([p[0] for p in t.base], dtype=np.int64)
    b = np.array([p[1] for p in t.base], dtype=np.int64)
    return a, b


# -- allowability -------------------------------------------------------------


def maximal_allowable_masks(t: Theory, gamma: int) -> list[int]:
    # D is allowable iff its complement hits every target triggered by gamma.
    hs = minimal_hitting_sets(t.triggered_targets(gamma))
    return sorted((t.full_mask & ~h for h in hs), key=bits.order_key)


def maximal_allowable(t: Theory, gamma) -> list[frozenset]:
    """Maximal argument sets not attacked by ``gamma``; empty if ``gamma`` attacks the empty set."""
    return [t.names(m) for m in maximal_allowable_masks(t, t.mask(gamma))]


def allowed_additions(t: Theory, source: int, context: int) -> int:
    """Arguments ``x`` such that ``source`` does not attack ``context + {x}``."""
    out = 0
    for i in range(t.size):
        if not t.attacks_mask(source, context | (1 << i)):
            out |= 1 << i
    return out


# -- stable sets --------------------------------------------------------------


def stable_fixpoint_holds(t: Theory, gamma: int) -> bool:
    """The bare fixpoint equation ``G = {x | G does not attack G, x}``.

    It also accepts the empty set when the empty set attacks itself, which is
    not maximal in anything; :func:`is_stable` adds conflict-freeness.
    """
    return allowed_additions(t, gamma, gamma) == gamma


def _is_stable_mask(t: Theory, g: int) -> bool:
    return not t.attacks_mask(g, g) and stable_fixpoint_holds(t, g)


def is_stable(t: Theory, gamma) -> bool:
    return _is_stable_mask(t, t.mask(gamma))


def stable_masks(t: Theory, max_args: int = MAX_ARGS) -> list[int]:
    check_cap(t.size, max_args)
    a, b = _base_arrays(t)
    full = t.full_mask
    out: list[int] = []
    for g in _chunks(t.size):
        col = g[:, None]
        trig = (a & ~col) == 0
        rest = b & ~col
        conflict = (trig & (rest == 0)).any(axis=1)
        single = trig & (rest != 0) & ((rest & (rest - 1)) == 0)
        refuted = np.bitwise_or.reduce(np.where(single, rest, 0), axis=1)
        ok = ~conflict & (refuted == (full & ~g))
        out.extend(int(x) for x in g[ok])
    return sorted(out, key=bits.order_key)


def stable_sets(t: Theory, max_args: int = MAX_ARGS) -> list[frozenset]:
    return [t.names(m) for m in stable_masks(t, max_args)]


# -- p-stable pairs -----------------------------------------------------------


def _is_p_stable_mask(t: Theory, lower: int, upper: int) -> bool:
    return (
        not t.attacks_mask(lower, upper)
        and not t.attacks_mask(upper, lower)
        and allowed_additions(t, lower, upper) == upper
        and allowed_additions(t, upper, lower) == lower
    )


def is_p_stable(t: Theory, pair) -> bool:
    """Test a :class:`PStablePair` or ``(lower, upper)`` tuple."""
    if isinstance(pair, PStablePair):
        lower, upper = pair.lower, pair.upper
    else:
        lower, upper = pair
    lo, up = t.mask(lower), t.mask(upper)
    if lo & ~up:
        raise TheoryError("lower set of a p-stable pair must be included in the upper set")
    return _is_p_stable_mask(t, lo, up)


def p_stable_masks(t: Theory, max_args: int = MAX_ARGS) -> list[tuple[int, int]]:
    # The lower set must be maximal-allowable for the upper one, so candidates
    # come from the hitting-set enumeration rather than a 3^n scan.
    check_cap(t.size, max_args)
    out = []
    for upper in range(1 << t.size):
        for lower in maximal_allowable_masks(t, upper):
            if lower & ~upper == 0 and _is_p_stable_mask(t, lower, upper):
                out.append((lower, upper))
    return sorted(out, key=lambda p: (bits.order_key(p[0]), bits.order_key(p[1])))


def p_stable_pairs(t: Theory, max_args: int = MAX_ARGS) -> list[PStablePair]:
    return [PStablePair(t.names(lo), t.names(up)) for lo, up in p_stable_masks(t, max_args)]


# -- admissibility ------------------------------------------------------------


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown admissibility kind {kind!r}; expected one of {KINDS}")


def _is_admissible_mask(t: Theory, g: int, kind: str) -> bool:
    # Positive/negative attacks are the plain attacks of the respective
    # closure; self-attack is the same in all three relations.
    c = closure(t, kind)
    if c.attacks_mask(g, g):
        return False
    # Counterattack is monotone in its target, so minimal attackers suffice.
    return all(c.attacks_mask(g, a) for a, b in c.base if b & ~g == 0)


def is_admissible(t: Theory, gamma, kind: str = "plain") -> bool:
    _check_kind(kind)
    return _is_admissible_mask(t, t.mask(gamma), kind)


def admissible_masks(
    t: Theory, kind: str = "plain", maximal_only: bool = False, max_args: int = MAX_ARGS
) -> list[int]:
    _check_kind(kind)
    check_cap(t.size, max_args)
    c = closure(t, kind)
    a, b = _base_arrays(c)
    # sub[i, j]: target of pair i lies inside source of pair j, i.e. whoever
    # triggers pair i attacks the minimal attacker of pair j.
    sub = ((b[:, None] & ~a[None, :]) == 0).astype(np.int32)
    out: list[int] = []
    for g in _chunks(t.size):
        col = g[:, None]
        trig = (a & ~col) == 0
        hit = (b & ~col) == 0
        conflict = (trig & hit).any(axis=1)
        counter = (trig.astype(np.int32) @ sub) > 0
        ok = ~conflict & (~hit | counter).all(axis=1)
        out.extend(int(x) for x in g[ok])
    if maximal_only:
        return bits.maximize(out)
    return sorted(out, key=bits.order_key)


def admissible_sets(
    t: Theory, kind: str = "plain", maximal_only: bool = False, max_args: int = MAX_ARGS
) -> list[frozenset]:
    return [t.names(m) for m in admissible_masks(t, kind, maximal_only, max_args)]
