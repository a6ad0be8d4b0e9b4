"""Dung-style semantics over normal (affirmative and local) theories.

In a normal theory a set attacks another set iff it attacks one of its
members, so the relation reduces to set-to-argument attacks and the classical
extension notions apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bits
from .core import Theory, is_normal
from .enumeration import MAX_ARGS, check_cap, p_stable_masks, stable_masks
from .errors import NotNormalError

SEMANTICS = ("complete", "preferred", "stable", "grounded")


class DungView:
    def __init__(self, theory: Theory):
        if not is_normal(theory):
            raise NotNormalError("Dung semantics require an affirmative and local theory")
        self.theory = theory
        # attackers[i]: sources of generators whose target is exactly {i}
        self._attackers = [[a for a, b in theory.base if b == 1 << i] for i in range(theory.size)]

    def bracket_mask(self, gamma: int) -> int:
        out = 0
        for i, sources in enumerate(self._attackers):
            if not any(a & ~gamma == 0 for a in sources):
                out |= 1 << i
        return out

    def is_conflict_free_mask(self, gamma: int) -> bool:
        return gamma & ~self.bracket_mask(gamma) == 0

    def is_admissible_mask(self, gamma: int) -> bool:
        return self.is_conflict_free_mask(gamma) and gamma & ~self.bracket_mask(self.bracket_mask(gamma)) == 0

    def is_complete_mask(self, gamma: int) -> bool:
        return self.is_conflict_free_mask(gamma) and self.bracket_mask(self.bracket_mask(gamma)) == gamma

    def grounded_mask(self) -> int:
        g = 0
        for _ in range(self.theory.size + 1):
            nxt = self.bracket_mask(self.bracket_mask(g))
            if nxt == g:
                return g
            g = nxt
        raise AssertionError("acceptability iteration did not converge")

    def extension_masks(self, semantics: str, max_args: int = MAX_ARGS) -> list[int]:
        if semantics not in SEMANTICS:
            raise ValueError(f"unknown semantics {semantics!r}; expected one of {SEMANTICS}")
        if semantics == "grounded":
            return [self.grounded_mask()]
        check_cap(self.theory.size, max_args)
        everything = range(1 << self.theory.size)
        if semantics == "stable":
            return [g for g in sorted(everything, key=bits.order_key) if self.bracket_mask(g) == g]
        complete = [g for g in everything if self.is_complete_mask(g)]
        if semantics == "preferred":
            return bits.maximize(complete)
        return sorted(complete, key=bits.order_key)


def bracket(v: DungView, gamma) -> frozenset:
    """Arguments not attacked by ``gamma``."""
    t = v.theory
    return t.names(v.bracket_mask(t.mask(gamma)))


def extensions(v: DungView, semantics: str, max_args: int = MAX_ARGS) -> list[frozenset]:
    return [v.theory.names(m) for m in v.extension_masks(semantics, max_args)]


@dataclass
class CorrespondenceReport:
    passed: bool
    stable_sets: list
    stable_extensions: list
    p_stable_pairs: list
    complete_pairs: list
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "stable_sets": self.stable_sets,
            "stable_extensions": self.stable_extensions,
            "p_stable_pairs": self.p_stable_pairs,
            "complete_pairs": self.complete_pairs,
            "counterexamples": self.counterexamples,
        }


def check_normal_correspondence(v: DungView, max_args: int = MAX_ARGS) -> CorrespondenceReport:
    """Stable sets vs stable extensions, p-stable pairs vs ``(G, [G])`` for complete ``G``."""
    t = v.theory
    check_cap(t.size, max_args)
    stable = stable_masks(t, max_args)
    stable_ext = v.extension_masks("stable", max_args)
    pairs = p_stable_masks(t, max_args)
    complete = [(g, v.bracket_mask(g)) for g in v.extension_masks("complete", max_args)]
    complete.sort(key=lambda p: (bits.order_key(p[0]), bits.order_key(p[1])))

    def names(m):
        return t.sorted_names(m)

    problems = []
    for g in sorted(set(stable) ^ set(stable_ext), key=bits.order_key):
        side = "stable set only" if g in stable else "stable extension only"
        problems.append({"kind": side, "set": names(g)})
    for lo, up in sorted(set(pairs) ^ set(complete)):
        side = "p-stable pair only" if (lo, up) in pairs else "complete extension only"
        problems.append({"kind": side, "lower": names(lo), "upper": names(up)})
    return CorrespondenceReport(
        passed=not problems,
        stable_sets=[names(g) for g in stable],
        stable_extensions=[names(g) for g in stable_ext],
        p_stable_pairs=[[names(lo), names(up)] for lo, up in pairs],
        complete_pairs=[[names(lo), names(up)] for lo, up in complete],
        counterexamples=problems,
    )

