"""Brute-force reference semantics for disjunctive programs.

Everything here enumerates interpretations directly and shares no code with
the hyperresolution engine or the argumentation enumerators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .dlp import MAX_ATOMS, NEG_PREFIX, Program, Rule, compile_program
from .enumeration import stable_sets
from .errors import CapExceeded


@dataclass(frozen=True)
class Interpretation:
    true_atoms: frozenset


def _powerset(atoms):
    atoms = list(atoms)
    for k in range(len(atoms) + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


def satisfies(interp: frozenset, rules: Iterable[Rule]) -> bool:
    for r in rules:
        if r.pos_body <= interp and not (r.neg_body & interp) and not (r.head & interp):
            return False
    return True


def entails(rules: Iterable[Rule], disjunction: Iterable[str]) -> bool:
    """Truth-table entailment of a positive disjunction (empty = falsum)."""
    rules = list(rules)
    d = frozenset(disjunction)
    if any(r.neg_body for r in rules):
        raise ValueError("entails expects positive rules")
    atoms = set(d)
    for r in rules:
        atoms |= r.head | r.pos_body
    for interp in _powerset(sorted(atoms)):
        if satisfies(interp, rules) and not (d & interp):
            return False
    return True


def gl_reduct(p: Program, model: Iterable[str]) -> list[Rule]:
    c = frozenset(model.true_atoms if isinstance(model, Interpretation) else model)
    return [Rule(r.head, r.pos_body) for r in p.rules if not (r.neg_body & c)]


def is_stable_model(p: Program, model: Iterable[str]) -> bool:
    c = frozenset(model)
    reduced = gl_reduct(p, c)
    if not satisfies(c, reduced):
        return False
    return not any(satisfies(sub, reduced) for sub in _powerset(sorted(c)) if sub != c)


def stable_models(p: Program, max_atoms: int = MAX_ATOMS) -> list[Interpretation]:
    if len(p.atoms) > max_atoms:
        raise CapExceeded(f"program has {len(p.atoms)} atoms, above the oracle cap of {max_atoms}")
    order = {a: i for i, a in enumerate(p.atoms)}
    found = [c for c in _powerset(p.atoms) if is_stable_model(p, c)]
    found.sort(key=lambda c: (len(c), sorted(order[a] for a in c)))
    return [Interpretation(c) for c in found]


@dataclass
class Theorem1Report:
    passed: bool
    stable_models: list
    stable_sets: list
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "stable_models": self.stable_models,
            "stable_sets": self.stable_sets,
            "counterexamples": self.counterexamples,
        }


def check_theorem1(p: Program, max_atoms: int = MAX_ATOMS) -> Theorem1Report:
    """Stable models ``C`` must map one-to-one onto stable sets ``~(atoms - C)``."""
    models = [m.true_atoms for m in stable_models(p, max_atoms)]
    sets = stable_sets(compile_program(p, max_atoms))
    order = {a: i for i, a in enumerate(p.atoms)}

    def ordered(atoms):
        return sorted(atoms, key=order.__getitem__)

    expected = {frozenset(NEG_PREFIX + a for a in p.atoms if a not in c): c for c in models}
    problems = []
    for s, c in expected.items():
        if s not in sets:
            problems.append({"kind": "stable model without stable set", "model": ordered(c)})
    for s in sets:
        if s not in expected:
            atoms = [a[len(NEG_PREFIX):] for a in s]
            problems.append({
                "kind": "stable set without stable model",
                "set": sorted(s, key=lambda x: order[x[len(NEG_PREFIX):]]),
                "model": ordered(set(p.atoms) - set(atoms)),
            })
    return Theorem1Report(
        passed=not problems,
        stable_models=[ordered(c) for c in models],
        stable_sets=[sorted(s, key=lambda x: order[x[len(NEG_PREFIX):]]) for s in sets],
        counterexamples=problems,
    )
