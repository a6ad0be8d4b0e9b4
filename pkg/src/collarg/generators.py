"""Seeded random theories and programs for randomized cross-checks."""

from __future__ import annotations

import random

from . import bits
from .core import Theory
from .dlp import Program, rule


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def arg_names(n: int) -> list[str]:
    return [f"a{i}" for i in range(n)]


def random_theory(seed, max_args: int = 6, max_pairs: int = 6, min_args: int = 1) -> Theory:
    """Arbitrary generator pairs; empty sources and targets are allowed but rarer."""
    rng = _rng(seed)
    n = rng.randint(min_args, max_args)
    pairs = []
    for _ in range(rng.randint(0, max_pairs)):
        density = rng.choice((0.25, 0.4))
        a = bits.from_indices(i for i in range(n) if rng.random() < density)
        b = bits.from_indices(i for i in range(n) if rng.random() < density)
        pairs.append((a, b))
    return Theory(arg_names(n), pairs)


def random_normal_theory(seed, max_args: int = 6, max_pairs: int = 6, min_args: int = 1) -> Theory:
    """Affirmative and local by construction: every target is a single argument."""
    rng = _rng(seed)
    n = rng.randint(min_args, max_args)
    pairs = []
    for _ in range(rng.randint(0, max_pairs)):
        a = bits.from_indices(i for i in range(n) if rng.random() < 0.3)
        pairs.append((a, 1 << rng.randrange(n)))
    return Theory(arg_names(n), pairs)


def random_program(seed, max_atoms: int = 5, max_rules: int = 6, normal: bool = False) -> Program:
    """Random propositional program.

    Disjunctive programs get heads of 0 to 2 atoms (0 makes a constraint);
    normal programs get exactly one head atom. Each atom enters the body
    positively, negatively or not at all.
    """
    rng = _rng(seed)
    n = rng.randint(1, max_atoms)
    atoms = [chr(ord("p") + i) if i < 11 else f"x{i}" for i in range(n)]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        k = 1 if normal else rng.choices((0, 1, 2), weights=(1, 4, 2))[0]
        head = rng.sample(atoms, min(k, n))
        pos, neg = [], []
        for a in atoms:
            u = rng.random()
            if u < 0.2:
                pos.append(a)
            elif u < 0.45:
                neg.append(a)
        if not head and not pos and not neg:
            neg.append(rng.choice(atoms))
        rules.append(rule(head, pos, neg))
    return Program(rules, atoms)
