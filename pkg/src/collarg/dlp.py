"""Propositional disjunctive logic programs and their argumentation theories.

Program syntax (``.dlp``)::

    % comment
    p | q.
    r :- p, not s.
    :- q, not r.

A set of assumptions ``~C`` (the atoms of ``C`` taken to be false) attacks
``~D`` iff the program together with ``~C`` derives the disjunction of ``D``.
Derivation is positive hyperresolution over the reduct that keeps exactly the
rules whose negative body is assumed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import bits
from .core import Theory
from .errors import CapExceeded, FormatError, NonGroundError

MAX_ATOMS = 12
NEG_PREFIX = "~"


@dataclass(frozen=True)
class Rule:
    head: frozenset = frozenset()
    pos_body: frozenset = frozenset()
    neg_body: frozenset = frozenset()

    @property
    def is_positive(self) -> bool:
        return not self.neg_body

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def __str__(self) -> str:
        head = " | ".join(sorted(self.head))
        body = sorted(self.pos_body) + ["not " + a for a in sorted(self.neg_body)]
        if not body:
            return head + "."
        return f"{head} :- {', '.join(body)}.".lstrip()


def rule(head: Iterable[str] = (), pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
    return Rule(frozenset(head), frozenset(pos), frozenset(neg))


class Program:
    """Immutable program: ordered atoms plus a tuple of rules."""

    __slots__ = ("atoms", "rules", "_index", "_masked")

    def __init__(self, rules: Iterable[Rule], atoms: Sequence[str] | None = None):
        rules = tuple(rules)
        if atoms is None:
            atoms = []
            for r in rules:
                for a in sorted(r.head) + sorted(r.pos_body) + sorted(r.neg_body):
                    if a not in atoms:
                        atoms.append(a)
        atoms = tuple(atoms)
        index = {a: i for i, a in enumerate(atoms)}
        if len(index) != len(atoms):
            raise ValueError("duplicate atom")
        for r in rules:
            missing = (r.head | r.pos_body | r.neg_body) - index.keys()
            if missing:
                raise ValueError(f"rule {r} mentions undeclared atoms {sorted(missing)}")
        self.atoms = atoms
        self.rules = rules
        self._index = index
        self._masked = tuple((self.mask(r.head), self.mask(r.pos_body), self.mask(r.neg_body)) for r in rules)

    def mask(self, atoms: Iterable[str]) -> int:
        if isinstance(atoms, str):
            atoms = [atoms]
        return bits.from_indices(self._index[a] for a in atoms)

    def names(self, mask: int) -> frozenset:
        return frozenset(self.atoms[i] for i in bits.indices(mask))

    def sorted_names(self, mask: int) -> list[str]:
        return [self.atoms[i] for i in bits.indices(mask)]

    @property
    def is_normal(self) -> bool:
        """Every rule has exactly one head atom (no disjunctions, no constraints)."""
        return all(len(r.head) == 1 for r in self.rules)

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self.atoms == other.atoms and self.rules == other.rules

    def __hash__(self):
        return hash((self.atoms, self.rules))

    def __repr__(self):
        return f"Program(atoms={list(self.atoms)}, rules={[str(r) for r in self.rules]})"


def format_program(p: Program) -> str:
    return "".join(str(r) + "\n" for r in p.rules)


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<comment>%[^\n]*)|(?P<atom>[a-z][a-zA-Z0-9_]*)|(?P<var>[A-Z_][a-zA-Z0-9_]*)"
    r"|(?P<if>:-)|(?P<bar>\|)|(?P<comma>,)|(?P<dot>\.)"
)


def _tokens(text: str):
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormatError(f"unexpected character {text[pos]!r}", line, col)
        kind, value = m.lastgroup, m.group()
        if kind == "var":
            raise NonGroundError(f"variable {value!r}: non-ground programs are unsupported", line, col)
        if kind not in ("ws", "comment"):
            yield kind, value, line, col
        nl = value.count("\n")
        if nl:
            line += nl
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    yield "eof", "", line, col


_VARIABLE = re.compile(r"(?<![a-zA-Z0-9_])[A-Z_][a-zA-Z0-9_]*")


def _reject_variables(text: str) -> None:
    for lineno, line in enumerate(text.splitlines(), start=1):
        m = _VARIABLE.search(line.split("%", 1)[0])
        if m:
            raise NonGroundError(
                f"variable {m.group()!r}: non-ground programs are unsupported", lineno, m.start() + 1
            )


def parse_program(text: str) -> Program:
    _reject_variables(text)
    toks = list(_tokens(text))
    pos = 0
    order: list[str] = []

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        tok = toks[pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise FormatError(f"expected {kind}, found {what}", tok[2], tok[3])
        pos += 1
        return tok

    def atom():
        tok = take("atom")
        if tok[1] == "not":
            raise FormatError("'not' cannot be used as an atom", tok[2], tok[3])
        if tok[1] not in order:
            order.append(tok[1])
        return tok[1]

    rules = []
    while peek()[0] != "eof":
        head, pos_body, neg_body = [], [], []
        if peek()[0] != "if":
            head.append(atom())
            while peek()[0] == "bar":
                take("bar")
                head.append(atom())
        if peek()[0] == "if":
            take("if")
            while True:
                if peek()[0] == "atom" and peek()[1] == "not":
                    take("atom")
                    neg_body.append(atom())
                else:
                    pos_body.append(atom())
                if peek()[0] != "comma":
                    break
                take("comma")
        take("dot")
        rules.append(rule(head, pos_body, neg_body))
    return Program(rules, order)


def load_program(path) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


# -- derivation ---------------------------------------------------------------


@dataclass(frozen=True)
class ClauseSet:
    """Subsumption-minimal positive clauses, in canonical order."""

    clauses: tuple

    def subsumes(self, atoms: Iterable[str]) -> bool:
        d = frozenset(atoms)
        return any(c <= d for c in self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)


def reduct(p: Program, assumed: Iterable[str]) -> list[Rule]:
    """Rules whose negative body is among the atoms assumed false, with negation stripped."""
    f = frozenset(assumed)
    return [Rule(r.head, r.pos_body) for r in p.rules if r.neg_body <= f]


def _reduct_masks(p: Program, f: int) -> list[tuple[int, int]]:
    return [(h, pos) for h, pos, neg in p._masked if neg & ~f == 0]


def hyperresolve(rules: Iterable[tuple[int, int]]) -> list[int]:
    """Positive clauses derivable from ``(head, body)`` rules, subsumption-minimal.

    A rule ``H <- A1..Am`` with clauses ``D1 ∋ A1 .. Dm ∋ Am`` yields
    ``H | (D1 - A1) | .. | (Dm - Am)``. Returns ``[0]`` once the empty clause
    appears.
    """
    rules = list(rules)
    clauses: list[int] = []

    def add(c: int) -> bool:
        if any(d & ~c == 0 for d in clauses):
            return False
        clauses[:] = [d for d in clauses if c & ~d != 0]
        clauses.append(c)
        return True

    for head, body in rules:
        if body == 0:
            add(head)
    bodies = [(head, list(bits.indices(body))) for head, body in rules if body]
    changed = True
    while changed and 0 not in clauses:
        changed = False
        for head, body in bodies:
            options = [[c for c in clauses if c >> i & 1] for i in body]
            if not all(options):
                continue
            for combo in product(*options):
                new = head
                for i, c in zip(body, combo):
                    new |= c & ~(1 << i)
                if add(new):
                    changed = True
                    if new == 0:
                        return [0]
    return bits.minimize(clauses)


def _clauses_mask(p: Program, f: int) -> list[int]:
    return hyperresolve(_reduct_masks(p, f))


def derive_clauses(p: Program, assumed: Iterable[str]) -> ClauseSet:
    f = p.mask(assumed)
    return ClauseSet(tuple(p.names(c) for c in _clauses_mask(p, f)))


def derives(p: Program, assumed: Iterable[str], disjunction: Iterable[str]) -> bool:
    """Whether ``p`` plus the assumptions derives the disjunction (empty = falsum)."""
    d = p.mask(disjunction)
    return any(c & ~d == 0 for c in _clauses_mask(p, p.mask(assumed)))


# -- compilation --------------------------------------------------------------


def argument_names(p: Program) -> list[str]:
    return [NEG_PREFIX + a for a in p.atoms]


def _check_atoms(p: Program, max_atoms: int) -> None:
    if len(p.atoms) > max_atoms:
        raise CapExceeded(f"program has {len(p.atoms)} atoms, above the compilation cap of {max_atoms}")


def compile_program(p: Program, max_atoms: int = MAX_ATOMS) -> Theory:
    """Materialize the attack base over arguments ``~a``.

    Argument ``i`` of the theory is the assumption ``~atoms[i]``, so atom masks
    and argument masks coincide.
    """
    _check_atoms(p, max_atoms)
    pairs = []
    for f in range(1 << len(p.atoms)):
        pairs.extend((f, e) for e in _clauses_mask(p, f))
    return Theory(argument_names(p), pairs)


class LazyTheory:
    """Answers attack queries of a compiled program without building the base."""

    def __init__(self, p: Program, max_atoms: int = MAX_ATOMS):
        _check_atoms(p, max_atoms)
        self.program = p
        self._shell = Theory(argument_names(p))
        self.universe = self._shell.universe
        self._clauses = lru_cache(maxsize=None)(lambda f: tuple(_clauses_mask(p, f)))

    @property
    def size(self) -> int:
        return len(self.universe)

    def mask(self, names) -> int:
        return self._shell.mask(names)

    def names(self, mask: int) -> frozenset:
        return self._shell.names(mask)

    def attacks_mask(self, gamma: int, delta: int) -> bool:
        return any(c & ~delta == 0 for c in self._clauses(gamma))

    def materialize(self) -> Theory:
        return compile_program(self.program, max_atoms=len(self.program.atoms))
