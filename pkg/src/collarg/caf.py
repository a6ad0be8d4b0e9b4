"""Plain-text theory format (``.caf``).

::

    # comment
    args: a b c
    a -> b
    a b ->        # attack on the empty set
    -> c          # the empty set attacks c

The optional ``args:`` header fixes the universe and its order; without it
arguments are numbered in order of first appearance. :func:`format_theory`
always writes the header followed by the normalized base, so
``format_theory(parse_theory(s)) == s`` for any ``s`` it produced.
"""

from __future__ import annotations

import re

from .core import Theory
from .errors import FormatError

_NAME = re.compile(r"[^\s#:]+")
_TOKEN = re.compile(r"\S+")


def _names(segment: str, lineno: int, offset: int) -> list[tuple[str, int]]:
    out = []
    for m in _TOKEN.finditer(segment):
        tok = m.group()
        if not _NAME.fullmatch(tok):
            raise FormatError(f"invalid argument name {tok!r}", lineno, offset + m.start() + 1)
        out.append((tok, offset + m.start() + 1))
    return out


def parse_theory(text: str) -> Theory:
    universe: list[str] | None = None
    seen: list[str] = []
    index: dict[str, int] = {}
    raw: list[tuple[list[str], list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if stripped.startswith("args:"):
            if universe is not None:
                raise FormatError("duplicate 'args:' header", lineno, indent + 1)
            if raw:
                raise FormatError("'args:' header must precede all attacks", lineno, indent + 1)
            names = _names(stripped[5:], lineno, indent + 5)
            universe = []
            for name, col in names:
                if name in index:
                    raise FormatError(f"duplicate argument {name!r}", lineno, col)
                index[name] = len(universe)
                universe.append(name)
            continue
        parts = body.split("->")
        if len(parts) != 2:
            raise FormatError("expected exactly one '->' per attack line", lineno)
        left = _names(parts[0], lineno, 0)
        right = _names(parts[1], lineno, len(parts[0]) + 2)
        for name, col in left + right:
            if name not in index:
                if universe is not None:
                    raise FormatError(f"argument {name!r} is not declared in 'args:'", lineno, col)
                index[name] = len(seen)
                seen.append(name)
        raw.append(([n for n, _ in left], [n for n, _ in right]))
    names = universe if universe is not None else seen
    shell = Theory(names)
    return Theory(names, [(shell.mask(s), shell.mask(d)) for s, d in raw])


def format_theory(t: Theory) -> str:
    lines = ["args: " + " ".join(t.universe) if t.universe else "args:"]
    for a, b in t.base:
        src = " ".join(t.sorted_names(a))
        tgt = " ".join(t.sorted_names(b))
        lines.append(" ".join(x for x in (src, "->", tgt) if x))
    return "\n".join(lines) + "\n"


def load_theory(path) -> Theory:
    with open(path, encoding="utf-8") as fh:
        return parse_theory(fh.read())
