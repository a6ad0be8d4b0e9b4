"""
Three flavours of admissibility
===============================

A collective attack by {b, c} on a is not something a can answer alone.
This script lists admissible sets under the plain, positive and negative
attack relations and the closures that induce them.
"""

from pathlib import Path

from collarg import admissible_sets
from collarg.caf import format_theory, load_theory
from collarg.core import closure, properties

here = Path(__file__).resolve().parent
t = load_theory(here.parent / "data" / "theories" / "collective.caf")
print(format_theory(t))

for kind in ("plain", "positive", "negative"):
    sets = admissible_sets(t, kind)
    print(f"{kind:>8}: " + "  ".join("{" + ", ".join(sorted(s)) + "}" for s in sets))

# the closed theory's plain admissible sets are the same as the kind's
for kind in ("positive", "negative"):
    c = closure(t, kind)
    assert admissible_sets(c) == admissible_sets(t, kind)
    flags = [name for name, on in properties(c).items() if on]
    print(f"{kind} closure has {len(c.base)} generators; properties: {', '.join(flags) or 'none'}")
