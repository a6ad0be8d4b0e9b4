"""
Disjunctive programs as argumentation
=====================================

Each atom p becomes an assumption ~p. A set of assumptions attacks
another when, assuming the first false, the program derives the
disjunction of the second. Stable sets of the compiled theory then line
up with the program's stable models by complement.
"""

from collarg import check_theorem1, compile_program, derives, parse_program, stable_models, stable_sets
from collarg.caf import format_theory

src = """
p | q.
r :- p.
r :- q.
"""
p = parse_program(src)

# with nothing assumed the program already proves p or q
print("derives p|q:", derives(p, [], ["p", "q"]))
print("derives p:  ", derives(p, [], ["p"]))

t = compile_program(p)
print(format_theory(t))

print("stable models:", [sorted(m.true_atoms) for m in stable_models(p)])
print("stable sets:  ", [sorted(s) for s in stable_sets(t)])

rep = check_theorem1(p)
print("complement correspondence holds:", rep.passed)

# an odd loop has no stable model and its theory has no stable set
odd = parse_program("p :- not p.")
print("odd loop:", len(stable_models(odd)), "stable models,", len(stable_sets(compile_program(odd))), "stable sets")
