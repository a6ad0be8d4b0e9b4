"""
A self-defeating argument
=========================

alpha attacks itself and beta. Nothing is stable, because any set
either contains alpha (and attacks itself) or leaves alpha out without
attacking it. Exporting alpha from the source side repairs that.
"""

from collarg import new_theory, positive_closure, stable_sets, format_theory

t = new_theory(["alpha", "beta"], [({"alpha"}, {"alpha"}), ({"alpha"}, {"beta"})])
print(format_theory(t))
print("stable sets:", stable_sets(t))

# the closure adds the pair  -> alpha , i.e. the empty set now attacks alpha
closed = positive_closure(t)
print(format_theory(closed))
print("stable sets after positive closure:", [sorted(s) for s in stable_sets(closed)])
