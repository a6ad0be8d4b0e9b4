"""
Normal theories and Dung frameworks
===================================

When every generator attacks at most one argument and nothing attacks
the empty set, the theory behaves like an ordinary attack graph. The
usual extensions can be read off directly.
"""

from collarg import DungView, check_normal_correspondence, extensions, new_theory

t = new_theory(
    ["a", "b", "c", "d"],
    [({"a"}, {"b"}), ({"b"}, {"a"}), ({"b"}, {"c"}), ({"c"}, {"d"}), ({"a", "c"}, {"d"})],
)
v = DungView(t)

for sem in ("grounded", "complete", "preferred", "stable"):
    exts = extensions(v, sem)
    print(f"{sem:>9}: " + "  ".join("{" + ", ".join(sorted(e)) + "}" for e in exts))

rep = check_normal_correspondence(v)
print("stable sets match stable extensions, p-stable pairs match complete ones:", rep.passed)
