# A(x, y) = {p : px <= y}. When every A(x, y) has a greatest element the
# algebra carries a second operation x o y, which may or may not be a group.

from weakbcc import circle_group_check, condition_s, derive_order, load_fixture
from weakbcc.properties import a_set

a = load_fixture("E76")
o = derive_order(a)
L = a.label
print("A(a, b) =", sorted(L(p) for p in a_set(a, o, 1, 2)))
s = condition_s(a, o)
# two maximal elements and no greatest one, so there is no x o y here
print("condition (S):", s.holds, "maximal:", [L(m) for m in s.failing_maximal])

b = load_fixture("E77")
s = condition_s(b, derive_order(b))
print("E77 circle table:")
for row in s.circle:
    print("  ", row)
g = circle_group_check(b, s)
print("group:", g.is_group, "abelian:", g.is_abelian)
for law, w in g.witnesses.items():
    print(f"  {law} fails at {w.values()}")

# for a group-like algebra x o y is the group product back again
z = load_fixture("Z2GL")
sz = condition_s(z, derive_order(z))
print("Z2GL circle:", sz.circle, circle_group_check(z, sz).is_group)
