# The order x <= y iff xy = 0 splits a weak BCC-algebra into branches,
# one for each minimal element. phi(x) = 0x sends every element to (the
# image of) its branch root.

from weakbcc import derive_order, is_bck_ideal, is_group_like, load_fixture, restricted_info

a = load_fixture("EX31")
o = derive_order(a)
L = a.label

print("phi:", [L(v) for v in o.phi])
print("I(G):", [L(r) for r in o.roots])
for root, members in o.branches().items():
    print(f"B({L(root)}) =", [L(x) for x in members])

# each branch here has a greatest element, so the algebra is restricted
r = restricted_info(a, o)
print("greatest:", {L(k): L(v) for k, v in r.greatest.items()}, "involutory:", r.involutory)

# the set of minimal elements need not be an ideal
print("I(G) is a BCK-ideal:", is_bck_ideal(a, o.minimal).holds)

# in a group-like algebra every branch is a single point
z2 = load_fixture("Z2GL")
print("Z2GL group-like:", is_group_like(derive_order(z2)))
