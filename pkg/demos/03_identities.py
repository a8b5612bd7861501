# Identities can be required everywhere (global) or only for elements
# sharing a branch (branchwise). The same table can pass one and fail the other.

from weakbcc import CATALOG, check_identity, derive_order, load_fixture, property_vector

a = load_fixture("EX31")
o = derive_order(a)

e5 = CATALOG["E5"]
print("E5:", e5.text)
print("  branchwise:", check_identity(a, o, "E5").holds)
v = check_identity(a, o, "E5", scope="global")
print("  global:", v.holds, "first failure", v.witness.values(), v.witness.lhs, "!=", v.witness.rhs)

# all named properties at once
pv = property_vector(a, o)
for name, verdict in pv["checks"].items():
    print(f"{name:40s} {verdict.holds}")
print("smallest n with n-fold branchwise commutativity:", pv["min_fold"])

# solidity is the exchange identity restricted to x, y in one branch
b = load_fixture("EX611")
s = check_identity(b, derive_order(b), "I_SOLID")
print("EX611 solid:", s.holds, s.witness and s.witness.values())
