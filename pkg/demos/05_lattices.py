# Meets and joins from brute-force scans of the order, compared with the
# closed formulas built from the product.

from weakbcc import ap_lattice_check, branch_lattice_check, branch_meet_check
from weakbcc import derive_order, load_fixture, restricted_info

a = load_fixture("EX31")
o = derive_order(a)
r = restricted_info(a, o)

for root in o.roots:
    rep = branch_lattice_check(a, o, r, root)
    print(f"B({a.label(root)}):", rep.carrier, "lattice", rep.is_lattice, "distributive", rep.is_distributive)
    for name, v in rep.formula_checks.items():
        print("   ", name, v.holds)

# y.yx as the meet inside a branch
rep = branch_meet_check(a, o, 0)
print("meet formula on B(0):", rep.formula_checks["meet_formula"].holds)

# the down-set of p, with join p(px ^ py)
rep = ap_lattice_check(a, o, 4)
print("A(4):", rep.carrier, {k: v.holds for k, v in rep.formula_checks.items()})
print("informational (hypotheses unmet):", rep.informational)
