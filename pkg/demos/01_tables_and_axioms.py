# A weak BCC-algebra is a finite table with a distinguished 0.
# Here we load one from the shipped corpus, look at it as a numpy array,
# and ask which of the six axioms it satisfies.

import numpy as np

from weakbcc import check_axioms, classify, load_fixture, parse_table, serialize

a = load_fixture("EX28")
T = a.array
print(a.name, "order", a.order)
print(T)

# (ii) and (iii) can be read straight off the array
print("diagonal is zero:", bool(np.all(np.diag(T) == 0)))
print("column 0 is the identity:", bool(np.all(T[:, 0] == np.arange(a.order))))

# every axiom, with the first failing assignment when there is one
for ax, v in check_axioms(a).items():
    print(f"axiom ({ax})", "holds" if v else f"fails at {v.witness.values()}")

r = classify(a)
print(r.flags())
# proper = weak BCC but neither BCC nor BCI; the exchange failure shows why it is not BCI
print("exchange identity fails at", r.failures["bci"].values())

# tables are plain text; the header and labels are optional
b = parse_table("n=2\n0 0\n1 0\n")
print(serialize(b))
print(classify(b).flags())  # the two-element chain is BCK
