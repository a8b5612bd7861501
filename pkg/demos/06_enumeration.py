# Every weak BCC-algebra of a small order, one per isomorphism class.
# Counts grow fast: 1, 2, 5, 32, 427.

import random
import time
from collections import Counter

from weakbcc import are_isomorphic, canonical_form, enumerate_order, load_fixture, relabel

for n in range(1, 5):
    t0 = time.perf_counter()
    cat = enumerate_order(n)
    kinds = Counter(
        "proper" if e.report.is_proper else "bck" if e.report.is_bck else "bci" if e.report.is_bci else "bcc"
        for e in cat
    )
    print(f"order {n}: {len(cat)} classes {dict(kinds)} in {time.perf_counter() - t0:.2f}s")

# the two proper algebras of order 4
for e in enumerate_order(4, "proper"):
    print(e.key, e.algebra.table)

# a random relabeling keeps the canonical form, and the isomorphism comes with a certificate
a = load_fixture("EX28")
rest = list(range(1, a.order))
random.Random(1).shuffle(rest)
b = relabel(a, [0] + rest)
cert = are_isomorphic(a, b)
print("same canonical form:", canonical_form(a) == canonical_form(b))
print("mapping:", cert.mapping, "verified:", cert.verify(a, b))
