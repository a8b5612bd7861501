# Audit theorems on finite models: each tag is a hypothesis and a conclusion,
# checked exhaustively. A theorem is vacuous on a model that misses a
# hypothesis, and a counterexample would come with the failing assignment.

from weakbcc import audit_algebra, audit_catalog, enumerate_order, fixtures

rep = audit_algebra(fixtures()["EX56"], "T55")
res = rep.results["T55"]
print("T55 on EX56:", res.status)
for h, ok in res.hypotheses.items():
    print(f"   {h}: {ok}")
# the conclusion is false here, so the missing hypotheses are doing real work
print("   conclusion holds:", res.conclusion_holds)

models = list(fixtures().values()) + [a for n in range(1, 5) for a in enumerate_order(n).algebras()]
cat = audit_catalog(models)
print(cat.models, "models,", len(cat.counterexamples), "counterexamples")
for tag in ("T55", "T65", "P711", "L23"):
    print(tag, cat.status_counts[tag])
