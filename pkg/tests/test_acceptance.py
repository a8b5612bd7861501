"""Acceptance gate: one test per checked item, one summary line per criterion.

Items that the fixture tables cannot satisfy are kept verbatim and marked
``xfail(strict=True)``: they run every time, they are reported as failing in
the summary, and an unexpected pass breaks the suite.

Run ``python3 tests/test_acceptance.py`` for the summary alone.
"""
import json
import random
import time
from itertools import product
from pathlib import Path

import pytest

from weakbcc.audit import THEOREMS, audit_algebra, audit_catalog
from weakbcc.axioms import classify
from weakbcc.cli import main
from weakbcc.enumeration import (
    _all_canonical,
    are_isomorphic,
    canonical_form,
    enumerate_order,
    naive_enumerate,
)
from weakbcc.lattice import ap_lattice_check, branch_lattice_check, branch_meet_check
from weakbcc.model import fixtures, relabel
from weakbcc.properties import a_set, check_identity, circle_group_check, condition_s
from weakbcc.structure import derive_order, is_bck_ideal, restricted_info

GOLDEN = Path(__file__).parent / "golden"
FIX = {}
TITLES = {
    1: "fixture classifications",
    2: "enumeration counts",
    3: "theorem audit, zero counterexamples",
    4: "hypothesis-necessity regressions",
    5: "isomorphism robustness",
    6: "oracle equivalence",
}
RESULTS: dict[int, list[tuple[str, bool]]] = {k: [] for k in TITLES}


def fx(name):
    if not FIX:
        FIX.update(fixtures())
    return FIX[name]


def order_of(name):
    a = fx(name)
    return a, derive_order(a)


def holds(name, tag, scope=None):
    a, o = order_of(name)
    return check_identity(a, o, tag, scope=scope).holds


# --- criterion 1 ---------------------------------------------------------------


def c1_ex28():
    a, o = order_of("EX28")
    r = classify(a)
    exch_fails = a(a(5, 3), 2) != a(a(5, 2), 3)
    return r.is_weak_bcc and holds("EX28", "I_SOLID") and r.is_proper and not r.is_bci and exch_fails


def c1_ex31():
    a, o = order_of("EX31")
    return (
        o.branches() == {0: [0, 1, 2], 3: [3, 4]}
        and holds("EX31", "E5")
        and not holds("EX31", "E5", "global")
    )


def c1_ex56_main():
    a, o = order_of("EX56")
    return (
        holds("EX56", "E5")
        and not holds("EX56", "D51")
        and not is_bck_ideal(a, o.minimal).holds
    )


def c1_ex56_eq252():
    return holds("EX56", "EQ252")


def c1_e63():
    return holds("E63", "EQ256")


def c1_ex611_main():
    a, o = order_of("EX611")
    witness_43 = any(
        a(a(4, 3), z) != a(a(a(4, z), z), a(3, z)) for z in a.elements
    )
    return (
        classify(a).is_proper
        and holds("EX611", "EQ255", "branchwise")
        and not holds("EX611", "EQ256")
        and witness_43
    )


def c1_ex611_solid():
    return holds("EX611", "I_SOLID")


def c1_e76():
    a, o = order_of("E76")
    s = condition_s(a, o)
    return not s.holds and a_set(a, o, 1, 2) == {2, 3, 4} and s.failing_pair == (1, 2)


def c1_e77():
    a, o = order_of("E77")
    s = condition_s(a, o)
    if not s.holds:
        return False
    c = s.circle
    return c[1][2] != c[2][1] and c[c[2][2]][2] != c[2][c[2][2]] and not circle_group_check(a, s).is_group


def c1_timing():
    t0 = time.perf_counter()
    for check in (c1_ex28, c1_ex31, c1_ex56_main, c1_e63, c1_ex611_main, c1_e76, c1_e77):
        check()
    return time.perf_counter() - t0 < 1.0


# --- criterion 2 ---------------------------------------------------------------


def c2_small_counts():
    _all_canonical.cache_clear()
    t0 = time.perf_counter()
    ok = len(enumerate_order(1)) == 1 and len(enumerate_order(2)) == 2
    ok &= all(len(enumerate_order(n, "proper")) == 0 for n in (1, 2, 3))
    ok &= len(enumerate_order(4, "proper")) == 2
    ok &= all(
        not (e.report.is_weak_bcc and not e.report.is_bci)
        for n in range(1, 5)
        for e in enumerate_order(n, "solid")
    )
    return ok and time.perf_counter() - t0 < 60


def c2_order5():
    _all_canonical.cache_clear()
    t0 = time.perf_counter()
    solid = enumerate_order(5, "solid", jobs=None)
    found = any(not e.report.is_bci for e in solid)
    return found and time.perf_counter() - t0 < 300


# --- criterion 3 ---------------------------------------------------------------


def c3_audit():
    t0 = time.perf_counter()
    models = list(fixtures().values()) + [a for n in range(1, 5) for a in enumerate_order(n).algebras()]
    cat = audit_catalog(models)
    for ce in cat.counterexamples:
        print("counterexample:", json.dumps(ce, sort_keys=True))
    return (
        not cat.counterexamples
        and set(cat.status_counts) == set(THEOREMS)
        and len(THEOREMS) == 31
        and time.perf_counter() - t0 < 300
    )


# --- criterion 4 ---------------------------------------------------------------


def _golden_audit(case, *argv):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(list(argv) + ["--json"])
    return buf.getvalue() == (GOLDEN / f"{case}.json").read_text(encoding="utf-8")


def c4_ex56_vacuous():
    res = audit_algebra(fx("EX56"), "T55").results["T55"]
    fix_dir = Path(__file__).parents[1] / "src" / "weakbcc" / "fixtures"
    return (
        res.status == "vacuous"
        and res.hypotheses["I(G)_bck_ideal"] is False
        and _golden_audit("audit_EX56_T55", "audit", "--file", str(fix_dir / "EX56.bcc"), "--theorems", "T55")
    )


def c4_ex56_only_ideal():
    h = audit_algebra(fx("EX56"), "T55").results["T55"].hypotheses
    return [k for k, v in h.items() if not v] == ["I(G)_bck_ideal"]


def c4_ex611_converse():
    res = audit_algebra(fx("EX611"), "T65").results["T65"]
    fix_dir = Path(__file__).parents[1] / "src" / "weakbcc" / "fixtures"
    return (
        res.status == "vacuous"
        and res.hypotheses["weakly_positive_implicative"] is False
        and res.conclusion_holds is True
        and _golden_audit("audit_EX611_T65", "audit", "--file", str(fix_dir / "EX611.bcc"), "--theorems", "T65")
    )


def c4_ex611_in_solid_class():
    return audit_algebra(fx("EX611"), "T65").results["T65"].hypotheses["solid"]


# --- criterion 5 ---------------------------------------------------------------


def c5_relabel():
    t0 = time.perf_counter()
    rnd = random.Random(20261018)
    for a in fixtures().values():
        ref = canonical_form(a)
        for _ in range(100):
            rest = list(range(1, a.order))
            rnd.shuffle(rest)
            b = relabel(a, [0] + rest)
            cert = are_isomorphic(a, b)
            if canonical_form(b) != ref or cert is None or not cert.verify(a, b):
                return False
    return time.perf_counter() - t0 < 10


# --- criterion 6 ---------------------------------------------------------------


def c6_naive():
    return all(set(_all_canonical(n, 1)) == naive_enumerate(n) for n in (1, 2, 3))


def _scan(o, carrier, x, y, lower):
    rel = (lambda u, v: o.leq[u][v]) if lower else (lambda u, v: o.leq[v][u])
    bounds = [z for z in carrier if rel(z, x) and rel(z, y)]
    best = [m for m in bounds if all(rel(z, m) for z in bounds)]
    return best[0] if best else None


def c6_lattice():
    models = list(fixtures().values()) + [a for n in range(1, 5) for a in enumerate_order(n).algebras()]
    for a in models:
        o = derive_order(a)
        r = restricted_info(a, o)
        reports = [ap_lattice_check(a, o, p) for p in a.elements]
        reports += [branch_meet_check(a, o, root) for root in o.roots]
        reports += [branch_lattice_check(a, o, r, root) for root in r.greatest]
        for rep in reports:
            for x, y in product(rep.carrier, repeat=2):
                if rep.meet[x, y] != _scan(o, rep.carrier, x, y, True):
                    return False
                if rep.join[x, y] != _scan(o, rep.carrier, x, y, False):
                    return False
    return True


UNATTAINABLE = {
    "EX56 EQ252 branchwise": "the EX56 table violates EQ252 branchwise at x=2, y=1",
    "EX611 solid": "the EX611 table is not solid: (4.3).1 = 0 but (4.1).3 = 1",
    "EX56 fails T55 only through the I(G) ideal": "EQ252 also fails on EX56, so two hypotheses are unmet",
    "EX611 lies in the solid class": "the EX611 table is not solid",
}

ITEMS = [
    (1, "EX28 weak BCC, solid, proper, not BCI at (5,3,2)", c1_ex28),
    (1, "EX31 branches and E5 branchwise only", c1_ex31),
    (1, "EX56 commutative, not implicative, I(G) not an ideal", c1_ex56_main),
    (1, "EX56 EQ252 branchwise", c1_ex56_eq252),
    (1, "E63 weakly positive implicative", c1_e63),
    (1, "EX611 proper, phi-implicative branchwise, not wpi at x=4,y=3", c1_ex611_main),
    (1, "EX611 solid", c1_ex611_solid),
    (1, "E76 condition (S) fails, A(1,2)={2,3,4}", c1_e76),
    (1, "E77 condition (S), circle neither commutative nor associative", c1_e77),
    (1, "classification checks under 1 s", c1_timing),
    (2, "orders 1-4 counts, proper and solid-non-BCI, under 60 s", c2_small_counts),
    (2, "order 5 has a solid non-BCI class, under 5 min", c2_order5),
    (3, "31 tags on fixtures and every order <= 4 model", c3_audit),
    (4, "EX56 vacuous for T55 with I(G) ideal false (golden)", c4_ex56_vacuous),
    (4, "EX56 fails T55 only through the I(G) ideal", c4_ex56_only_ideal),
    (4, "EX611 refutes the T65 converse (golden)", c4_ex611_converse),
    (4, "EX611 lies in the solid class", c4_ex611_in_solid_class),
    (5, "100 relabelings per fixture, certificates verified, under 10 s", c5_relabel),
    (6, "pruned equals naive at order <= 3", c6_naive),
    (6, "lattice tables equal brute-force glb/lub", c6_lattice),
]


def _params():
    for crit, label, fn in ITEMS:
        marks = []
        if label in UNATTAINABLE:
            marks = [pytest.mark.xfail(strict=True, reason=UNATTAINABLE[label])]
        yield pytest.param(crit, label, fn, marks=marks, id=f"c{crit}-{fn.__name__}")


@pytest.mark.parametrize("crit, label, fn", list(_params()))
def test_criterion(crit, label, fn):
    ok = bool(fn())
    RESULTS[crit].append((label, ok))
    assert ok, label


def summary_lines() -> list[str]:
    lines = []
    for crit, title in TITLES.items():
        items = RESULTS[crit]
        if not items:
            continue
        bad = [label for label, ok in items if not ok]
        status = "FAIL" if bad else "PASS"
        line = f"criterion {crit} [{status}] {title} ({len(items) - len(bad)}/{len(items)} items)"
        if bad:
            line += "; failing: " + "; ".join(bad)
        lines.append(line)
    return lines


if __name__ == "__main__":
    for crit, label, fn in ITEMS:
        RESULTS[crit].append((label, bool(fn())))
    for line in summary_lines():
        print(line)
