"""Axiom checks and the base classification.

Axioms, with juxtaposition as the product:

    (i)   (xy . zy) . xz = 0
    (ii)  xx = 0
    (iii) x0 = x
    (iv)  xy = yx = 0  implies  x = y
    (v)   0x = 0
    (vi)  (x . xy) y = 0

(i)-(iv) define a weak BCC-algebra, adding (v) gives a BCC-algebra and (v)+(vi)
a BCK-algebra. (i)-(iv)+(vi) define a BCI-algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .model import OK, Algebra, Verdict, Witness

AXIOMS = ("i", "ii", "iii", "iv", "v", "vi")
WEAK_BCC = ("i", "ii", "iii", "iv")


class ConsistencyError(AssertionError):
    """Two independent computations of the same property disagree."""


def _axiom_i(a: Algebra) -> Verdict:
    t, r = a.table, a.elements
    for x in r:
        tx = t[x]
        for y in r:
            xy = tx[y]
            for z in r:
                v = t[t[xy][t[z][y]]][tx[z]]
                if v != 0:
                    return Verdict(False, Witness.of("xyz", (x, y, z), v, 0))
    return OK


def _axiom_ii(a: Algebra) -> Verdict:
    for x in a.elements:
        if a.table[x][x] != 0:
            return Verdict(False, Witness.of("x", (x,), a.table[x][x], 0))
    return OK


def _axiom_iii(a: Algebra) -> Verdict:
    for x in a.elements:
        if a.table[x][0] != x:
            return Verdict(False, Witness.of("x", (x,), a.table[x][0], x))
    return OK


def _axiom_iv(a: Algebra) -> Verdict:
    t = a.table
    for x in a.elements:
        for y in a.elements:
            if x != y and t[x][y] == 0 and t[y][x] == 0:
                return Verdict(False, Witness.of("xy", (x, y), x, y))
    return OK


def _axiom_v(a: Algebra) -> Verdict:
    for x in a.elements:
        if a.table[0][x] != 0:
            return Verdict(False, Witness.of("x", (x,), a.table[0][x], 0))
    return OK


def _axiom_vi(a: Algebra) -> Verdict:
    t = a.table
    for x in a.elements:
        for y in a.elements:
            v = t[t[x][t[x][y]]][y]
            if v != 0:
                return Verdict(False, Witness.of("xy", (x, y), v, 0))
    return OK


_CHECKS = {
    "i": _axiom_i,
    "ii": _axiom_ii,
    "iii": _axiom_iii,
    "iv": _axiom_iv,
    "v": _axiom_v,
    "vi": _axiom_vi,
}


def check_axioms(a: Algebra) -> dict[str, Verdict]:
    """Evaluate each of the axioms (i)-(vi) exhaustively.

    Failed axioms carry the lexicographically first counterexample in the
    variable order x, y, z.
    """
    return {ax: _CHECKS[ax](a) for ax in AXIOMS}


def exchange_identity(a: Algebra) -> Verdict:
    """``xy . z = xz . y`` over all triples."""
    t, r = a.table, a.elements
    for x in r:
        for y in r:
            for z in r:
                lhs, rhs = t[t[x][y]][z], t[t[x][z]][y]
                if lhs != rhs:
                    return Verdict(False, Witness.of("xyz", (x, y, z), lhs, rhs))
    return OK


def is_weak_bcc(a: Algebra) -> bool:
    return all(_CHECKS[ax](a) for ax in WEAK_BCC)


@dataclass(frozen=True)
class ClassReport:
    is_weak_bcc: bool
    is_bcc: bool
    is_bck: bool
    is_bci: bool
    is_proper: bool
    failures: dict[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {
            "weak_bcc": self.is_weak_bcc,
            "bcc": self.is_bcc,
            "bck": self.is_bck,
            "bci": self.is_bci,
            "proper": self.is_proper,
        }

    def to_dict(self) -> dict:
        return {
            **self.flags(),
            "failures": {k: w.to_dict() for k, w in sorted(self.failures.items())},
        }


def classify(a: Algebra) -> ClassReport:
    checks = check_axioms(a)
    failures = {ax: v.witness for ax, v in checks.items() if not v}
    weak = all(checks[ax] for ax in WEAK_BCC)
    bcc = weak and bool(checks["v"])
    bck = bcc and bool(checks["vi"])

    exchange = exchange_identity(a) if weak else Verdict(False)
    bci = weak and exchange.holds
    # BCI by definition: (i)-(iv) and (vi)
    if bci != (weak and bool(checks["vi"])):
        raise ConsistencyError(
            f"BCI via exchange identity ({bci}) disagrees with axioms (i)-(iv)+(vi)"
        )
    if weak and not bci:
        failures["bci"] = exchange.witness
    proper = weak and not bcc and not bci
    return ClassReport(weak, bcc, bck, bci, proper, failures)
