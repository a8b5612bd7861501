"""Lattice structure of branches and of the down-sets ``A(p) = {x : x <= p}``.

Meets and joins are always taken from a brute-force scan of the carrier
(``glb``/``lub`` below); the closed formulas built from the product are
checked against that scan, never trusted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from .axioms import ConsistencyError
from .model import OK, Algebra, Verdict, Witness
from .properties import check_identity, is_solid
from .structure import OrderInfo, PrerequisiteError, RestrictedInfo


def glb(o: OrderInfo, carrier, x: int, y: int) -> int | None:
    lower = [z for z in carrier if o.leq[z][x] and o.leq[z][y]]
    for m in lower:
        if all(o.leq[z][m] for z in lower):
            return m
    return None


def lub(o: OrderInfo, carrier, x: int, y: int) -> int | None:
    upper = [z for z in carrier if o.leq[x][z] and o.leq[y][z]]
    for m in upper:
        if all(o.leq[m][z] for z in upper):
            return m
    return None


@dataclass(frozen=True)
class LatticeReport:
    carrier: tuple[int, ...]
    is_lower_semilattice: bool
    is_lattice: bool
    is_distributive: bool
    meet: dict[tuple[int, int], int | None]
    join: dict[tuple[int, int], int | None]
    formula_checks: dict[str, Verdict] = field(default_factory=dict)
    informational: bool = False

    @property
    def formulas_hold(self) -> bool:
        return all(self.formula_checks.values())

    def to_dict(self) -> dict:
        return {
            "carrier": list(self.carrier),
            "lower_semilattice": self.is_lower_semilattice,
            "lattice": self.is_lattice,
            "distributive": self.is_distributive,
            "informational": self.informational,
            "formulas": {
                k: {"holds": v.holds, "witness": v.witness and v.witness.to_dict()}
                for k, v in sorted(self.formula_checks.items())
            },
        }


def _tables(o: OrderInfo, carrier):
    meet = {(x, y): glb(o, carrier, x, y) for x, y in cartesian(carrier, repeat=2)}
    join = {(x, y): lub(o, carrier, x, y) for x, y in cartesian(carrier, repeat=2)}
    return meet, join


def _distributive(carrier, meet, join) -> bool:
    law = dual = True
    for x, y, z in cartesian(carrier, repeat=3):
        if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
            law = False
        if join[x, meet[y, z]] != meet[join[x, y], join[x, z]]:
            dual = False
    if law != dual:
        raise ConsistencyError("distributive law and its dual disagree on a lattice")
    return law


def _formula(carrier, f, oracle, names="xy") -> Verdict:
    """Compare ``f(x, y)`` with the oracle table for every pair of the carrier."""
    for x, y in cartesian(carrier, repeat=2):
        got, want = f(x, y), oracle[x, y]
        if got != want:
            return Verdict(False, Witness.of(names, (x, y), got, want))
    return OK


def _report(o, carrier, formulas, *, semilattice=None, informational=False) -> LatticeReport:
    carrier = tuple(carrier)
    meet, join = _tables(o, carrier)
    poset_semilattice = all(v is not None for v in meet.values())
    lower = poset_semilattice if semilattice is None else semilattice
    lattice = lower and poset_semilattice and all(v is not None for v in join.values())
    dist = lattice and _distributive(carrier, meet, join)
    return LatticeReport(carrier, lower, lattice, dist, meet, join, formulas, informational)


def branch_meet_check(a: Algebra, o: OrderInfo, root: int) -> LatticeReport:
    """Is ``x ^ y = y.yx`` the greatest lower bound on the branch ``B(root)``?"""
    if root not in o.minimal:
        raise ValueError(f"{root} is not a minimal element")
    t = a.table
    carrier = o.branch(root)
    meet, _ = _tables(o, carrier)
    formula = _formula(carrier, lambda x, y: t[y][t[y][x]], meet)
    return _report(
        o,
        carrier,
        {"meet_formula": formula},
        semilattice=formula.holds,
        informational=not (is_solid(a, o) and check_identity(a, o, "E5")),
    )


def ap_lattice_check(a: Algebra, o: OrderInfo, p: int) -> LatticeReport:
    """Lattice check on ``A(p)`` with ``x ^ y = y.yx`` and ``x v_p y = p(px ^ py)``."""
    t = a.table
    carrier = [x for x in a.elements if o.leq[x][p]]
    meet, join = _tables(o, carrier)

    def wedge(x, y):
        return t[y][t[y][x]]

    formulas = {
        "meet_formula": _formula(carrier, wedge, meet),
        "join_formula": _formula(carrier, lambda x, y: t[p][wedge(t[p][x], t[p][y])], join),
    }
    hyp = bool(is_solid(a, o)) and bool(check_identity(a, o, "E5"))
    return _report(o, carrier, formulas, informational=not hyp)


def branch_lattice_check(
    a: Algebra, o: OrderInfo, r: RestrictedInfo, root: int
) -> LatticeReport:
    """Lattice check on ``B(root)`` with the ``N_a`` duality formulas.

    ``x ^ y = N_a(N_a x v N_a y)`` and ``x v_a y = N_a(N_a x ^ N_a y)``, where
    ``N_a x = 1_a x`` lands in ``B(0)`` and the inner join/meet is taken
    there. Needs a greatest element ``1_a`` on the branch.
    """
    if root not in o.minimal:
        raise ValueError(f"{root} is not a minimal element")
    if root not in r.greatest:
        raise PrerequisiteError(f"branch B({root}) has no greatest element")
    t = a.table
    one = r.greatest[root]
    carrier = o.branch(root)
    zero_branch = o.branch(0)
    meet, join = _tables(o, carrier)
    N = t[one]

    def via(inner):
        def f(x, y):
            m = inner(o, zero_branch, N[x], N[y])
            return None if m is None else N[m]

        return f

    formulas = {}
    if all(v is not None for v in join.values()) and all(v is not None for v in meet.values()):
        formulas = {
            "meet_formula": _formula(carrier, via(lub), meet),
            "join_formula": _formula(carrier, via(glb), join),
        }
    hyp = bool(is_solid(a, o)) and r.is_restricted and bool(r.involutory)
    return _report(o, carrier, formulas, informational=not hyp)
