"""Named identities, their quantification scopes, and condition (S).

Every identity is evaluated exhaustively. A *branchwise* identity is only
required for assignments whose designated variables share a branch; a
*global* one for every assignment. Guards (``x <= y`` and the like) are part
of the statement and apply under either scope.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable

from .model import OK, Algebra, Verdict, Witness, right_power
from .structure import OrderInfo, PrerequisiteError, greatest_element, is_group_like, restricted_info

SCOPES = ("global", "branchwise", "branchwise-xy")


@dataclass(frozen=True)
class Identity:
    tag: str
    variables: str
    relation: str  # "=" or "<="
    branch_vars: str
    default_scope: str
    text: str
    needs: str = ""  # "restricted", "circle" or "power"


@dataclass(frozen=True)
class IdentityId:
    tag: str
    n: int | None = None

    def __str__(self):
        return self.tag if self.n is None else f"{self.tag}({self.n})"


CATALOG: dict[str, Identity] = {
    i.tag: i
    for i in [
        Identity("I_SOLID", "xyz", "=", "xy", "branchwise", "xy.z = xz.y"),
        Identity("E5", "xy", "=", "xy", "branchwise", "x.xy = y.yx"),
        Identity("NB", "xy", "=", "xy", "branchwise", "xy = x(y.yx^n)", "power"),
        Identity("D51", "xy", "=", "xy", "branchwise", "x.yx = x"),
        Identity("EQ252", "xy", "=", "xy", "branchwise", "xy.0y = ((xy.y).0y).0y"),
        Identity("EQ253", "xy", "=", "xy", "global", "xy.y = xy"),
        Identity("EQ254", "xyz", "=", "xyz", "global", "xy.z = xz.yz"),
        Identity("EQ255", "xy", "=", "xy", "global", "xy = xy.y(0.0y)"),
        Identity("EQ256", "xyz", "=", "xyz", "global", "xy.z = (xz.z).yz"),
        Identity("EQ257", "xy", "=", "xy", "branchwise", "xy = (xy.y).0y"),
        Identity("T53EQ", "xy", "=", "xy", "branchwise", "xy.0y = (xy.0y)y.0y"),
        Identity("EQ261", "xyz", "=", "xy", "branchwise", "xy.z = x(y o z), z in B(0)", "circle"),
        Identity("L310", "xy", "=", "xy", "branchwise", "xy = (N_a y)(N_a x)", "restricted"),
        Identity("P311", "xy", "=", "xy", "branchwise", "x.N_a y = y.N_a x", "restricted"),
        Identity("P26A", "xy", "<=", "xy", "branchwise", "x.xy <= y"),
        Identity("P26B", "xy", "=", "xy", "branchwise", "x(x.xy) = xy"),
        Identity("P212", "xyz", "<=", "", "global", "xy.xz <= zy when xy, xz share a branch"),
        Identity("T42B", "xy", "<=", "xy", "branchwise", "x.xy <= y.yx^n", "power"),
        Identity("T42C", "xy", "<=", "", "global", "x <= y implies x <= y.yx^n", "power"),
        Identity("T33_2", "xy", "=", "xy", "branchwise", "xy = x(y.yx)"),
        Identity("T33_3", "xy", "=", "", "global", "x = y.yx when x <= y"),
        Identity("T33_4", "xy", "=", "xy", "branchwise", "x.xy = y(y(x.xy))"),
    ]
}


def identity(tag: str, n: int | None = None) -> IdentityId:
    if tag not in CATALOG:
        raise KeyError(f"unknown identity tag {tag!r}")
    if CATALOG[tag].needs == "power":
        if n is None or n < 1:
            raise ValueError(f"{tag} needs a positive exponent n")
    elif n is not None:
        raise ValueError(f"{tag} takes no exponent")
    return IdentityId(tag, n)


def _sides(tag: str, t, o: OrderInfo, n: int | None, greatest, circle) -> Callable:
    """Return ``f(*values) -> (lhs, rhs) | None``; ``None`` means the guard is unmet."""
    m = lambda x, y: t[x][y]  # noqa: E731
    if tag == "I_SOLID":
        return lambda x, y, z: (m(m(x, y), z), m(m(x, z), y))
    if tag == "E5":
        return lambda x, y: (m(x, m(x, y)), m(y, m(y, x)))
    if tag == "NB":
        return lambda x, y: (m(x, y), m(x, m(y, _rp(t, y, x, n))))
    if tag == "D51":
        return lambda x, y: (m(x, m(y, x)), x)
    if tag == "EQ252":
        return lambda x, y: (m(m(x, y), m(0, y)), m(m(m(m(x, y), y), m(0, y)), m(0, y)))
    if tag == "EQ253":
        return lambda x, y: (m(m(x, y), y), m(x, y))
    if tag == "EQ254":
        return lambda x, y, z: (m(m(x, y), z), m(m(x, z), m(y, z)))
    if tag == "EQ255":
        return lambda x, y: (m(x, y), m(m(x, y), m(y, m(0, m(0, y)))))
    if tag == "EQ256":
        return lambda x, y, z: (m(m(x, y), z), m(m(m(x, z), z), m(y, z)))
    if tag == "EQ257":
        return lambda x, y: (m(x, y), m(m(m(x, y), y), m(0, y)))
    if tag == "T53EQ":

        def f(x, y):
            u = m(m(x, y), m(0, y))
            return u, m(m(u, y), m(0, y))

        return f
    if tag == "EQ261":
        return lambda x, y, z: (m(m(x, y), z), m(x, circle[y][z])) if o.phi[z] == 0 else None
    if tag in ("L310", "P311"):
        N = lambda x: t[greatest[o.branch_of[x]]][x]  # noqa: E731
        if tag == "L310":
            return lambda x, y: (m(x, y), m(N(y), N(x)))
        return lambda x, y: (m(x, N(y)), m(y, N(x)))
    if tag == "P26A":
        return lambda x, y: (m(x, m(x, y)), y)
    if tag == "P26B":
        return lambda x, y: (m(x, m(x, m(x, y))), m(x, y))
    if tag == "P212":
        return lambda x, y, z: (
            (m(m(x, y), m(x, z)), m(z, y)) if o.same_branch(m(x, y), m(x, z)) else None
        )
    if tag == "T42B":
        return lambda x, y: (m(x, m(x, y)), m(y, _rp(t, y, x, n)))
    if tag == "T42C":
        return lambda x, y: (x, m(y, _rp(t, y, x, n))) if o.leq[x][y] else None
    if tag == "T33_2":
        return lambda x, y: (m(x, y), m(x, m(y, m(y, x))))
    if tag == "T33_3":
        return lambda x, y: (x, m(y, m(y, x))) if o.leq[x][y] else None
    if tag == "T33_4":
        return lambda x, y: (m(x, m(x, y)), m(y, m(y, m(x, m(x, y)))))
    raise KeyError(tag)


def _rp(t, x, y, k):
    for _ in range(k):
        x = t[x][y]
    return x


def check_identity(
    a: Algebra,
    o: OrderInfo,
    ident: IdentityId | str,
    *,
    scope: str | None = None,
    circle=None,
) -> Verdict:
    """Evaluate an identity over exactly its scope.

    Returns the lexicographically first counterexample (variables in
    alphabetical order). ``scope`` overrides the tag's default; for
    identities with three variables ``"branchwise-xy"`` lets ``z`` range
    globally. Raises :class:`PrerequisiteError` when ``N_a`` or the circle
    table is needed but unavailable.
    """
    if isinstance(ident, str):
        ident = identity(ident)
    decl = CATALOG[ident.tag]
    scope = scope or decl.default_scope
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    greatest = None
    if decl.needs == "restricted":
        r = restricted_info(a, o)
        if not r.is_restricted:
            raise PrerequisiteError(f"{ident} needs a restricted algebra")
        greatest = r.greatest
    if decl.needs == "circle" and circle is None:
        raise PrerequisiteError(f"{ident} needs the circle table of condition (S)")
    if decl.needs == "power" and ident.n is None:
        raise ValueError(f"{ident.tag} needs an exponent")

    if scope == "global" or not decl.branch_vars:
        linked = ""
    elif scope == "branchwise-xy":
        linked = "xy"
    else:
        linked = decl.branch_vars
    idx = [decl.variables.index(v) for v in linked]

    f = _sides(ident.tag, a.table, o, ident.n, greatest, circle)
    t, bo = a.table, o.branch_of
    for values in cartesian(a.elements, repeat=len(decl.variables)):
        if idx and len({bo[values[i]] for i in idx}) > 1:
            continue
        sides = f(*values)
        if sides is None:
            continue
        lhs, rhs = sides
        if decl.relation == "=":
            if lhs != rhs:
                return Verdict(False, Witness.of(decl.variables, values, lhs, rhs))
        elif t[lhs][rhs] != 0:
            return Verdict(False, Witness.of(decl.variables, values, lhs, rhs, "<="))
    return OK


def is_solid(a: Algebra, o: OrderInfo) -> Verdict:
    return check_identity(a, o, "I_SOLID")


def min_commutative_fold(a: Algebra, o: OrderInfo, bound: int | None = None) -> int | None:
    """Smallest ``n >= 1`` (up to ``bound``) for which ``xy = x(y.yx^n)`` holds branchwise."""
    bound = a.order if bound is None else bound
    for n in range(1, bound + 1):
        if check_identity(a, o, IdentityId("NB", n)):
            return n
    return None


# --- condition (S) -----------------------------------------------------------


def a_set(a: Algebra, o: OrderInfo, x: int, y: int) -> frozenset[int]:
    """``A(x, y) = {p : px <= y}``."""
    n = a.order
    if not (0 <= x < n and 0 <= y < n):
        raise IndexError(f"element index out of range for order {n}")
    t = a.table
    return frozenset(p for p in range(n) if t[t[p][x]][y] == 0)


def maximal_elements(o: OrderInfo, s) -> list[int]:
    s = sorted(s)
    return [m for m in s if not any(o.leq[m][p] and p != m for p in s)]


@dataclass(frozen=True)
class ConditionSReport:
    holds: bool
    solid: bool
    circle: tuple[tuple[int, ...], ...] | None = None
    failing_pair: tuple[int, int] | None = None
    failing_set: frozenset[int] | None = None
    failing_maximal: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        d = {"holds": self.holds, "solid": self.solid}
        if self.holds:
            d["circle"] = [list(r) for r in self.circle]
        else:
            d["failing_pair"] = list(self.failing_pair)
            d["a_set"] = sorted(self.failing_set)
            d["maximal"] = list(self.failing_maximal)
        return d


def condition_s(a: Algebra, o: OrderInfo) -> ConditionSReport:
    """Compute every ``A(x, y)`` and its greatest element ``x o y``.

    Computed for any weak BCC-algebra; ``solid`` is recorded so callers can
    insist on it.
    """
    solid = bool(is_solid(a, o))
    n = a.order
    circle = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = a_set(a, o, x, y)
            g = greatest_element(o, sorted(s))
            if g is None:
                return ConditionSReport(False, solid, None, (x, y), s, tuple(maximal_elements(o, s)))
            circle[x][y] = g
    return ConditionSReport(True, solid, tuple(map(tuple, circle)))


@dataclass(frozen=True)
class GroupReport:
    is_group: bool
    is_abelian: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "is_group": self.is_group,
            "is_abelian": self.is_abelian,
            "witnesses": {k: w.to_dict() for k, w in sorted(self.witnesses.items())},
        }


def circle_group_check(a: Algebra, s: ConditionSReport) -> GroupReport:
    """Is ``(G; o, 0)`` a group, and is it abelian?"""
    if not s.holds:
        raise PrerequisiteError("condition (S) does not hold; no circle operation")
    c, r = s.circle, range(a.order)
    w: dict[str, Witness] = {}
    for x in r:
        if c[0][x] != x or c[x][0] != x:
            w["identity"] = Witness.of("x", (x,), c[0][x] if c[0][x] != x else c[x][0], x)
            break
    for x, y, z in cartesian(r, repeat=3):
        lhs, rhs = c[c[x][y]][z], c[x][c[y][z]]
        if lhs != rhs:
            w["associativity"] = Witness.of("xyz", (x, y, z), lhs, rhs)
            break
    for x in r:
        if not any(c[x][y] == 0 and c[y][x] == 0 for y in r):
            w["inverse"] = Witness.of("x", (x,), relation="in")
            break
    for x, y in cartesian(r, repeat=2):
        if c[x][y] != c[y][x]:
            w["commutativity"] = Witness.of("xy", (x, y), c[x][y], c[y][x])
            break
    is_group = not ({"identity", "associativity", "inverse"} & w.keys())
    return GroupReport(is_group, is_group and "commutativity" not in w, w)


# --- combined property vector --------------------------------------------------


def property_vector(a: Algebra, o: OrderInfo) -> dict:
    """Every named property of a weak BCC-algebra, with failure witnesses."""
    r = restricted_info(a, o)
    s = condition_s(a, o)

    def v(tag, scope=None):
        return check_identity(a, o, tag, scope=scope)

    checks = {
        "solid": v("I_SOLID"),
        "branchwise_commutative": v("E5"),
        "commutative": v("E5", "global"),
        "branchwise_implicative": v("D51"),
        "implicative": v("D51", "global"),
        "phi_implicative": v("EQ255"),
        "branchwise_phi_implicative": v("EQ255", "branchwise"),
        "positive_implicative": v("EQ253"),
        "weakly_positive_implicative": v("EQ256"),
        "branchwise_weakly_positive_implicative": v("EQ256", "branchwise"),
    }
    return {
        "checks": checks,
        "group_like": is_group_like(o),
        "restricted": r.is_restricted,
        "involutory": r.involutory,
        "greatest": r.greatest,
        "min_fold": min_commutative_fold(a, o),
        "condition_s": s,
    }
