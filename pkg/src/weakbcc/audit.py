"""Theorem audit: hypothesis => conclusion, checked exhaustively on one model.

Each theorem tag maps to a hypothesis (a dict of named boolean facts) and a
set of named conclusion clauses, each a :class:`Verdict`. Equivalences are
split into one clause per direction, named ``"A=>B"``, so a failure points
at the broken direction.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Iterable, Sequence

from .axioms import classify, exchange_identity
from .enumeration import canonical_form
from .lattice import ap_lattice_check, branch_lattice_check, branch_meet_check
from .model import OK, Algebra, Verdict, Witness
from .properties import IdentityId, a_set, check_identity, circle_group_check, condition_s
from .structure import (
    PrerequisiteError,
    branch_product_sets,
    derive_order,
    is_bck_ideal,
    is_group_like,
    restricted_info,
)

THEOREMS = (
    "TFI", "L21", "L22", "L23", "P26", "P211", "P212", "T33", "T35", "L37",
    "P39", "L310", "P311", "T312", "T42", "T52", "T53", "L54", "T55", "L59",
    "T65", "T613", "L71", "P72", "L78", "T79", "C710", "P711", "T713",
    "BCI_IFF", "COMM_GLOBAL",
)  # fmt: skip

HOLDS, VACUOUS, COUNTEREXAMPLE = "holds", "vacuous", "counterexample"


def parse_theorems(tags: str | Iterable[str] | None) -> tuple[str, ...]:
    """``"all"``, ``None`` or a comma-separated / iterable list of tags."""
    if tags is None or tags == "all":
        return THEOREMS
    tags = [s.strip() for s in tags.split(",")] if isinstance(tags, str) else list(tags)
    unknown = [t for t in tags if t not in THEOREMS]
    if unknown:
        raise KeyError(f"unknown theorem tag(s): {', '.join(unknown)}")
    return tuple(tags)


class _Model:
    """Lazily computed facts about one algebra, shared by all theorems."""

    def __init__(self, a: Algebra):
        self.a = a
        self.t = a.table
        self.n = a.order
        self.r = range(a.order)
        self.o = derive_order(a)
        self._ids: dict = {}
        self._s = self._rest = self._cls = None

    def id(self, tag: str, n: int | None = None, scope: str | None = None, **kw) -> Verdict:
        key = (tag, n, scope)
        if key not in self._ids:
            self._ids[key] = check_identity(self.a, self.o, IdentityId(tag, n), scope=scope, **kw)
        return self._ids[key]

    @property
    def solid(self) -> bool:
        return bool(self.id("I_SOLID"))

    @property
    def rest(self):
        if self._rest is None:
            self._rest = restricted_info(self.a, self.o)
        return self._rest

    @property
    def s(self):
        if self._s is None:
            self._s = condition_s(self.a, self.o)
        return self._s

    @property
    def cls(self):
        if self._cls is None:
            self._cls = classify(self.a)
        return self._cls

    def circle(self):
        if not self.s.holds:
            raise PrerequisiteError("condition (S) fails; no circle operation")
        return self.s.circle

    def N(self, root: int, x: int) -> int:
        """``N_a x = 1_a x`` for the branch ``B(root)``."""
        if root not in self.rest.greatest:
            raise PrerequisiteError(f"branch B({root}) has no greatest element")
        return self.t[self.rest.greatest[root]][x]

    def le(self, x: int, y: int) -> bool:
        return self.t[x][y] == 0

    def pairs_in_branches(self):
        bo = self.o.branch_of
        return ((x, y) for x in self.r for y in self.r if bo[x] == bo[y])


def forall(variables: str, domain, pred: Callable[..., bool | Witness]) -> Verdict:
    """First assignment at which ``pred`` is falsy (or returns a Witness)."""
    for values in domain:
        res = pred(*values)
        if isinstance(res, Witness):
            return Verdict(False, res)
        if not res:
            return Verdict(False, Witness.of(variables, values, relation="in"))
    return OK


def _fact(ok: bool, witness: Witness | None = None) -> Verdict:
    return Verdict(ok, None if ok else (witness or Witness((), relation="in")))


def equivalence(conds: dict[str, Verdict]) -> dict[str, Verdict]:
    """Every directional implication between the named conditions."""
    out = {}
    for (na, va), (nb, vb) in cartesian(conds.items(), repeat=2):
        if na == nb:
            continue
        ok = not va.holds or vb.holds
        out[f"{na}=>{nb}"] = _fact(ok, vb.witness)
    return out


# --- per-theorem encodings ---------------------------------------------------------
# Each returns (hypotheses, conclusions, info). Conclusions are a zero-argument
# callable so they are only evaluated when their prerequisites exist.


def _tfi(m: _Model):
    t, phi, r = m.t, m.o.phi, m.r
    p2 = lambda x: phi[phi[x]]  # noqa: E731
    return {}, lambda: {
        "phi2_below": forall("x", ((x,) for x in r), lambda x: m.le(p2(x), x)),
        "phi_constant_on_comparable": forall(
            "xy", cartesian(r, r), lambda x, y: not m.le(x, y) or phi[x] == phi[y]
        ),
        "phi3_eq_phi": forall("x", ((x,) for x in r), lambda x: phi[phi[phi[x]]] == phi[x]),
        "phi2_multiplicative": forall(
            "xy", cartesian(r, r), lambda x, y: p2(t[x][y]) == t[p2(x)][p2(y)]
        ),
    }, {}


def _l21(m: _Model):
    t, o = m.t, m.o
    same = lambda x, y: o.same_branch(x, y)  # noqa: E731
    in_b0 = lambda x, y: o.phi[t[x][y]] == 0  # noqa: E731
    return {}, lambda: {
        "same=>xy_in_B0": forall("xy", cartesian(m.r, m.r), lambda x, y: not same(x, y) or in_b0(x, y)),
        "xy_in_B0=>same": forall("xy", cartesian(m.r, m.r), lambda x, y: not in_b0(x, y) or same(x, y)),
    }, {}


def _l22(m: _Model):
    t, b0 = m.t, m.o.branch(0)
    k = m.o.kernel
    return {}, lambda: {
        "closed": forall("xy", cartesian(b0, b0), lambda x, y: t[x][y] in k),
        "bcc_axiom_v": forall("x", ((x,) for x in b0), lambda x: t[0][x] == 0),
        "maximal": forall("y", ((y,) for y in m.r if y not in k), lambda y: t[0][y] != 0),
    }, {}


def _l23(m: _Model):
    sets = branch_product_sets(m.a, m.o)
    t, o = m.t, m.o

    def contained(x, y):
        return o.branch_of[t[x][y]] == t[o.branch_of[x]][o.branch_of[y]]

    info = {"equality": {f"{a},{b}": p == b_ for (a, b), (p, b_) in sets.items()}}
    return {}, lambda: {"containment": forall("xy", cartesian(m.r, m.r), contained)}, info


def _p26(m: _Model):
    t, o = m.t, m.o

    def closed(x, y):
        return o.branch_of[t[x][t[x][y]]] == o.branch_of[x]

    return {"solid": m.solid}, lambda: {
        "a": m.id("P26A"),
        "b": m.id("P26B"),
        "branch_closure": forall("xy", m.pairs_in_branches(), closed),
    }, {}


def _p211(m: _Model):
    t = m.t

    def endo(x, y):
        lhs, rhs = t[0][t[x][y]], t[t[0][x]][t[0][y]]
        return lhs == rhs or Witness.of("xy", (x, y), lhs, rhs)

    return {"solid": m.solid}, lambda: {"endomorphism": forall("xy", cartesian(m.r, m.r), endo)}, {}


def _p212(m: _Model):
    t, o = m.t, m.o

    def alt(x, y, z):
        if not o.same_branch(t[x][y], t[z][y]):
            return True
        lhs, rhs = t[t[x][y]][t[x][z]], t[z][y]
        return m.le(lhs, rhs) or Witness.of("xyz", (x, y, z), lhs, rhs, "<=")

    return {"solid": m.solid}, lambda: {
        "xy_xz_same_branch": m.id("P212"),
        "xy_zy_same_branch": forall("xyz", cartesian(m.r, m.r, m.r), alt),
    }, {}


def _branch_semilattice(m: _Model) -> Verdict:
    for root in m.o.roots:
        rep = branch_meet_check(m.a, m.o, root)
        if not rep.is_lower_semilattice:
            return Verdict(False, rep.formula_checks["meet_formula"].witness)
    return OK


def _t33(m: _Model):
    def concl():
        conds = {
            "(1)": m.id("E5"),
            "(2)": m.id("T33_2"),
            "(3)": m.id("T33_3"),
            "(4)": m.id("T33_4"),
            "(5)": _branch_semilattice(m),
        }
        return equivalence(conds)

    return {"solid": m.solid}, concl, {}


def _t35(m: _Model):
    def concl():
        out = {}
        for p in m.r:
            rep = ap_lattice_check(m.a, m.o, p)
            bad = next((v for v in rep.formula_checks.values() if not v), None)
            ok = rep.is_distributive and bad is None
            out[f"A({p})"] = _fact(ok, bad.witness if bad else Witness.of("p", (p,), relation="in"))
        return out

    return {"solid": m.solid, "branchwise_commutative": bool(m.id("E5"))}, concl, {}


def _l37(m: _Model):
    t, bo = m.t, m.o.branch_of
    g = m.rest.greatest

    def concl():
        if not m.rest.is_restricted:
            raise PrerequisiteError("N_a needs every branch to have a greatest element")
        pairs = list(m.pairs_in_branches())
        singles = [(x,) for x in m.r]

        def N(x):
            return m.N(bo[x], x)

        def NN(x):
            a = bo[x]
            return m.N(a, m.N(a, x))

        def item1(x):
            one = g[bo[x]]
            return m.N(bo[x], one) == 0 and t[one][0] == one

        return {
            "(1)": forall("x", singles, item1),
            "(2)": forall("x", singles, lambda x: m.le(NN(x), x)),
            "(3)": forall("xy", pairs, lambda x, y: t[N(x)][y] == t[N(y)][x]),
            "(4)": forall("xy", pairs, lambda x, y: not m.le(x, y) or m.le(N(y), N(x))),
            "(5)": forall("xy", pairs, lambda x, y: m.le(t[N(x)][N(y)], t[y][x])),
            "(6)": forall("x", singles, lambda x: m.N(bo[x], NN(x)) == N(x)),
        }

    return {"solid": m.solid, "restricted": m.rest.is_restricted}, concl, {}


def _involutory(m: _Model) -> Verdict:
    bo = m.o.branch_of
    return forall("x", ((x,) for x in m.r), lambda x: m.N(bo[x], m.N(bo[x], x)) == x)


def _p39(m: _Model):
    hyp = {
        "branchwise_commutative": bool(m.id("E5")),
        "restricted": m.rest.is_restricted,
        "solid": m.solid,
    }
    return hyp, lambda: {"involutory": _involutory(m)}, {}


def _l310(m: _Model):
    hyp = {"solid": m.solid, "involutory": bool(m.rest.involutory)}
    return hyp, lambda: {"identity": m.id("L310")}, {}


def _p311(m: _Model):
    hyp = {"solid": m.solid, "restricted": m.rest.is_restricted}
    return hyp, lambda: equivalence({"involutory": _involutory(m), "xN_ay=yN_ax": m.id("P311")}), {}


def _t312(m: _Model):
    def concl():
        reps = {root: branch_lattice_check(m.a, m.o, m.rest, root) for root in m.o.roots}
        semi = all(all(v is not None for v in rep.meet.values()) for rep in reps.values())
        lat = all(rep.is_lattice for rep in reps.values())
        out = equivalence({"lower_semilattices": _fact(semi), "lattices": _fact(lat)})
        for root, rep in reps.items():
            for name, v in rep.formula_checks.items():
                out[f"B({root}).{name}"] = v
        return out

    return {"solid": m.solid, "involutory": bool(m.rest.involutory)}, concl, {}


def _t42(m: _Model):
    def concl():
        out = {}
        for n in range(1, max(m.n, 2) + 1):
            conds = {
                f"(a)n={n}": m.id("NB", n),
                f"(b)n={n}": m.id("T42B", n),
                f"(c)n={n}": m.id("T42C", n),
            }
            out.update(equivalence(conds))
        return out

    return {"solid": m.solid}, concl, {}


def _t52(m: _Model):
    hyp = {"solid": m.solid, "branchwise_implicative": bool(m.id("D51"))}
    return hyp, lambda: {"branchwise_commutative": m.id("E5")}, {}


def _t53(m: _Model):
    hyp = {"solid": m.solid, "branchwise_implicative": bool(m.id("D51"))}
    return hyp, lambda: {"identity": m.id("T53EQ")}, {}


def _l54(m: _Model):
    t = m.t

    def ineq(x, y):
        xy, oy = t[x][y], t[0][y]
        lhs = t[t[t[xy][oy]][y]][oy]
        rhs = t[t[t[xy][y]][oy]][oy]
        return m.le(lhs, rhs) or Witness.of("xy", (x, y), lhs, rhs, "<=")

    return {"solid": m.solid}, lambda: {"inequality": forall("xy", m.pairs_in_branches(), ineq)}, {}


def _t55(m: _Model):
    hyp = {
        "I(G)_bck_ideal": bool(is_bck_ideal(m.a, m.o.minimal)),
        "branchwise_commutative": bool(m.id("E5")),
        "solid": m.solid,
        "EQ252_branchwise": bool(m.id("EQ252")),
    }
    return hyp, lambda: {"branchwise_implicative": m.id("D51")}, {}


def _l59(m: _Model):
    hyp = {"solid": m.solid, "weakly_positive_implicative": bool(m.id("EQ256"))}
    return hyp, lambda: {"EQ257": m.id("EQ257", scope="global")}, {}


def _t65(m: _Model):
    hyp = {"solid": m.solid, "weakly_positive_implicative": bool(m.id("EQ256"))}
    return hyp, lambda: {"branchwise_phi_implicative": m.id("EQ255", scope="branchwise")}, {}


def _t613(m: _Model):
    def concl():
        phi_i = m.id("EQ255", scope="branchwise")
        comm = m.id("E5")
        both = Verdict(phi_i.holds and comm.holds, phi_i.witness or comm.witness)
        return equivalence({"branchwise_implicative": m.id("D51"), "phi_implicative_and_commutative": both})

    return {"solid": m.solid}, concl, {}


def _l71(m: _Model):
    A = {(x, y): a_set(m.a, m.o, x, y) for x in m.r for y in m.r}
    o, r = m.o, m.r
    in_b0 = lambda v: o.phi[v] == 0  # noqa: E731
    pairs = list(cartesian(r, r))
    triples = list(cartesian(r, r, r))

    def concl():
        out = {
            "(1)": forall("x", ((x,) for x in r), lambda x: A[0, x] == A[x, 0]),
            "(2)": forall("xy", pairs, lambda x, y: (0 in A[x, y]) == (0 in A[y, x])),
            "(3)": forall("xy", pairs, lambda x, y: (x in A[x, y]) == in_b0(y)),
            "(4)": forall("xy", pairs, lambda x, y: not in_b0(x) or y in A[x, y]),
            "(5)": forall("xyu", triples, lambda x, y, u: not m.le(x, u) or A[x, y] <= A[u, y]),
            "(6)": forall("xyz", triples, lambda x, y, z: not m.le(y, z) or A[x, y] <= A[x, z]),
            "(7)": forall(
                "xyuz",
                cartesian(r, r, r, r),
                lambda x, y, u, z: not (m.le(u, z) and z in A[x, y]) or u in A[x, y],
            ),
        }
        if m.cls.is_bci:
            out["(8)"] = forall("xy", pairs, lambda x, y: A[x, y] == A[y, x])
        return out

    return {}, concl, {"bci": m.cls.is_bci}


def _p72(m: _Model):
    t, o = m.t, m.o

    def check(x, y):
        s_ = a_set(m.a, o, x, y)
        s = t[0][t[t[0][x]][y]]
        target = t[o.branch_of[x]][t[0][o.branch_of[y]]]
        return (
            bool(s_)
            and s in s_
            and all(m.le(s, p) for p in s_)
            and all(o.branch_of[p] == target for p in s_)
        )

    return {"solid": m.solid}, lambda: {"A(x,y)": forall("xy", cartesian(m.r, m.r), check)}, {}


def _l78(m: _Model):
    def concl():
        c = m.circle()

        def mono(x, y, z):
            return not m.le(x, y) or m.le(c[x][z], c[y][z]) or Witness.of(
                "xyz", (x, y, z), c[x][z], c[y][z], "<="
            )

        return {"monotone": forall("xyz", cartesian(m.r, m.r, m.r), mono)}

    return {"condition_s": m.s.holds}, concl, {"solid": m.solid}


def _t79(m: _Model):
    def concl():
        g = circle_group_check(m.a, m.s)
        gw = next(iter(g.witnesses.values()), None)
        return equivalence({"circle_group": _fact(g.is_group, gw), "group_like": _fact(is_group_like(m.o))})

    return {"condition_s": m.s.holds}, concl, {"solid": m.solid}


def _c710(m: _Model):
    def concl():
        g = circle_group_check(m.a, m.s)
        gw = next(iter(g.witnesses.values()), None)
        right = is_group_like(m.o) and m.cls.is_bci
        return equivalence(
            {"circle_abelian_group": _fact(g.is_group and g.is_abelian, gw), "group_like_bci": _fact(right)}
        )

    return {"condition_s": m.s.holds}, concl, {"solid": m.solid}


def _p711(m: _Model):
    return (
        {"solid": m.solid, "condition_s": m.s.holds},
        lambda: {"identity": m.id("EQ261", circle=m.circle())},
        {},
    )


def _t713(m: _Model):
    def concl():
        return equivalence(
            {"restricted": _fact(m.rest.is_restricted), "some_branch_restricted": _fact(m.rest.has_restricted_branch)}
        )

    return {"solid": m.solid, "condition_s": m.s.holds}, concl, {}


def _bci_iff(m: _Model):
    def concl():
        t = m.t
        vi = forall("xy", cartesian(m.r, m.r), lambda x, y: t[t[x][t[x][y]]][y] == 0)
        return equivalence({"exchange_identity": exchange_identity(m.a), "axiom_vi": vi})

    return {}, concl, {}


def _comm_global(m: _Model):
    t = m.t

    def concl():
        return {
            "axiom_v": forall("x", ((x,) for x in m.r), lambda x: t[0][x] == 0),
            "axiom_vi": forall("xy", cartesian(m.r, m.r), lambda x, y: t[t[x][t[x][y]]][y] == 0),
        }

    return {"commutative": bool(m.id("E5", scope="global"))}, concl, {}


ENCODINGS: dict[str, Callable] = {
    "TFI": _tfi, "L21": _l21, "L22": _l22, "L23": _l23, "P26": _p26, "P211": _p211,
    "P212": _p212, "T33": _t33, "T35": _t35, "L37": _l37, "P39": _p39, "L310": _l310,
    "P311": _p311, "T312": _t312, "T42": _t42, "T52": _t52, "T53": _t53, "L54": _l54,
    "T55": _t55, "L59": _l59, "T65": _t65, "T613": _t613, "L71": _l71, "P72": _p72,
    "L78": _l78, "T79": _t79, "C710": _c710, "P711": _p711, "T713": _t713,
    "BCI_IFF": _bci_iff, "COMM_GLOBAL": _comm_global,
}  # fmt: skip


@dataclass(frozen=True)
class TheoremResult:
    tag: str
    status: str
    hypotheses: dict[str, bool]
    conclusions: dict[str, Verdict]
    info: dict = field(default_factory=dict)

    @property
    def witness(self) -> Witness | None:
        if self.status != COUNTEREXAMPLE:
            return None
        return next(v.witness for v in self.conclusions.values() if not v)

    @property
    def conclusion_holds(self) -> bool | None:
        """Truth of the conclusion, evaluated even when the theorem is vacuous."""
        if not self.conclusions:
            return None
        return all(self.conclusions.values())

    def to_dict(self) -> dict:
        d = {
            "status": self.status,
            "hypotheses": dict(sorted(self.hypotheses.items())),
            "conclusions": {
                k: {"holds": v.holds, **({"witness": v.witness.to_dict()} if not v else {})}
                for k, v in sorted(self.conclusions.items())
            },
        }
        if self.info:
            d["info"] = self.info
        return d


def _run(m: _Model, tag: str) -> TheoremResult:
    hyp, concl, info = ENCODINGS[tag](m)
    try:
        conclusions = concl()
    except PrerequisiteError as exc:
        if all(hyp.values()):
            raise
        conclusions = {}
        info = {**info, "not_evaluable": str(exc)}
    if not all(hyp.values()):
        status = VACUOUS
    elif all(conclusions.values()):
        status = HOLDS
    else:
        status = COUNTEREXAMPLE
    return TheoremResult(tag, status, hyp, conclusions, info)


@dataclass(frozen=True)
class AuditReport:
    name: str | None
    canonical: str
    results: dict[str, TheoremResult]

    def summary(self) -> dict[str, int]:
        c = Counter(r.status for r in self.results.values())
        return {k: c.get(k, 0) for k in (HOLDS, VACUOUS, COUNTEREXAMPLE)}

    @property
    def counterexamples(self) -> dict[str, TheoremResult]:
        return {k: r for k, r in self.results.items() if r.status == COUNTEREXAMPLE}

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "canonical": self.canonical,
            "summary": self.summary(),
            "theorems": {k: r.to_dict() for k, r in sorted(self.results.items())},
        }


def audit_algebra(a: Algebra, ids: Iterable[str] | str | None = None) -> AuditReport:
    """Evaluate each theorem on ``a``; ``a`` must be a weak BCC-algebra."""
    tags = parse_theorems(ids)
    m = _Model(a)
    results = {tag: _run(m, tag) for tag in tags}
    return AuditReport(a.name, canonical_form(a).hex(), results)


@dataclass(frozen=True)
class CatalogAudit:
    models: int
    status_counts: dict[str, dict[str, int]]
    counterexamples: list[dict]

    def to_dict(self) -> dict:
        return {
            "models": self.models,
            "counterexample_count": len(self.counterexamples),
            "status_counts": {k: dict(v) for k, v in sorted(self.status_counts.items())},
            "counterexamples": self.counterexamples,
        }


def _audit_chunk(args):
    models, tags = args
    return [audit_algebra(a, tags) for a in models]


def audit_catalog(
    models: Sequence[Algebra], ids: Iterable[str] | str | None = None, *, jobs: int = 1
) -> CatalogAudit:
    """Audit every model; ``jobs > 1`` spreads the models over worker processes."""
    tags = parse_theorems(ids)
    models = list(models)
    if jobs > 1 and len(models) > 1:
        chunks = [(models[i::jobs], tags) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_audit_chunk, chunks))
        # undo the striding so output order matches input order
        reports = [None] * len(models)
        for i, part in enumerate(parts):
            reports[i::jobs] = part
    else:
        reports = [audit_algebra(a, tags) for a in models]
    counts = {tag: {HOLDS: 0, VACUOUS: 0, COUNTEREXAMPLE: 0} for tag in tags}
    bad = []
    for a, rep in zip(models, reports):
        for tag, res in rep.results.items():
            counts[tag][res.status] += 1
            if res.status == COUNTEREXAMPLE:
                bad.append(
                    {
                        "model": a.name,
                        "canonical": rep.canonical,
                        "theorem": tag,
                        "witness": res.witness.to_dict(),
                    }
                )
    return CatalogAudit(len(models), counts, bad)
