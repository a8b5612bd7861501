"""Order-theoretic skeleton of a weak BCC-algebra.

``x <= y`` iff ``xy = 0``. ``phi(x) = 0x``; the minimal elements are exactly
``phi(G) = {a : phi(phi(a)) = a}`` and each minimal ``a`` roots the branch
``B(a) = {x : a <= x}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .axioms import ConsistencyError, is_weak_bcc
from .model import OK, Algebra, Verdict, Witness


class NotWeakBCCError(ValueError):
    """The table does not satisfy axioms (i)-(iv)."""


class PrerequisiteError(ValueError):
    """A check was requested on an algebra that lacks its prerequisites."""


@dataclass(frozen=True)
class OrderInfo:
    leq: tuple[tuple[bool, ...], ...]
    phi: tuple[int, ...]
    kernel: frozenset[int]
    minimal: frozenset[int]
    branch_of: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.phi)

    @property
    def roots(self) -> list[int]:
        return sorted(self.minimal)

    def branch(self, root: int) -> list[int]:
        return [x for x, r in enumerate(self.branch_of) if r == root]

    def branches(self) -> dict[int, list[int]]:
        return {r: self.branch(r) for r in self.roots}

    def same_branch(self, x: int, y: int) -> bool:
        return self.branch_of[x] == self.branch_of[y]


def derive_order(a: Algebra, *, check: bool = True) -> OrderInfo:
    if check and not is_weak_bcc(a):
        raise NotWeakBCCError(f"{a.name or 'algebra'} is not a weak BCC-algebra")
    t, n = a.table, a.order
    leq = tuple(tuple(t[x][y] == 0 for y in range(n)) for x in range(n))
    phi = tuple(t[0])
    kernel = frozenset(x for x in range(n) if phi[x] == 0)
    minimal = frozenset(x for x in range(n) if phi[phi[x]] == x)
    branch_of = []
    for x in range(n):
        below = [r for r in sorted(minimal) if leq[r][x]]
        if len(below) != 1:
            raise NotWeakBCCError(f"element {x} lies above {len(below)} minimal elements")
        branch_of.append(below[0])
    return OrderInfo(leq, phi, kernel, minimal, tuple(branch_of))


def is_group_like(o: OrderInfo) -> bool:
    """Kernel of phi is {0}; cross-checked against singleton branches."""
    by_kernel = o.kernel == frozenset({0})
    by_minimal = o.minimal == frozenset(range(o.order))
    singletons = all(len(o.branch(r)) == 1 for r in o.minimal)
    if not by_kernel == by_minimal == singletons:
        raise ConsistencyError("group-like characterizations disagree")
    return by_kernel


@dataclass(frozen=True)
class RestrictedInfo:
    greatest: dict[int, int]
    roots: tuple[int, ...]
    involutory: bool | None

    @property
    def is_restricted(self) -> bool:
        return len(self.greatest) == len(self.roots)

    @property
    def has_restricted_branch(self) -> bool:
        return bool(self.greatest)


def greatest_element(o: OrderInfo, carrier) -> int | None:
    carrier = list(carrier)
    for m in carrier:
        if all(o.leq[x][m] for x in carrier):
            return m
    return None


def restricted_info(a: Algebra, o: OrderInfo) -> RestrictedInfo:
    greatest = {}
    for r in o.roots:
        m = greatest_element(o, o.branch(r))
        if m is not None:
            greatest[r] = m
    involutory = None
    if len(greatest) == len(o.roots):
        t = a.table
        involutory = all(
            t[one][t[one][x]] == x for r, one in greatest.items() for x in o.branch(r)
        )
    return RestrictedInfo(greatest, tuple(o.roots), involutory)


def n_op(a: Algebra, r: RestrictedInfo, root: int, x: int) -> int:
    """``N_a x = 1_a x`` for the branch rooted at ``root``."""
    if root not in r.greatest:
        raise PrerequisiteError(f"branch B({root}) has no greatest element")
    return a.table[r.greatest[root]][x]


def is_bck_ideal(a: Algebra, s) -> Verdict:
    """``0 in s`` and ``y, xy in s`` imply ``x in s``."""
    s = frozenset(s)
    if 0 not in s:
        return Verdict(False, Witness.of("", (), relation="in"))
    t = a.table
    for x in a.elements:
        if x in s:
            continue
        for y in sorted(s):
            if t[x][y] in s:
                return Verdict(False, Witness.of("xy", (x, y), relation="in"))
    return OK


def is_bcc_ideal(a: Algebra, s) -> Verdict:
    """``0 in s`` and, for ``y in s``, ``xy . z in s`` implies ``xz in s``."""
    s = frozenset(s)
    if 0 not in s:
        return Verdict(False, Witness.of("", (), relation="in"))
    t = a.table
    for x in a.elements:
        for y in sorted(s):
            for z in a.elements:
                if t[t[x][y]][z] in s and t[x][z] not in s:
                    return Verdict(False, Witness.of("xyz", (x, y, z), relation="in"))
    return OK


def branch_product_sets(a: Algebra, o: OrderInfo) -> dict[tuple[int, int], tuple[frozenset, frozenset]]:
    """For roots ``(a, b)``: the setwise product ``B(a)B(b)`` and ``B(ab)``."""
    t = a.table
    out = {}
    for ra in o.roots:
        for rb in o.roots:
            prod = frozenset(t[x][y] for x in o.branch(ra) for y in o.branch(rb))
            out[ra, rb] = (prod, frozenset(o.branch(t[ra][rb])))
    return out
