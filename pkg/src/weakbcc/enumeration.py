"""Enumeration of weak BCC-algebras up to isomorphism.

The search fills the free cells of the table row by row (column 0 and the
diagonal are forced by ``x0 = x`` and ``xx = 0``), pruning any partial table
that already violates axiom (i) on a fully defined triple or axiom (iv) on a
defined pair. A complete table is kept iff it is the lexicographically least
of its relabelings fixing 0, so each isomorphism class appears exactly once.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable

from .axioms import ClassReport, classify
from .model import Algebra, read_table, relabel, write_table
from .structure import derive_order, is_group_like


@dataclass(frozen=True)
class IsoCertificate:
    mapping: tuple[int, ...]

    def verify(self, a: Algebra, b: Algebra) -> bool:
        f, ta, tb = self.mapping, a.table, b.table
        return (
            a.order == b.order
            and f[0] == 0
            and sorted(f) == list(range(a.order))
            and all(f[ta[x][y]] == tb[f[x]][f[y]] for x in a.elements for y in a.elements)
        )


# --- canonical forms -------------------------------------------------------------


@lru_cache(maxsize=None)
def _relabelings(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """``(perm, inverse)`` for every permutation fixing 0."""
    out = []
    for rest in itertools.permutations(range(1, n)):
        perm = (0,) + rest
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        out.append((perm, tuple(inv)))
    return tuple(out)


def _canonical_flat(flat: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    best = None
    best_perm = None
    cells = [(i * n, j) for i in range(n) for j in range(n)]
    for perm, inv in _relabelings(n):
        cand = tuple(perm[flat[inv[i // n] * n + inv[j]]] for i, j in cells)
        if best is None or cand < best:
            best, best_perm = cand, perm
    return best, best_perm


def canonical_form(a: Algebra) -> bytes:
    """Row-major bytes of the least table among relabelings fixing 0."""
    return bytes(_canonical_flat(a.flat(), a.order)[0])


def canonical_algebra(a: Algebra) -> Algebra:
    _, perm = _canonical_flat(a.flat(), a.order)
    return relabel(a, perm)


def from_canonical(data: bytes, name: str | None = None) -> Algebra:
    n = int(round(len(data) ** 0.5))
    if n * n != len(data):
        raise ValueError("canonical bytes do not form a square table")
    return Algebra(n, tuple(tuple(data[i * n:(i + 1) * n]) for i in range(n)), None, name)


def short_hash(data: bytes) -> str:
    return hashlib.sha1(data).hexdigest()[:12]


# --- isomorphism -----------------------------------------------------------------


def _element_invariants(a: Algebra) -> list[tuple]:
    t, n = a.table, a.order
    try:
        o = derive_order(a, check=False)
        branch_size = {r: len(o.branch(r)) for r in o.minimal}
        bsize = [branch_size[o.branch_of[x]] for x in range(n)]
        minimal = [x in o.minimal for x in range(n)]
    except ValueError:
        bsize = [0] * n
        minimal = [False] * n
    phi = t[0]
    return [
        (
            sum(v == 0 for v in t[x]),
            sum(t[y][x] == 0 for y in range(n)),
            bsize[x],
            minimal[x],
            phi[x] == 0,
            t[x][x] == 0,
            sum(t[x][y] == x for y in range(n)),
        )
        for x in range(n)
    ]


def fingerprint(a: Algebra) -> tuple:
    """Relabeling-invariant summary used to reject non-isomorphic pairs early."""
    return (a.order, tuple(sorted(_element_invariants(a))))


def are_isomorphic(a: Algebra, b: Algebra) -> IsoCertificate | None:
    """Backtracking search for an isomorphism; 0 is always mapped to 0."""
    if a.order != b.order:
        return None
    n = a.order
    ia, ib = _element_invariants(a), _element_invariants(b)
    if sorted(ia) != sorted(ib) or ia[0] != ib[0]:
        return None
    ta, tb = a.table, b.table
    f = [-1] * n
    used = [False] * n
    f[0] = 0
    used[0] = True

    def consistent(x: int) -> bool:
        fx = f[x]
        for y in range(n):
            fy = f[y]
            if fy < 0:
                continue
            for u, v, fu, fv in ((x, y, fx, fy), (y, x, fy, fx)):
                w = ta[u][v]
                if f[w] >= 0 and f[w] != tb[fu][fv]:
                    return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return True
        for c in range(1, n):
            if used[c] or ib[c] != ia[x]:
                continue
            f[x], used[c] = c, True
            if consistent(x) and search(x + 1):
                return True
            f[x], used[c] = -1, False
        return False

    if not search(1):
        return None
    cert = IsoCertificate(tuple(f))
    assert cert.verify(a, b)
    return cert


# --- exhaustive search -----------------------------------------------------------


def _free_cells(n: int) -> list[int]:
    return [r * n + c for r in range(n) for c in range(1, n) if c != r]


def _initial(n: int) -> list[int]:
    t = [-1] * (n * n)
    for x in range(n):
        t[x * n] = x
        t[x * n + x] = 0
    return t


def _consistent(t: list[int], n: int, triples) -> bool:
    for x_y, z_y, x_z in triples:
        xy = t[x_y]
        if xy < 0:
            continue
        zy = t[z_y]
        if zy < 0:
            continue
        u = t[xy * n + zy]
        if u < 0:
            continue
        xz = t[x_z]
        if xz < 0:
            continue
        if t[u * n + xz] > 0:
            return False
    return True


def _search(n: int, prefix: tuple[int, ...]) -> list[bytes]:
    """Canonical tables in the subtree whose first free cells take ``prefix``."""
    cells = _free_cells(n)
    triples = [
        (x * n + y, z * n + y, x * n + z)
        for x in range(n)
        for y in range(n)
        for z in range(n)
    ]
    t = _initial(n)
    for cell, v in zip(cells, prefix):
        r, c = divmod(cell, n)
        if v == 0 and t[c * n + r] == 0:
            return []
        t[cell] = v
    if not _consistent(t, n, triples):
        return []
    found: list[bytes] = []

    def rec(i: int) -> None:
        if i == len(cells):
            flat = tuple(t)
            if _canonical_flat(flat, n)[0] == flat:
                found.append(bytes(flat))
            return
        cell = cells[i]
        r, c = divmod(cell, n)
        back = t[c * n + r]
        for v in range(n):
            if v == 0 and back == 0:
                continue
            t[cell] = v
            if _consistent(t, n, triples):
                rec(i + 1)
        t[cell] = -1

    rec(len(prefix))
    return found


def _prefixes(n: int, depth: int = 2) -> list[tuple[int, ...]]:
    depth = min(depth, len(_free_cells(n)))
    return list(itertools.product(range(n), repeat=depth))


@dataclass(frozen=True)
class CatalogEntry:
    canonical: bytes
    report: ClassReport

    @property
    def algebra(self) -> Algebra:
        return from_canonical(self.canonical, short_hash(self.canonical))

    @property
    def key(self) -> str:
        return short_hash(self.canonical)


@dataclass(frozen=True)
class Catalog:
    order: int
    entries: tuple[CatalogEntry, ...]
    filter: str | None = None

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def algebras(self) -> list[Algebra]:
        return [e.algebra for e in self.entries]


def _solid(a: Algebra) -> bool:
    from .properties import is_solid

    return bool(is_solid(a, derive_order(a)))


def _condition_s(a: Algebra) -> bool:
    from .properties import condition_s

    return condition_s(a, derive_order(a)).holds


FILTERS: dict[str, Callable[[Algebra, ClassReport], bool]] = {
    "weakbcc": lambda a, r: r.is_weak_bcc,
    "bcc": lambda a, r: r.is_bcc,
    "bck": lambda a, r: r.is_bck,
    "bci": lambda a, r: r.is_bci,
    "proper": lambda a, r: r.is_proper,
    "solid": lambda a, r: _solid(a),
    "group-like": lambda a, r: is_group_like(derive_order(a)),
    "condition-s": lambda a, r: _condition_s(a),
}


@lru_cache(maxsize=None)
def _all_canonical(n: int, jobs: int) -> tuple[bytes, ...]:
    prefixes = _prefixes(n)
    if jobs > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search, [n] * len(prefixes), prefixes))
    else:
        parts = [_search(n, p) for p in prefixes]
    return tuple(sorted(itertools.chain.from_iterable(parts)))


def enumerate_order(
    n: int,
    filter: str | Callable[[Algebra, ClassReport], bool] | None = None,
    *,
    jobs: int | None = 1,
) -> Catalog:
    """All weak BCC-algebras of order ``n``, one per isomorphism class.

    ``filter`` is a name from :data:`FILTERS` or a predicate
    ``(algebra, class_report) -> bool``; it is applied after the canonicity
    test, so counts are counts of isomorphism classes. ``jobs=None`` uses
    every processor.
    """
    if n < 1:
        raise ValueError("order must be positive")
    jobs = (os.cpu_count() or 1) if jobs is None else max(1, jobs)
    if isinstance(filter, str):
        if filter not in FILTERS:
            raise KeyError(f"unknown filter {filter!r}")
        pred, label = FILTERS[filter], filter
    else:
        pred, label = filter, getattr(filter, "__name__", None)
    entries = []
    for data in _all_canonical(n, 1 if n < 5 else jobs):
        a = from_canonical(data)
        rep = classify(a)
        if pred is None or pred(a, rep):
            entries.append(CatalogEntry(data, rep))
    return Catalog(n, tuple(entries), label)


def naive_enumerate(n: int) -> set[bytes]:
    """Generate-and-test over every free-cell assignment, reduced by isomorphism."""
    from .axioms import is_weak_bcc

    cells = _free_cells(n)
    out = set()
    for values in itertools.product(range(n), repeat=len(cells)):
        t = _initial(n)
        for cell, v in zip(cells, values):
            t[cell] = v
        a = Algebra(n, tuple(tuple(t[i * n:(i + 1) * n]) for i in range(n)))
        if is_weak_bcc(a):
            out.add(canonical_form(a))
    return out


# --- persistence -------------------------------------------------------------------


def save_catalog(cat: Catalog, out: str | Path) -> Path:
    """Write ``<out>/order<n>/<hash>.bcc`` files plus ``index.json``."""
    d = Path(out) / f"order{cat.order}"
    d.mkdir(parents=True, exist_ok=True)
    index = {"order": cat.order, "filter": cat.filter, "count": len(cat), "entries": []}
    for e in cat.entries:
        write_table(e.algebra, d / f"{e.key}.bcc")
        index["entries"].append({"file": f"{e.key}.bcc", "canonical": list(e.canonical), **e.report.flags()})
    (d / "index.json").write_text(json.dumps(index, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return d


def load_catalog(path: str | Path) -> list[Algebra]:
    """Algebras of a saved catalog directory (or any directory of ``.bcc`` files)."""
    d = Path(path)
    idx = d / "index.json"
    if idx.exists():
        files = [d / e["file"] for e in json.loads(idx.read_text(encoding="utf-8"))["entries"]]
    else:
        files = sorted(d.glob("*.bcc"))
    return [read_table(f) for f in files]
