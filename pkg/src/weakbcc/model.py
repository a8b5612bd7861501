"""Finite algebras of type (2, 0) stored as Cayley tables.

Element ``0`` is always index 0. Tables are immutable tuples of tuples so an
:class:`Algebra` can be hashed, shared between processes and compared
directly.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 64
HEADER = "bcc v1"

__all__ = [
    "Algebra",
    "Witness",
    "Verdict",
    "ParseError",
    "parse_table",
    "serialize",
    "read_table",
    "write_table",
    "product",
    "right_power",
    "relabel",
    "load_fixture",
    "fixture_names",
    "fixtures",
]


class ParseError(ValueError):
    """Raised for malformed table text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.reason = message
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class Algebra:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"table is not {n}x{n}")
        for i, row in enumerate(table):
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"entry {v} in row {i} out of range [0, {n})")
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("labels must be pairwise distinct")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels=None, name=None) -> "Algebra":
        rows = [list(map(int, r)) for r in rows]
        return cls(len(rows), tuple(tuple(r) for r in rows), labels, name)

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.table))


@dataclass(frozen=True)
class Witness:
    """A concrete assignment at which a universally quantified law fails.

    ``relation`` is ``"="`` for equations (``lhs != rhs``), ``"<="`` for
    order inequalities (``lhs * rhs != 0``) and ``"in"`` for membership or
    implication failures, where ``lhs``/``rhs`` may be ``None``.
    """

    assignment: tuple[tuple[str, int], ...]
    lhs: int | None = None
    rhs: int | None = None
    relation: str = "="

    @classmethod
    def of(cls, names: str, values: Iterable[int], lhs=None, rhs=None, relation="="):
        return cls(tuple(zip(names, (int(v) for v in values))), lhs, rhs, relation)

    def values(self) -> dict[str, int]:
        return dict(self.assignment)

    def to_dict(self) -> dict:
        return {
            "assignment": [[k, v] for k, v in self.assignment],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
        }


class Verdict(tuple):
    """``(holds, witness)`` pair that is truthy iff the law holds."""

    __slots__ = ()

    def __new__(cls, holds: bool, witness: Witness | None = None):
        return super().__new__(cls, (bool(holds), witness))

    @property
    def holds(self) -> bool:
        return self[0]

    @property
    def witness(self) -> Witness | None:
        return self[1]

    def __bool__(self):
        return self[0]

    def __repr__(self):
        return f"Verdict(holds={self[0]}, witness={self[1]!r})"


OK = Verdict(True)


def product(a: Algebra, x: int, y: int) -> int:
    n = a.order
    if not (0 <= x < n and 0 <= y < n):
        raise IndexError(f"element index out of range for order {n}: ({x}, {y})")
    return a.table[x][y]


def right_power(a: Algebra, x: int, y: int, k: int) -> int:
    """``x y^k``: ``x`` multiplied on the right by ``y``, ``k`` times."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    product(a, x, y)
    t = a.table
    for _ in range(k):
        x = t[x][y]
    return x


def relabel(a: Algebra, perm: Sequence[int]) -> Algebra:
    """Image of ``a`` under the bijection ``x -> perm[x]``.

    The new table satisfies ``b(perm[x], perm[y]) == perm[a(x, y)]``.
    """
    n = a.order
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the universe")
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    t = a.table
    rows = tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    labels = None if a.labels is None else tuple(a.labels[inv[i]] for i in range(n))
    return Algebra(n, rows, labels, a.name)


# --- text format -----------------------------------------------------------

_KEY = re.compile(r"^(name|labels|n)\s*=\s*(.*)$")


def parse_table(text: str) -> Algebra:
    """Parse the ``.bcc`` text format.

    The ``bcc v1`` header is accepted but not required. Only the shape of the
    table is validated here.
    """
    name = labels = None
    order = None
    rows: list[tuple[int, ...]] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            if line == HEADER:
                if saw_header or name is not None or labels is not None:
                    raise ParseError("header must come first", lineno)
                saw_header = True
                continue
            if line.startswith("bcc"):
                raise ParseError(f"unsupported header {line!r}", lineno)
            m = _KEY.match(line)
            if m is None:
                raise ParseError(f"expected 'n=<order>' before table rows, got {line!r}", lineno)
            key, value = m.group(1), m.group(2).strip()
            if key == "name":
                name = value
            elif key == "labels":
                labels = [s.strip() for s in value.split(",")]
                dup = {s for s in labels if labels.count(s) > 1}
                if dup:
                    raise ParseError(f"duplicate label(s) {sorted(dup)}", lineno)
            else:
                try:
                    order = int(value)
                except ValueError:
                    raise ParseError(f"order is not an integer: {value!r}", lineno) from None
                if not 1 <= order <= MAX_ORDER:
                    raise ParseError(f"order must be in [1, {MAX_ORDER}]", lineno)
                if labels is not None and len(labels) != order:
                    raise ParseError(f"{len(labels)} labels for order {order}", lineno)
            continue
        if len(rows) == order:
            raise ParseError(f"non-square table: more than {order} rows", lineno)
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != order:
            raise ParseError(f"non-square table: row has {len(row)} entries, expected {order}", lineno)
        for v in row:
            if not 0 <= v < order:
                raise ParseError(f"entry {v} out of range [0, {order})", lineno)
        rows.append(row)
    if order is None:
        raise ParseError("missing 'n=<order>' line")
    if len(rows) != order:
        raise ParseError(f"non-square table: {len(rows)} rows for n={order}")
    return Algebra(order, tuple(rows), labels, name)


def serialize(a: Algebra) -> str:
    lines = [HEADER]
    if a.name:
        lines.append(f"name={a.name}")
    if a.labels:
        lines.append("labels=" + ",".join(a.labels))
    lines.append(f"n={a.order}")
    lines += [" ".join(map(str, row)) for row in a.table]
    return "\n".join(lines) + "\n"


def read_table(path: str | Path) -> Algebra:
    path = Path(path)
    a = parse_table(path.read_text(encoding="utf-8"))
    if a.name is None:
        a = Algebra(a.order, a.table, a.labels, path.stem)
    return a


def write_table(a: Algebra, path: str | Path) -> None:
    Path(path).write_text(serialize(a), encoding="utf-8")


# --- shipped fixture corpus --------------------------------------------------

FIXTURE_NAMES = ("TRIV1", "Z2GL", "E63", "E77", "EX31", "EX56", "EX611", "E76", "EX28")


def fixture_names() -> tuple[str, ...]:
    return FIXTURE_NAMES


def load_fixture(name: str) -> Algebra:
    ref = resources.files("weakbcc") / "fixtures" / f"{name}.bcc"
    if not ref.is_file():
        raise KeyError(f"unknown fixture {name!r}")
    return parse_table(ref.read_text(encoding="utf-8"))


def fixtures() -> dict[str, Algebra]:
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
