"""Total binary operations on a carrier.

Operations are always total on the ambient carrier.  Approximate closure of
a subset is a property checked elsewhere, never something the table
enforces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ClosureError, MembershipError, NotAGridError, TableError
from .proximity import DescriptiveSpace


@dataclass(frozen=True)
class OpTable:
    space: DescriptiveSpace = field(repr=False)
    table: tuple[tuple[int, ...], ...] = field(repr=False)
    name: str = "op"
    rule: str = "table"

    def __post_init__(self):
        n = len(self.space)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise TableError(f"table for {self.name!r} must be {n}x{n}")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise TableError(f"table for {self.name!r} maps outside the carrier")

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def apply(self, a, b) -> str:
        """Label-level lookup: ``add.apply("x01", "x10") == "x11"``."""
        s = self.space
        return s.labels[self.table[s.index_of(a)][s.index_of(b)]]

    def rows_by_label(self) -> list[list[str]]:
        labels = self.space.labels
        return [[labels[v] for v in row] for row in self.table]

    def with_name(self, name: str) -> OpTable:
        return OpTable(self.space, self.table, name, self.rule)


def _grid_rule(space: DescriptiveSpace, name: str, rule: str, f: Callable) -> OpTable:
    if any(c is None for c in space.coords):
        missing = [space.labels[i] for i, c in enumerate(space.coords) if c is None]
        raise NotAGridError(f"rule {rule!r} needs grid coords; missing on {missing[:5]}")
    at = {c: i for i, c in enumerate(space.coords)}
    if len(at) != len(space):
        raise NotAGridError("grid coords must be distinct")
    rows = []
    for i, ci in enumerate(space.coords):
        row = []
        for j, cj in enumerate(space.coords):
            target = f(ci, cj)
            if target not in at:
                raise ClosureError(
                    f"rule {rule!r}: {space.labels[i]} , {space.labels[j]} -> coords {target} not in carrier"
                )
            row.append(at[target])
        rows.append(tuple(row))
    return OpTable(space, tuple(rows), name, rule)


def grid_add_mod2(space: DescriptiveSpace, name: str = "add") -> OpTable:
    """x_ij + x_kl = x_nm with n = (i+k) mod 2, m = (j+l) mod 2."""
    return _grid_rule(space, name, "mod2-add", lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2))


def grid_mul_min(space: DescriptiveSpace, name: str = "mul") -> OpTable:
    """x_ij * x_kl = x_nm with n = min(i,k), m = min(j,l)."""
    return _grid_rule(space, name, "min-mul", lambda a, b: (min(a[0], b[0]), min(a[1], b[1])))


def from_table(space: DescriptiveSpace, entries, name: str = "op") -> OpTable:
    """Build a table from ``(a, b, c)`` label triples or a ``{(a, b): c}`` mapping.

    Every ordered pair must appear exactly once.
    """
    if isinstance(entries, Mapping):
        triples: Iterable = ((a, b, c) for (a, b), c in entries.items())
    else:
        triples = entries
    n = len(space)
    cells: dict[tuple[int, int], int] = {}
    for a, b, c in triples:
        try:
            key = (space.index_of(a), space.index_of(b))
            val = space.index_of(c)
        except MembershipError as exc:
            raise TableError(f"unknown element in table {name!r}: {exc}") from None
        if key in cells:
            raise TableError(f"duplicate entry for pair ({a}, {b}) in table {name!r}")
        cells[key] = val
    missing = [(space.labels[i], space.labels[j]) for i in range(n) for j in range(n) if (i, j) not in cells]
    if missing:
        raise TableError(f"incomplete table {name!r}: missing pairs {missing[:5]}")
    rows = tuple(tuple(cells[i, j] for j in range(n)) for i in range(n))
    return OpTable(space, rows, name, "table")


def from_rows(space: DescriptiveSpace, rows: Sequence[Sequence], name: str = "op") -> OpTable:
    """Row-major table given by labels (or indices): ``rows[i][j] = i op j``."""
    n = len(space)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise TableError(f"table {name!r} must have {n} rows of {n} entries")
    triples = ((i, j, rows[i][j]) for i in range(n) for j in range(n))
    return from_table(space, triples, name)


def from_function(space: DescriptiveSpace, f: Callable[[int, int], int], name: str = "op") -> OpTable:
    n = len(space)
    return OpTable(space, tuple(tuple(f(i, j) for j in range(n)) for i in range(n)), name, "table")
