"""Dyck paths, the (area, dinv) statistics and the q,t-Catalan coefficient table.

Rows are numbered bottom to top; ``a_i`` is the number of full squares in
row i between the path and the diagonal.  dinv counts pairs i < j with
``a_i == a_j`` or ``a_i == a_j + 1``.  With this convention
``area + dinv <= C(n, 2)`` and the n = 7 table matches the published grid.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .partitions import count_partitions, count_partitions_bounded
from .phi import SizeGuardError

DYCK_MAX_N = 14


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s not in "NE":
                raise ValueError(f"bad step {s!r}")
            height += 1 if s == "N" else -1
            if height < 0:
                raise ValueError(f"{self.steps} dips below the diagonal")
        if height != 0:
            raise ValueError(f"{self.steps} does not end on the diagonal")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    @property
    def area_vector(self) -> tuple:
        out = []
        east = 0
        for s in self.steps:
            if s == "N":
                out.append(len(out) - east)
            else:
                east += 1
        return tuple(out)

    @classmethod
    def from_area_vector(cls, a) -> "DyckPath":
        a = list(a)
        if a and a[0] != 0:
            raise ValueError("area vector must start with 0")
        steps = []
        east = 0
        for i, ai in enumerate(a):
            if i and ai > a[i - 1] + 1:
                raise ValueError("area vector may rise by at most 1 per row")
            # x-position of the i-th north step is i - a_i
            steps.append("E" * (i - ai - east))
            east = i - ai
            steps.append("N")
        steps.append("E" * (len(a) - east))
        return cls("".join(steps))

    @property
    def area(self) -> int:
        return sum(self.area_vector)

    @property
    def dinv(self) -> int:
        return dinv_of(self.area_vector)


def dinv_of(a) -> int:
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] == a[j] or a[i] == a[j] + 1)


def stats(p: DyckPath) -> tuple[int, int]:
    a = p.area_vector
    return sum(a), dinv_of(a)


def _guard(n: int) -> None:
    if not 1 <= n <= DYCK_MAX_N:
        raise SizeGuardError(f"Dyck enumeration supports 1 <= n <= {DYCK_MAX_N}, got {n}")


def iter_area_vectors(n: int) -> Iterator[tuple]:
    """All area vectors of length n, iteratively in lexicographic order."""
    _guard(n)
    a = [0]
    while True:
        if len(a) == n:
            yield tuple(a)
            # backtrack: bump the deepest position that can still increase
            while a:
                last = a.pop()
                if a and last < a[-1] + 1:
                    a.append(last + 1)
                    break
            if not a:
                return
        else:
            a.append(0)


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    for a in iter_area_vectors(n):
        yield DyckPath.from_area_vector(a)


@dataclass
class CatalanTable:
    """Coefficients of q^d1 t^d2 in C_n(q, t), stored sparsely."""

    n: int
    coeffs: dict

    @property
    def max_degree(self) -> int:
        return comb(self.n, 2)

    def __getitem__(self, key) -> int:
        return self.coeffs.get(tuple(key), 0)

    @property
    def total(self) -> int:
        return sum(self.coeffs.values())

    def entries(self) -> list:
        return sorted(self.coeffs.items())

    def grid(self) -> list[list[int]]:
        """Rows from t^max down to t^0; row t^j lists q^0 .. q^(max - j)."""
        m = self.max_degree
        return [[self[i, j] for i in range(m - j + 1)] for j in range(m, -1, -1)]

    def is_symmetric(self) -> bool:
        return all(self[d2, d1] == c for (d1, d2), c in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CatalanTable):
            return NotImplemented
        return self.n == other.n and {k: v for k, v in self.coeffs.items() if v} == {
            k: v for k, v in other.coeffs.items() if v
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d1", "d2", "coeff"])
        for (d1, d2), c in self.entries():
            w.writerow([d1, d2, c])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "entries": [[d1, d2, str(c)] for (d1, d2), c in self.entries()]})

    @classmethod
    def from_json(cls, text: str) -> "CatalanTable":
        obj = json.loads(text)
        return cls(obj["n"], {(d1, d2): int(c) for d1, d2, c in obj["entries"]})

    @classmethod
    def from_csv(cls, n: int, text: str) -> "CatalanTable":
        rows = list(csv.DictReader(io.StringIO(text)))
        return cls(n, {(int(r["d1"]), int(r["d2"])): int(r["coeff"]) for r in rows})

    def format_grid(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.grid())


def build_table(n: int) -> CatalanTable:
    """Histogram of (area, dinv) over all Dyck paths of size n.

    Depth-first over area vectors with dinv updated incrementally: appending
    value v adds (#earlier v) + (#earlier v + 1).
    """
    _guard(n)
    counts = [0] * (n + 1)
    hist: dict = {}
    # explicit stack of (position, value, area_so_far, dinv_so_far); a
    # negative position marks the undo of counts[value]
    stack = [(0, 0, 0, 0)]
    while stack:
        pos, v, area, dv = stack.pop()
        if pos < 0:
            counts[v] -= 1
            continue
        dv += counts[v] + counts[v + 1]
        area += v
        if pos == n - 1:
            key = (area, dv)
            hist[key] = hist.get(key, 0) + 1
            continue
        counts[v] += 1
        stack.append((-1, v, 0, 0))
        for nv in range(v + 1, -1, -1):
            stack.append((pos + 1, nv, area, dv))
    return CatalanTable(n, hist)


def specialize_qq(table: CatalanTable) -> list[int]:
    """Coefficients s_0 .. s_max of C_n(q, q)."""
    m = table.max_degree
    out = [0] * (m + 1)
    for (d1, d2), c in table.coeffs.items():
        out[d1 + d2] += c
    return out


def corollary_b_formula(n: int, k: int) -> int:
    """Closed form of the coefficient of q^(C(n,2) - k) in C_n(q, q) for k <= n - 3."""
    if not 0 <= k <= n - 3:
        raise ValueError(f"closed form holds for 0 <= k <= n - 3, got k={k}, n={n}")
    return count_partitions(k) * (comb(n, 2) - 3 * k + 1) + 2 * sum(
        count_partitions_bounded(i, k) for i in range(1, k)
    )
