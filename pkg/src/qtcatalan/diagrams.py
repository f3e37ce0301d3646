"""Point diagrams: finite sets of lattice points in canonical order.

A point ``(x, y)`` has size ``|P| = x + y``.  Points are ordered by size and
then by ``x``.  Two flavours are supported: ``"D"`` (x >= 0, y >= 0) and
``"D'"`` (y >= 0, x + y >= 0).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .partitions import Partition

FLAVOR_D = "D"
FLAVOR_DPRIME = "D'"

Point = tuple


class DiagramError(ValueError):
    """Invalid diagram data (duplicates, coordinate constraints, bad syntax)."""


def point_key(p: Point) -> tuple:
    return (p[0] + p[1], p[0])


def _check_point(p: Point, flavor: str) -> None:
    x, y = p
    if y < 0:
        raise DiagramError(f"point {p} has negative y")
    if flavor == FLAVOR_D and x < 0:
        raise DiagramError(f"point {p} has negative x, not allowed in flavor D")
    if x + y < 0:
        raise DiagramError(f"point {p} has x + y < 0")


@dataclass(frozen=True)
class PointDiagram:
    points: tuple
    flavor: str = FLAVOR_DPRIME

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (sum(p[0] for p in self.points), sum(p[1] for p in self.points))

    @property
    def sizes(self) -> tuple:
        return tuple(x + y for x, y in self.points)

    @property
    def deficit(self) -> int:
        return comb(self.n, 2) - sum(self.sizes)

    @property
    def delta(self) -> int:
        return min(self.bidegree)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def translate(self, dx: int, dy: int, flavor: str | None = None) -> "PointDiagram":
        return make_diagram([(x + dx, y + dy) for x, y in self.points], flavor or self.flavor)

    def as_flavor(self, flavor: str) -> "PointDiagram":
        return make_diagram(self.points, flavor)

    def __str__(self) -> str:
        return format_diagram(self)


def make_diagram(points: Iterable[Sequence[int]], flavor: str = FLAVOR_DPRIME) -> PointDiagram:
    """Validate and canonically sort a list of points."""
    if flavor not in (FLAVOR_D, FLAVOR_DPRIME):
        raise DiagramError(f"unknown flavor {flavor!r}")
    pts = [(int(p[0]), int(p[1])) for p in points]
    if len(set(pts)) != len(pts):
        dup = sorted({p for p in pts if pts.count(p) > 1})
        raise DiagramError(f"duplicate points {dup}")
    for p in pts:
        _check_point(p, flavor)
    return PointDiagram(tuple(sorted(pts, key=point_key)), flavor)


def in_D(points: Iterable[Point]) -> bool:
    return all(x >= 0 and y >= 0 for x, y in points)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_diagram(text: str, flavor: str | None = None) -> PointDiagram:
    """Parse ``"(-1,1);(0,0);(0,1)"``.  Flavor defaults to D when every x >= 0."""
    chunks = [c for c in re.sub(r"\s+", "", text).split(";") if c]
    pts = []
    for chunk in chunks:
        m = _PAIR.fullmatch(chunk)
        if not m:
            raise DiagramError(f"cannot parse point {chunk!r}")
        pts.append((int(m.group(1)), int(m.group(2))))
    if flavor is None:
        flavor = FLAVOR_D if in_D(pts) else FLAVOR_DPRIME
    return make_diagram(pts, flavor)


def format_diagram(d: PointDiagram | Iterable[Point]) -> str:
    return ";".join(f"({x},{y})" for x, y in d)


def staircase_marks(d: PointDiagram) -> list[int]:
    """1-based indices i with |P_i| = i - 1."""
    return [i + 1 for i, s in enumerate(d.sizes) if s == i]


def blocks(d: PointDiagram) -> list[PointDiagram]:
    """Split at the indices with |P_i| = i - 1, shifting block r left by i_r - 1."""
    marks = staircase_marks(d)
    if not marks or marks[0] != 1:
        raise DiagramError("block decomposition needs |P_1| = 0")
    bounds = marks + [d.n + 1]
    out = []
    for start, stop in zip(bounds, bounds[1:]):
        piece = [(x - (start - 1), y) for x, y in d.points[start - 1:stop - 1]]
        out.append(make_diagram(piece, FLAVOR_DPRIME))
    return out


def is_staircase(d: PointDiagram) -> bool:
    return all(s in (i, i - 1) for i, s in enumerate(d.sizes))


@dataclass(frozen=True)
class StaircaseForm:
    diagram: PointDiagram

    def __post_init__(self):
        if not is_staircase(self.diagram):
            raise DiagramError(f"{self.diagram} is not a minimal staircase form")

    @property
    def marks(self) -> frozenset:
        return frozenset(staircase_marks(self.diagram))

    @property
    def partition_type(self) -> Partition:
        return partition_type(self)


def partition_type(form: StaircaseForm | PointDiagram) -> Partition:
    d = form.diagram if isinstance(form, StaircaseForm) else form
    if not is_staircase(d):
        raise DiagramError(f"{d} is not a minimal staircase form")
    marks = staircase_marks(d)
    gaps = [marks[0] - 1]
    gaps += [b - a - 1 for a, b in zip(marks, marks[1:])]
    gaps.append(d.n - marks[-1])
    return Partition.from_parts(g for g in gaps if g > 0)


def special_staircase(m: int, n: int, r: Sequence[int], s: Sequence[int]) -> StaircaseForm:
    """Axis staircase with (r_i - 1, 1) added and (r_i + s_i, 0) removed."""
    r, s = list(r), list(s)
    if len(r) != m or len(s) != m:
        raise DiagramError("r and s must have length m")
    bounds = r + [n]
    if m and r[0] < 1:
        raise DiagramError("r_1 must be >= 1")
    for i in range(m):
        if not bounds[i] < bounds[i + 1]:
            raise DiagramError("need 1 <= r_1 < ... < r_m < n")
        if not 0 <= s[i] <= bounds[i + 1] - bounds[i] - 1:
            raise DiagramError(f"s_{i + 1} = {s[i]} out of range")
    pts = set((i, 0) for i in range(n))
    pts |= {(ri - 1, 1) for ri in r}
    pts -= {(ri + si, 0) for ri, si in zip(r, s)}
    return StaircaseForm(make_diagram(pts, FLAVOR_D))


def transpose(d: PointDiagram) -> PointDiagram:
    if d.flavor != FLAVOR_D and not in_D(d.points):
        raise DiagramError("transpose needs nonnegative coordinates")
    return make_diagram([(y, x) for x, y in d.points], FLAVOR_D)
