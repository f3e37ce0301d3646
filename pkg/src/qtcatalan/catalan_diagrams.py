"""Catalan diagrams: the sequences Lambda_n, the bijection theta and its inverse.

``theta(lambda)`` places point i at ``(n - i - lambda_i, b_i)`` where b_i
counts later j with ``lambda_i - lambda_j + i - j`` in {0, 1}.  The bidegree
census over Lambda_n reproduces the (area, dinv) table.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, isqrt
from typing import Iterator

from .diagrams import FLAVOR_D, DiagramError, PointDiagram, make_diagram
from .dyck import CatalanTable
from .phi import SizeGuardError

CENSUS_MAX_N = 9


@dataclass(frozen=True)
class StaircasePartition:
    parts: tuple

    def __post_init__(self):
        lam = tuple(int(v) for v in self.parts)
        object.__setattr__(self, "parts", lam)
        n = len(lam)
        if n == 0:
            raise ValueError("empty sequence")
        if lam[-1] != 0:
            raise ValueError(f"{lam}: last entry must be 0")
        for i, v in enumerate(lam):
            if not 0 <= v <= n - 1 - i:
                raise ValueError(f"{lam}: entry {i + 1} exceeds n - i")
            if i and v > lam[i - 1]:
                raise ValueError(f"{lam} is not weakly decreasing")

    @property
    def n(self) -> int:
        return len(self.parts)


def iter_lambda(n: int) -> Iterator[StaircasePartition]:
    """Lambda_n in lexicographic order (backtracking under lambda_i <= n - i)."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(prefix: list):
        i = len(prefix)
        if i == n - 1:
            yield StaircasePartition(tuple(prefix) + (0,))
            return
        cap = n - 1 - i if not prefix else min(prefix[-1], n - 1 - i)
        for v in range(cap + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _column_stats(points) -> tuple[Counter, dict]:
    counts: Counter = Counter()
    tops: dict = {}
    for x, y in points:
        counts[x] += 1
        tops[x] = max(tops.get(x, -1), y)
    return counts, tops


def is_catalan(d) -> bool:
    pts = list(d.points if isinstance(d, PointDiagram) else d)
    if len(set(pts)) != len(pts) or any(x < 0 or y < 0 for x, y in pts):
        return False
    ptset = set(pts)
    for x, y in pts:
        if y == 0 and any((i, 0) not in ptset for i in range(x)):
            return False
    counts, tops = _column_stats(pts)
    if not pts:
        return True
    for p in range(max(counts) + 1):
        if p not in tops:
            # an empty column must lie to the right of everything
            return False
        if counts[p + 1] + counts[p] < tops[p] + 1:
            return False
    return True


def theta(lam: StaircasePartition | tuple) -> PointDiagram:
    lam = lam if isinstance(lam, StaircasePartition) else StaircasePartition(tuple(lam))
    v = lam.parts
    n = len(v)
    pts = []
    for i in range(n):
        a = n - 1 - i - v[i]
        b = sum(1 for j in range(i + 1, n) if v[i] - v[j] + i - j in (0, 1))
        pts.append((a, b))
    d = make_diagram(pts, FLAVOR_D)
    assert is_catalan(d), f"theta({v}) = {d} is not a Catalan diagram"
    return d


def theta_inverse(d) -> StaircasePartition:
    pts = set(d.points if isinstance(d, PointDiagram) else d)
    n = len(pts)
    out = []
    while pts:
        if not is_catalan(pts):
            raise DiagramError(f"{sorted(pts)} is not a Catalan diagram")
        m = len(pts)
        counts, tops = _column_stats(pts)
        p = next(
            (c for c in sorted(tops) if counts[c + 1] + counts[c] <= tops[c] + 1),
            None,
        )
        if p is None:
            raise DiagramError(f"no column can be peeled from {sorted(pts)}")
        pts.remove((p, tops[p]))
        out.append(m - 1 - p)
    try:
        lam = StaircasePartition(tuple(out))
    except ValueError as exc:
        raise DiagramError(f"peeling produced {tuple(out)}, not in Lambda_{n}") from exc
    return lam


def census(n: int) -> CatalanTable:
    if not 1 <= n <= CENSUS_MAX_N:
        raise SizeGuardError(f"census supports 1 <= n <= {CENSUS_MAX_N}, got {n}")
    hist = Counter(theta(lam).bidegree for lam in iter_lambda(n))
    return CatalanTable(n, dict(hist))


def catalan_diagrams(n: int, bidegree: tuple | None = None) -> list[PointDiagram]:
    if not 1 <= n <= CENSUS_MAX_N:
        raise SizeGuardError(f"listing supports 1 <= n <= {CENSUS_MAX_N}, got {n}")
    out = [theta(lam) for lam in iter_lambda(n)]
    if bidegree is not None:
        out = [d for d in out if d.bidegree == tuple(bidegree)]
    return out


def embed(d: PointDiagram, ell: int) -> PointDiagram:
    """Prefix ell axis points and shift D right by ell."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    pts = [(i, 0) for i in range(ell)] + [(x + ell, y) for x, y in d.points]
    return make_diagram(pts, FLAVOR_D)


def growth_witness(d_small: PointDiagram) -> PointDiagram:
    """{(0,0),(1,0),(0,2)} together with the smaller diagram shifted right by 2."""
    return make_diagram([(0, 0), (1, 0), (0, 2)] + [(x + 2, y) for x, y in d_small.points], FLAVOR_D)


def _ceil_sqrt(m: int) -> int:
    r = isqrt(m)
    return r if r * r == m else r + 1


def construct_k0(n: int, d1: int) -> PointDiagram:
    """The Catalan diagram of bidegree (d1, C(n,2) - d1)."""
    top = comb(n, 2)
    if n < 1 or not 0 <= d1 <= top:
        raise ValueError(f"need 0 <= d1 <= {top}, got {d1}")
    # u = floor((2n + 1 - sqrt(M)) / 2) is the largest u with (2n + 1 - 2u)^2 >= M
    m = 4 * n * n - 4 * n - 8 * d1 + 9
    u = (2 * n + 1 - _ceil_sqrt(m)) // 2
    i = n * u - u * (u + 1) // 2 - d1
    xs = [u - 1] * i + [u] * (n - u - i) + list(range(u - 1, -1, -1))
    if len(xs) != n or i < 0 or n - u - i < 0:
        raise AssertionError(f"construct_k0({n}, {d1}): bad parameters u={u}, i={i}")
    ys = [sum(1 for j in range(k + 1, n) if xs[j] - xs[k] in (0, 1)) for k in range(n)]
    d = make_diagram(zip(xs, ys), FLAVOR_D)
    if d.bidegree != (d1, top - d1) or not is_catalan(d):
        raise AssertionError(f"construct_k0({n}, {d1}) produced {d} of bidegree {d.bidegree}")
    return d
