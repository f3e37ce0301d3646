"""The map phi from point diagrams to Z[rho], in both defining forms.

``phi_determinant`` is the production path.  ``phi_permutation`` sums over
all of S_n literally and is kept as an independent oracle.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod

from .diagrams import (
    FLAVOR_D,
    DiagramError,
    PointDiagram,
    blocks,
    make_diagram,
    point_key,
)
from .partitions import Partition, enumerate_partitions_bounded
from .rho import RhoPoly, determinant, h_series, permutation_sign

PERMUTATION_MAX_N = 9
DETERMINANT_MAX_N = 14
SELF_CHECK_MAX_N = 6


class SizeGuardError(ValueError):
    """Input exceeds the supported size envelope of an exponential algorithm."""


def _as_diagram(d) -> PointDiagram:
    return d if isinstance(d, PointDiagram) else make_diagram(d)


def _sign_k(k: int) -> int:
    return -1 if k % 2 else 1


def phi_permutation(d) -> RhoPoly:
    """Literal sum over sigma in S_n of sgn(sigma) * prod_i h(b_i, sigma(i) - 1 - |P_i|).

    sigma is built one row at a time and a branch is dropped as soon as a
    factor vanishes, so only permutations with nonzero terms are visited.
    """
    d = _as_diagram(d)
    n = d.n
    if n > PERMUTATION_MAX_N:
        raise SizeGuardError(f"phi_permutation supports n <= {PERMUTATION_MAX_N}, got {n}")
    factors = []
    for (_, y), size in zip(d.points, d.sizes):
        row = {}
        for col in range(n):
            s = col - size
            if s < 0 or (y == 0 and s > 0):
                continue
            row[col] = RhoPoly.constant(1) if y == 0 else _weak_composition_sum(y, s)
        factors.append(row)
    total = RhoPoly()

    def walk(i: int, used: int, inversions: int, acc: RhoPoly) -> None:
        nonlocal total
        if i == n:
            total = total + (acc if inversions % 2 == 0 else -acc)
            return
        for col, f in factors[i].items():
            if used >> col & 1:
                continue
            # earlier rows that took a larger column form inversions with this one
            inv = bin(used >> col).count("1")
            walk(i + 1, used | 1 << col, inversions + inv, acc * f)

    walk(0, 0, 0, RhoPoly.constant(1))
    return total * _sign_k(d.deficit)


@lru_cache(maxsize=None)
def _weak_composition_sum(b: int, s: int) -> RhoPoly:
    # sum of rho_{w_1} ... rho_{w_b} over (w_1..w_b) in N^b with sum s, rho_0 = 1;
    # spelled out independently of h_series so the oracle stays separate
    acc: dict = defaultdict(int)

    def rec(left: int, slots: int, parts: tuple):
        if slots == 0:
            if left == 0:
                acc[tuple(sorted(p for p in parts if p))] += 1
            return
        for w in range(left + 1):
            rec(left - w, slots - 1, parts + (w,))

    rec(s, b, ())
    return RhoPoly(acc)


def phi_matrix(d: PointDiagram) -> list[list[RhoPoly]]:
    n = d.n
    return [[h_series(y, j - s) for j in range(n)] for (x, y), s in zip(d.points, d.sizes)]


def phi_determinant(d) -> RhoPoly:
    d = _as_diagram(d)
    if d.n > DETERMINANT_MAX_N:
        raise SizeGuardError(f"phi_determinant supports n <= {DETERMINANT_MAX_N}, got {d.n}")
    if any(s >= i + 1 for i, s in enumerate(d.sizes)):
        # some |P_i| >= i: the matrix has a zero lower-left block
        return RhoPoly()
    return determinant(phi_matrix(d)) * _sign_k(d.deficit)


def phi(d, method: str = "det", self_check: bool | None = None) -> RhoPoly:
    """phi(D).  ``method`` is ``det``, ``perm`` or ``both`` (which cross-checks)."""
    d = _as_diagram(d)
    if self_check is None:
        self_check = d.n <= SELF_CHECK_MAX_N and method == "det"
    if method == "perm":
        return phi_permutation(d)
    value = phi_determinant(d)
    if method == "both" or self_check:
        other = phi_permutation(d)
        if other != value:
            raise AssertionError(f"phi definitions disagree on {d}: {value} vs {other}")
    elif method != "det":
        raise ValueError(f"unknown method {method!r}")
    return value


def phi_blockwise(d) -> RhoPoly:
    """phi as the product of phi over the blocks of D.

    Agrees with ``phi`` everywhere; only the blocks are subject to the
    determinant size guard, so long diagrams made of short blocks work.
    """
    d = _as_diagram(d)
    if any(s >= i + 1 for i, s in enumerate(d.sizes)):
        return RhoPoly()
    out = RhoPoly.constant(1)
    for b in blocks(d):
        out = out * phi_determinant(b)
    return out


@dataclass(frozen=True)
class FormalSum:
    """A formal linear combination of diagrams of one bidegree."""

    terms: tuple

    def __post_init__(self):
        degs = {d.bidegree for _, d in self.terms}
        if len(degs) > 1:
            raise DiagramError(f"formal sum mixes bidegrees {sorted(degs)}")

    @classmethod
    def of(cls, *pairs) -> "FormalSum":
        return cls(tuple((c, _as_diagram(d)) for c, d in pairs))

    @property
    def bidegree(self):
        return self.terms[0][1].bidegree if self.terms else None


def phi_sum(s: FormalSum) -> RhoPoly:
    total = RhoPoly()
    for c, d in s.terms:
        if isinstance(c, Fraction) and c.denominator != 1:
            raise ValueError("phi_sum works over the integers; rational coefficients are not supported")
        total = total + phi(d) * int(c)
    return total


def vandermonde_constant(d) -> int:
    """c with phi(D) = c * rho_1**C(n,2) for diagrams whose points all have |P| = 0."""
    d = _as_diagram(d)
    if any(d.sizes):
        raise DiagramError("vandermonde_constant needs |P_i| = 0 for every point")
    b = [y for _, y in d.points]
    n = d.n
    num = prod(b[i] - b[j] for i in range(n) for j in range(i + 1, n))
    den = prod(factorial(i) for i in range(1, n))
    c, rem = divmod(num, den)
    assert rem == 0 and c > 0, f"non-integral Vandermonde quotient {num}/{den}"
    return c


@dataclass
class StaircaseExpansion:
    source: PointDiagram
    N: int
    coefficients: dict = field(default_factory=dict)

    def as_rho(self) -> RhoPoly:
        return RhoPoly({tuple(mu): a for mu, a in self.coefficients.items()})


EXPAND_MAX_N = 5


def expand_to_staircase(d, verify: bool = True) -> StaircaseExpansion:
    """Coefficients a_mu of phi(D) in the basis of special staircase forms.

    Pads D with the axis points (0,0), ..., (N-1,0), N = (y-degree)(k+1) + 1,
    then pushes every unit of y-degree, one at a time, down onto the axis.
    Each choice of landing offsets w in [0, k] yields a diagram; those that
    end in a special minimal staircase form contribute the sign of the
    permutation sorting them into canonical order, grouped by partition type.
    """
    d = source = _as_diagram(d)
    shift = max(0, -min(x for x, _ in d.points))
    if shift:
        # prefix (0,0)..(shift-1,0) and shift right: phi is unchanged
        d = make_diagram([(i, 0) for i in range(shift)] + [(x + shift, y) for x, y in d.points], FLAVOR_D)
    if d.n > EXPAND_MAX_N:
        raise SizeGuardError(f"expand_to_staircase supports n <= {EXPAND_MAX_N}")
    k = d.deficit
    if k < 0:
        raise DiagramError("expand_to_staircase needs deficit k >= 0")
    n = d.n
    d2 = sum(y for _, y in d.points)
    N = d2 * (k + 1) + 1
    # the sequence of unit moves: point i (1-based) repeated y_i times
    moves = [i for i, (_, y) in enumerate(d.points) for _ in range(y)]
    coeffs: dict = defaultdict(int)
    for ws in product(range(k + 1), repeat=d2):
        qs = [(s, 0) for s in range(N)]
        ps = [(x + N, y) for x, y in d.points]
        for r, (i, w) in enumerate(zip(moves, ws)):
            qs[r * (k + 1) + 1 + w] = (r * (k + 1), 1)
            px, py = ps[i]
            ps[i] = (px + w + 1, py - 1)
        if sorted(p[0] for p in ps) != list(range(N, N + n)):
            continue
        seq = qs + ps
        order = sorted(range(len(seq)), key=lambda t: point_key(seq[t]))
        sign = permutation_sign(order)
        mu = Partition.from_parts(w for w in ws if w)
        coeffs[mu] += sign
    coeffs = {mu: a for mu, a in coeffs.items() if a}
    allowed = set(enumerate_partitions_bounded(d2, k))
    assert set(coeffs) <= allowed, "expansion produced a partition outside Pi_{d2,k}"
    out = StaircaseExpansion(source=source, N=N, coefficients=coeffs)
    if verify:
        target = phi(d)
        if out.as_rho() != target:
            raise AssertionError(f"staircase expansion of {source} gives {out.as_rho()}, phi is {target}")
    return out
