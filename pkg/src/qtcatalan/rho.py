"""Sparse integer polynomials in rho_1, rho_2, ... graded by weight.

A monomial rho_nu is keyed by the weakly increasing tuple ``nu`` (the empty
tuple is the constant monomial 1).  Within one weight, monomials are totally
ordered lexicographically on those tuples, which is exactly Python's tuple
comparison: ``(1, 2, 7) < (4, 6)`` and ``(1, 1) < (2,)``.
"""
from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, iter_partitions


class WeightMismatchError(ValueError):
    """Monomials of different weight were compared."""


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def compare_monomials(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``rho_a`` is less than, equal to or greater than ``rho_b``."""
    if sum(a) != sum(b):
        raise WeightMismatchError(f"cannot compare rho{tuple(a)} and rho{tuple(b)}: weights differ")
    ta, tb = tuple(a), tuple(b)
    return (ta > tb) - (ta < tb)


class RhoPoly:
    """Immutable element of Z[rho_1, rho_2, ...]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[tuple, int] = {}
        for mono, coeff in items:
            key = tuple(sorted(int(p) for p in mono))
            if key and key[0] < 1:
                raise ValueError(f"rho indices must be positive, got {key}")
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "RhoPoly":
        # trusted constructor: keys already canonical, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "RhoPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def monomial(cls, parts: Iterable[int], coeff: int = 1) -> "RhoPoly":
        return cls({tuple(parts): coeff})

    @classmethod
    def rho(cls, i: int) -> "RhoPoly":
        return cls.constant(1) if i == 0 else cls.monomial((i,))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms sorted descending in the term order (leading term first)."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def coeff(self, parts: Iterable[int]) -> int:
        return self._terms.get(tuple(sorted(parts)), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def weight(self) -> int | None:
        """Common weight of all terms, or None for zero / inhomogeneous input."""
        weights = {sum(m) for m in self._terms}
        return weights.pop() if len(weights) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RhoPoly.constant(other)
        if not isinstance(other, RhoPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "RhoPoly":
        return RhoPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "RhoPoly":
        if isinstance(other, int):
            other = RhoPoly.constant(other)
        if not isinstance(other, RhoPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return RhoPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RhoPoly":
        if isinstance(other, int):
            other = RhoPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "RhoPoly":
        return (-self) + other

    def __mul__(self, other) -> "RhoPoly":
        if isinstance(other, int):
            if not other:
                return RhoPoly._raw({})
            return RhoPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, RhoPoly):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RhoPoly":
        out = RhoPoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"RhoPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.items():
            body = _mono_str(mono)
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def to_json_obj(self) -> dict:
        return {
            "weight": self.weight if self._terms else 0,
            "terms": [{"mono": list(m), "coeff": str(c)} for m, c in self.items()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "RhoPoly":
        poly = cls((tuple(t["mono"]), int(t["coeff"])) for t in obj["terms"])
        w = obj.get("weight")
        if poly and w is not None and poly.weight != w:
            raise ValueError("terms do not match the declared weight")
        return poly

    @classmethod
    def from_json(cls, text: str) -> "RhoPoly":
        return cls.from_json_obj(json.loads(text))


def _mono_str(mono: tuple) -> str:
    if not mono:
        return "1"
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        e = j - i
        out.append(f"r{mono[i]}" + (f"^{e}" if e > 1 else ""))
        i = j
    return "*".join(out)


def multiply(f: RhoPoly, g: RhoPoly) -> RhoPoly:
    """Ring product; monomials multiply by multiset union of their indices."""
    ft, gt = f._terms, g._terms
    if not ft or not gt:
        return RhoPoly._raw({})
    if len(ft) > len(gt):
        ft, gt = gt, ft
    out: dict[tuple, int] = {}
    for m1, c1 in ft.items():
        for m2, c2 in gt.items():
            m = _merge(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                del out[m]
    return RhoPoly._raw(out)


def leading(f: RhoPoly) -> tuple[Partition, int]:
    """Leading monomial and its coefficient of a nonzero homogeneous polynomial.

    A nonzero constant c gives ``(Partition(()), c)``.
    """
    if not f:
        raise ValueError("the zero polynomial has no leading term")
    if not f.is_homogeneous():
        raise ValueError("leading term is only defined for homogeneous polynomials")
    mono = max(f._terms)
    return Partition(mono), f._terms[mono]


def leading_monomial(f: RhoPoly) -> Partition:
    return leading(f)[0]


@lru_cache(maxsize=None)
def _h_terms(b: int, w: int) -> tuple:
    if w < 0 or (b == 0 and w > 0):
        return ()
    if w == 0:
        return (((), 1),)
    out = []
    for nu in iter_partitions(w, b):
        ell = len(nu)
        coeff = factorial(b) // factorial(b - ell)
        i = 0
        while i < ell:
            j = i
            while j < ell and nu[j] == nu[i]:
                j += 1
            coeff //= factorial(j - i)
            i = j
        out.append((tuple(nu), coeff))
    return tuple(out)


@lru_cache(maxsize=None)
def h_series(b: int, w: int) -> RhoPoly:
    """Weight-``w`` part of (1 + rho_1 + rho_2 + ...)**b."""
    if b < 0:
        raise ValueError("b must be >= 0")
    return RhoPoly._raw(dict(_h_terms(b, w)))


def determinant(matrix: Sequence[Sequence[RhoPoly]]) -> RhoPoly:
    """Exact determinant by Laplace expansion memoized on the set of used columns.

    Rows are expanded from the last one upwards; zero entries are skipped, so
    nearly triangular matrices only visit a handful of column subsets.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return RhoPoly.constant(1)
    support = [[j for j in range(n) if matrix[i][j]] for i in range(n)]
    memo: dict[int, RhoPoly] = {}

    def minor(row: int, used: int) -> RhoPoly:
        # determinant of rows 0..row restricted to the columns not in ``used``
        if row < 0:
            return RhoPoly.constant(1)
        if used in memo:
            return memo[used]
        total = RhoPoly._raw({})
        free = [j for j in range(n) if not used >> j & 1]
        for j in support[row]:
            if used >> j & 1:
                continue
            sub = minor(row - 1, used | 1 << j)
            if not sub:
                continue
            # column j sits at position free.index(j) among the row+1 free columns
            sign = -1 if (row + free.index(j)) % 2 else 1
            term = multiply(matrix[row][j], sub)
            total = total + (term if sign > 0 else -term)
        memo[used] = total
        return total

    return minor(n - 1, 0)


def naive_determinant(matrix: Sequence[Sequence[RhoPoly]]) -> RhoPoly:
    """Permutation-sum determinant; test oracle only."""
    from itertools import permutations

    n = len(matrix)
    total = RhoPoly._raw({})
    for perm in permutations(range(n)):
        term = RhoPoly.constant(permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if not term:
                break
        total = total + term
    return total


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (any distinct sortable values)."""
    seen = sorted(perm)
    pos = {v: i for i, v in enumerate(seen)}
    p = [pos[v] for v in perm]
    sign = 1
    visited = [False] * len(p)
    for i in range(len(p)):
        if visited[i]:
            continue
        j, length = i, 0
        while not visited[j]:
            visited[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
