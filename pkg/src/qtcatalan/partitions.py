"""Integer partitions: counting, bounded enumeration, substring decomposition.

Partitions are stored with parts weakly *increasing*, e.g. ``(1, 1, 3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class Partition(tuple):
    """A weakly increasing tuple of positive integers.

    Being a tuple, a partition hashes and compares like the plain tuple of
    its parts, so ``Partition((1, 2)) == (1, 2)``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a > b:
                raise ValueError(f"partition parts must be weakly increasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(sorted(parts))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@lru_cache(maxsize=None)
def _bounded_count_table(limit: int) -> tuple:
    # table[b][k] = p(b, k) for 0 <= b, k <= limit
    table = [[0] * (limit + 1) for _ in range(limit + 1)]
    for b in range(limit + 1):
        table[b][0] = 1
    for b in range(1, limit + 1):
        for k in range(1, limit + 1):
            table[b][k] = table[b - 1][k] + (table[b][k - b] if k >= b else 0)
    return tuple(tuple(row) for row in table)


def count_partitions_bounded(b: int, k: int) -> int:
    """Number of partitions of ``k`` into at most ``b`` parts, p(b, k).

    p(b, 0) = 1 for every b >= 0 and p(0, k) = 0 for k > 0.
    """
    if b < 0 or k < 0:
        raise ValueError("count_partitions_bounded expects b, k >= 0")
    b = min(b, k)
    if k == 0:
        return 1
    limit = 1
    while limit < k:
        limit *= 2
    return _bounded_count_table(limit)[b][k]


def count_partitions(k: int) -> int:
    """Partition number p(k), with p(0) = 1."""
    if k < 0:
        raise ValueError("count_partitions expects k >= 0")
    return count_partitions_bounded(k, k)


def partition_number(k: int) -> int:
    """p(k) extended by p(k) = 0 for negative k."""
    return 0 if k < 0 else count_partitions(k)


def _partitions_increasing(k: int, max_len: int, min_part: int) -> Iterator[tuple]:
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    # p is the smallest part; every later part is >= p
    for p in range(min_part, k + 1):
        rest = k - p
        if rest == 0:
            yield (p,)
        elif rest >= p:
            for tail in _partitions_increasing(rest, max_len - 1, p):
                yield (p,) + tail


def iter_partitions(k: int, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``k`` with at most ``max_len`` parts (unordered)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if max_len is None:
        max_len = k
    for parts in _partitions_increasing(k, max_len, 1):
        yield Partition(parts)


def enumerate_partitions_bounded(b: int, k: int) -> list[Partition]:
    """Pi_{b,k} sorted descending in the monomial term order (largest first)."""
    if b < 0 or k < 0:
        raise ValueError("b, k must be >= 0")
    return sorted(iter_partitions(k, b), reverse=True)


@dataclass(frozen=True)
class SubstringDecomposition:
    """Split of a partition into the consecutive segments used by the generator
    constructions: runs of ones in triples, then parts >= 2 in pairs."""

    source: Partition
    blocks: tuple
    ones_count: int

    @property
    def m(self) -> int:
        return len(self.source) - self.ones_count


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def substring_decompose(nu) -> SubstringDecomposition:
    nu = Partition(nu)
    if not nu:
        raise ValueError("substring_decompose needs a nonempty partition")
    c = sum(1 for p in nu if p == 1)
    m = len(nu) - c
    blocks: list[Partition] = []
    c3 = _ceil_div(c, 3)
    if c:
        blocks.extend(Partition((1, 1, 1)) for _ in range(c3 - 1))
        blocks.append(Partition((1,) * (c + 3 - 3 * c3)))
    big = nu[c:]
    m2 = _ceil_div(m, 2)
    for i in range(m2 - 1):
        blocks.append(Partition(big[2 * i:2 * i + 2]))
    if m:
        blocks.append(Partition(big[2 * m2 - 2:]))
    return SubstringDecomposition(source=nu, blocks=tuple(blocks), ones_count=c)
