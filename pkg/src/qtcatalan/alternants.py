"""Explicit expansion of the alternant Delta(D) in x_1, y_1, ..., x_n, y_n."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .diagrams import DiagramError, PointDiagram, make_diagram
from .phi import SizeGuardError
from .rho import permutation_sign

DELTA_MAX_N = 6
SUM_LEMMA_MAX_N = 5


@dataclass(frozen=True)
class Alternant:
    """Sparse polynomial; keys are exponent vectors (a_1, b_1, ..., a_n, b_n)."""

    n: int
    terms: dict

    def __eq__(self, other) -> bool:
        if not isinstance(other, Alternant):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "Alternant") -> "Alternant":
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Alternant(self.n, out)

    def __neg__(self) -> "Alternant":
        return Alternant(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Alternant") -> "Alternant":
        return self + (-other)

    def scale(self, c: int) -> "Alternant":
        return Alternant(self.n, {k: v * c for k, v in self.terms.items()} if c else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def bidegrees(self) -> set:
        return {(sum(k[0::2]), sum(k[1::2])) for k in self.terms}

    @property
    def bidegree(self):
        degs = self.bidegrees
        if len(degs) != 1:
            return None
        return degs.pop()

    def swap_variables(self, i: int, j: int) -> "Alternant":
        """Exchange the pairs (x_i, y_i) and (x_j, y_j), 0-based."""
        out = {}
        for k, c in self.terms.items():
            v = list(k)
            v[2 * i], v[2 * j] = v[2 * j], v[2 * i]
            v[2 * i + 1], v[2 * j + 1] = v[2 * j + 1], v[2 * i + 1]
            out[tuple(v)] = c
        return Alternant(self.n, out)

    def mul_power_sum(self, c: int, e: int) -> "Alternant":
        """Multiply by x_1^c y_1^e + ... + x_n^c y_n^e."""
        out: dict = {}
        for k, v in self.terms.items():
            for i in range(self.n):
                key = list(k)
                key[2 * i] += c
                key[2 * i + 1] += e
                key = tuple(key)
                s = out.get(key, 0) + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Alternant(self.n, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            vars_ = []
            for i in range(self.n):
                for name, e in (("x", k[2 * i]), ("y", k[2 * i + 1])):
                    if e:
                        vars_.append(f"{name}{i + 1}" + (f"^{e}" if e > 1 else ""))
            body = "*".join(vars_) or "1"
            parts.append(f"{c:+d}*{body}")
        return " ".join(parts)


def column_determinant(columns: Sequence[tuple]) -> Alternant:
    """det[x_i^{a_j} y_i^{b_j}] for an ordered list of exponent columns (a_j, b_j)."""
    n = len(columns)
    out: dict = {}
    for sigma in permutations(range(n)):
        key = []
        for i in range(n):
            key.extend(columns[sigma[i]])
        key = tuple(key)
        v = out.get(key, 0) + permutation_sign(sigma)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return Alternant(n, out)


def delta(d) -> Alternant:
    d = d if isinstance(d, PointDiagram) else make_diagram(d)
    if d.n > DELTA_MAX_N:
        raise SizeGuardError(f"delta supports n <= {DELTA_MAX_N}")
    if any(x < 0 or y < 0 for x, y in d.points):
        raise DiagramError("delta needs nonnegative exponents")
    return column_determinant(d.points)


def check_sum_lemma(d, c: int, e: int) -> bool:
    """(sum_i x_i^c y_i^e) * Delta(D) == sum_i Delta(D with point i shifted by (c, e))."""
    d = d if isinstance(d, PointDiagram) else make_diagram(d)
    if d.n > SUM_LEMMA_MAX_N:
        raise SizeGuardError(f"check_sum_lemma supports n <= {SUM_LEMMA_MAX_N}")
    if c < 0 or e < 0:
        raise ValueError("c and e must be nonnegative")
    cols = list(d.points)
    lhs = column_determinant(cols).mul_power_sum(c, e)
    rhs = Alternant(d.n, {})
    for i in range(d.n):
        shifted = cols[:i] + [(cols[i][0] + c, cols[i][1] + e)] + cols[i + 1:]
        rhs = rhs + column_determinant(shifted)
    return lhs == rhs
