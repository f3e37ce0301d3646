"""Generator constructions: diagrams whose phi-values have prescribed leading monomials.

phi(D) depends only on the sizes |P_i| and the y-coordinates of the points, and
within a group of equal size only on which y-values occur.  Every construction
here therefore fixes a size profile (from the building blocks) and then
chooses distinct y-values per size group to hit the requested y-degree.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

from .diagrams import FLAVOR_D, FLAVOR_DPRIME, PointDiagram, make_diagram
from .partitions import Partition, enumerate_partitions_bounded, substring_decompose
from .phi import phi, phi_blockwise
from .rho import RhoPoly, leading


class ConstructionError(AssertionError):
    """A construction failed its runtime verification."""


# relative size profiles of the building blocks
def block_profile(mu) -> tuple:
    mu = tuple(mu)
    if mu == (1, 1, 1):
        return (0, 0, 0)
    if mu == (1, 1):
        return (0, 0, 2, 2)
    if mu == (1,):
        return (0, 0)
    if len(mu) == 2 and 2 <= mu[0] <= mu[1]:
        v, w = mu
        return (0, 0) + tuple(i - 2 for i in range(3, w - v + 4)) + tuple(i - 3 for i in range(w - v + 4, w + 3))
    if len(mu) == 1 and mu[0] >= 2:
        return (0, 0) + tuple(range(1, mu[0]))
    raise ValueError(f"{mu} is not a building-block segment")


def _groups(sizes) -> dict:
    out = defaultdict(list)
    for i, s in enumerate(sizes):
        out[s].append(i)
    return out


def _envelope(sizes, x_floor: int = 0) -> tuple[int, int]:
    lo = hi = 0
    for c, idx in _groups(sizes).items():
        g = len(idx)
        lo += g * (g - 1) // 2
        hi += g * (c - x_floor) - g * (g - 1) // 2
    return lo, hi


def distribute_y(sizes, budget: int, fixed: dict | None = None, x_floor: int = 0) -> list | None:
    """Distinct y-values per equal-size group with total ``budget``, or None.

    Points listed in ``fixed`` keep their y.  The remainder starts from the
    minimal choice 0, 1, ..., g-1 in each group and is raised greedily:
    one-point groups first (largest size first), then larger groups, always
    lifting the topmost point of a group first.  y <= size - x_floor.
    """
    fixed = fixed or {}
    ys = [0] * len(sizes)
    free_groups = []
    left = budget
    for c, idx in sorted(_groups(sizes).items()):
        pinned = [i for i in idx if i in fixed]
        if pinned:
            if len(pinned) != len(idx):
                raise ValueError("a size group is only partly fixed")
            for i in idx:
                ys[i] = fixed[i]
                left -= fixed[i]
            continue
        free_groups.append((c, idx))
    lo = sum(len(idx) * (len(idx) - 1) // 2 for _, idx in free_groups)
    extra = left - lo
    if extra < 0:
        return None
    order = sorted(free_groups, key=lambda t: (len(t[1]) > 1, -t[0]))
    for c, idx in order:
        g = len(idx)
        vals = list(range(g))
        for pos in range(g - 1, -1, -1):
            cap = c - x_floor - (g - 1 - pos)
            step = min(extra, cap - vals[pos])
            if step > 0:
                vals[pos] += step
                extra -= step
        for i, y in zip(idx, vals):
            ys[i] = y
    if extra:
        return None
    return ys


def _diagram(sizes, ys, flavor=FLAVOR_D) -> PointDiagram:
    return make_diagram([(s - y, y) for s, y in zip(sizes, ys)], flavor)


@dataclass(frozen=True)
class BuildingBlock:
    mu: Partition
    diagram: PointDiagram

    @property
    def size(self) -> int:
        return self.diagram.n

    @property
    def weight(self) -> int:
        return sum(self.mu)


def building_block(segment, y_budget: int | None = None, x_floor: int | None = None) -> BuildingBlock:
    """E_mu for a segment of the substring decomposition.

    Without a budget this is the y-minimal instance.  With one, y-values are
    raised (north-west moves at fixed size) until the y-degree equals the
    budget, keeping x >= x_floor (default: the smallest floor that admits the
    y-minimal instance).
    """
    mu = Partition.from_parts(segment)
    sizes = block_profile(mu)
    if x_floor is None:
        x_floor = -(max(len(v) for v in _groups(sizes).values()) - 1)
    lo, hi = _envelope(sizes, x_floor)
    budget = lo if y_budget is None else y_budget
    if not lo <= budget <= hi:
        raise ValueError(f"y-budget {budget} outside [{lo}, {hi}] for E{tuple(mu)} with x >= {x_floor}")
    ys = distribute_y(sizes, budget, x_floor=x_floor)
    d = _diagram(sizes, ys, FLAVOR_DPRIME)
    lm = leading(phi(d))[0]
    if lm != mu:
        raise ConstructionError(f"LM(phi({d})) = rho{tuple(lm)}, expected rho{tuple(mu)}")
    return BuildingBlock(mu, d)


def e_prime(a: int) -> PointDiagram:
    """{(-a-1, a+1), (-a, a), (1-a, a)}: phi = rho_2 for every a >= 0."""
    return make_diagram([(-a - 1, a + 1), (-a, a), (1 - a, a)])


def e_double_prime(a: int) -> PointDiagram:
    """{(-a-1, a+1), (-a, a), (-a, a+1)}: phi = rho_2 - rho_1^2 for every a >= 0."""
    return make_diagram([(-a - 1, a + 1), (-a, a), (-a, a + 1)])


@dataclass
class GeneratorCertificate:
    nu: Partition
    terms: tuple  # ((coeff, PointDiagram), ...)
    bidegree: tuple
    phi_value: RhoPoly
    leading: Partition
    method: str

    @property
    def diagrams(self) -> list:
        return [d for _, d in self.terms]

    def to_json_obj(self) -> dict:
        return {
            "nu": list(self.nu),
            "bidegree": list(self.bidegree),
            "method": self.method,
            "terms": [{"coeff": c, "diagram": str(d)} for c, d in self.terms],
            "phi": self.phi_value.to_json_obj(),
            "leading": list(self.leading),
        }


def _check_params(n: int, d1: int, d2: int, nu, max_k: int) -> tuple[int, Partition]:
    k = comb(n, 2) - d1 - d2
    if d1 < 0 or d2 < 0 or k < 0:
        raise ValueError(f"bidegree ({d1}, {d2}) impossible for n = {n}")
    if d2 > d1:
        raise ValueError("constructions assume d2 <= d1")
    if k > max_k:
        raise ValueError(f"deficit k = {k} exceeds {max_k} for n = {n}")
    nu = Partition.from_parts(nu)
    if sum(nu) != k or len(nu) > d2:
        raise ValueError(f"{tuple(nu)} is not a partition of {k} into at most {d2} parts")
    return k, nu


def _assemble(n: int, segments: list) -> tuple[list, list]:
    """Size profile of {(0,0)} + translated blocks + axis singletons.

    ``segments`` is the list of relative profiles in decomposition order; the
    last one sits right after (0,0).  Returns (sizes, owner) where owner[i] is
    the segment index of point i, or None for (0,0) and the singletons.
    """
    sizes, owner = [0], [None]
    offset = 1
    for s in range(len(segments) - 1, -1, -1):
        for r in segments[s]:
            sizes.append(r + offset)
            owner.append(s)
        offset += len(segments[s])
    n0 = len(sizes)
    if n0 > n:
        raise ConstructionError(f"blocks need {n0} points, only {n} available")
    for j in range(n0 + 1, n + 1):
        sizes.append(j - 1)
        owner.append(None)
    return sizes, owner


def _profile(n: int, nu: Partition, k: int, split_pair: bool) -> tuple[list, list, list]:
    if not nu:
        return [j for j in range(n)], [None] * n, []
    blocks = list(substring_decompose(nu).blocks)
    if blocks[-1] == (1, 1, 1):
        # all parts are 1 and k = 3m: axis staircase followed by equal-size triples
        m = len(blocks)
        sizes = [j - 1 for j in range(1, n - 3 * m + 1)]
        owner = [None] * len(sizes)
        for j in range(1, m + 1):
            sizes += [n - 3 * m + 3 * j - 3] * 3
            owner += [j - 1] * 3
        return sizes, owner, blocks
    segs = [(0, 0, 1) if split_pair and b == (1, 1) else block_profile(b) for b in blocks]
    sizes, owner = _assemble(n, segs)
    n0 = 1 + sum(len(s) for s in segs)
    if not split_pair and not n0 <= min(k + 4, n):
        raise ConstructionError(f"n0 = {n0} exceeds min(k + 4, n) = {min(k + 4, n)}")
    return sizes, owner, blocks


def _certify(nu, terms, bidegree, method) -> GeneratorCertificate:
    value = RhoPoly()
    for c, d in terms:
        if d.bidegree != bidegree:
            raise ConstructionError(f"{d} has bidegree {d.bidegree}, expected {bidegree}")
        if any(x < 0 or y < 0 for x, y in d.points):
            raise ConstructionError(f"{d} leaves the first quadrant")
        value = value + phi_blockwise(d) * c
    if not value:
        raise ConstructionError(f"phi vanishes for nu = {tuple(nu)}: {terms}")
    lm = leading(value)[0]
    if lm != nu:
        raise ConstructionError(f"LM = rho{tuple(lm)} for {terms}, expected rho{tuple(nu)}")
    return GeneratorCertificate(nu, tuple(terms), bidegree, value, lm, method)


def construct_D_nu(n: int, d1: int, d2: int, nu) -> GeneratorCertificate:
    """A single diagram of bidegree (d1, d2) with LM(phi) = rho_nu, for k <= n - 4."""
    k, nu = _check_params(n, d1, d2, nu, n - 4)
    return _single(n, d1, d2, nu, k)


def _single(n, d1, d2, nu, k) -> GeneratorCertificate:
    sizes, _, _ = _profile(n, nu, k, split_pair=False)
    if sum(sizes) != d1 + d2:
        raise ConstructionError(f"profile {sizes} has total size {sum(sizes)}, expected {d1 + d2}")
    ys = distribute_y(sizes, d2)
    if ys is None:
        raise ConstructionError(f"cannot reach y-degree {d2} on profile {sizes}")
    return _certify(nu, [(1, _diagram(sizes, ys))], (d1, d2), "single")


def construct_f_nu(n: int, d1: int, d2: int, nu) -> GeneratorCertificate:
    """f_nu for k <= n - 3: one diagram, or a difference of two when nu-tilde has a (1,1) block."""
    k, nu = _check_params(n, d1, d2, nu, n - 3)
    if not nu or (1, 1) not in substring_decompose(nu).blocks:
        return _single(n, d1, d2, nu, k)
    errors = []
    for attempt in (_pair_singleton, _pair_balanced, _pair_merged):
        try:
            out = attempt(n, d1, d2, nu)
        except ConstructionError as exc:
            errors.append(f"{attempt.__name__}: {exc}")
            continue
        if out is not None:
            return out
        errors.append(f"{attempt.__name__}: not applicable")
    raise ConstructionError(f"no generator found for nu = {tuple(nu)} at n={n}, ({d1},{d2}): {errors}")


def _pair_block(nu, n):
    sizes, owner, blocks = _profile(n, nu, sum(nu), split_pair=True)
    s = blocks.index(Partition((1, 1)))
    idx = [i for i, o in enumerate(owner) if o == s]
    return sizes, owner, idx


def _pair_singleton(n, d1, d2, nu):
    # E' and E'' differ by one unit of y on their third point; a lone axis
    # point (phi-factor 1) absorbs the difference
    sizes, owner, idx = _pair_block(nu, n)
    t = sizes[idx[0]]
    singles = [i for i, o in enumerate(owner) if o is None and sizes[i] > 0]
    for a in range(t):
        fixed = {idx[0]: a + 1, idx[1]: a, idx[2]: a}
        ys1 = distribute_y(sizes, d2, fixed)
        if ys1 is None:
            continue
        donor = next((i for i in singles if ys1[i] > 0), None)
        if donor is None:
            continue
        ys2 = list(ys1)
        ys2[idx[2]] += 1
        ys2[donor] -= 1
        if ys2[idx[2]] > sizes[idx[2]]:
            continue
        return _certify(nu, [(1, _diagram(sizes, ys1)), (-1, _diagram(sizes, ys2))], (d1, d2), "pair-singleton")
    return None


def _pair_balanced(n, d1, d2, nu):
    # equal y-degree inside the (0,0,1) block: (b+e, b, c) against
    # (b+e-1, b-1, c+2).  The rho_2 coefficients agree (both e) and the
    # rho_1^2 coefficients differ by 3e, so the difference is a multiple of rho_1^2.
    sizes, owner, idx = _pair_block(nu, n)
    t = sizes[idx[0]]
    for total in range(3, 3 * t + 2):
        for e in range(1, t + 1):
            for b in range(1, t - e + 1):
                c = total - 2 * b - e
                if c < 0 or c + 2 > t + 1:
                    continue
                fixed1 = {idx[0]: b + e, idx[1]: b, idx[2]: c}
                fixed2 = {idx[0]: b + e - 1, idx[1]: b - 1, idx[2]: c + 2}
                ys1 = distribute_y(sizes, d2, fixed1)
                if ys1 is None:
                    continue
                ys2 = distribute_y(sizes, d2, fixed2)
                return _certify(
                    nu, [(1, _diagram(sizes, ys1)), (-1, _diagram(sizes, ys2))], (d1, d2), "pair-balanced"
                )
    return None


def _pair_merged(n, d1, d2, nu):
    # (1,1) and a trailing (w) block fused into one block of profile
    # (0,0,1,...,w+1); two tail placements of y-degree 3 differ by -rho_1^2 rho_w
    blocks = list(substring_decompose(nu).blocks)
    last = blocks[-1]
    if len(last) != 1 or last[0] < 2:
        return None
    w = last[0]
    segs = [block_profile(b) for b in blocks[:-1] if b != (1, 1)]
    merged = (0, 0) + tuple(range(1, w + 2))
    segs.append(merged)
    sizes, owner = _assemble(n, segs)
    idx = [i for i, o in enumerate(owner) if o == len(segs) - 1]
    tail = idx[2:]
    base = {idx[0]: 1, idx[1]: 0}
    fixed1 = {**base, **{i: 0 for i in tail}}
    fixed1[tail[-1]] = 2
    fixed2 = {**base, **{i: 0 for i in tail}}
    fixed2[tail[0]] = 1
    fixed2[tail[-1]] = 1
    ys1 = distribute_y(sizes, d2, fixed1)
    ys2 = distribute_y(sizes, d2, fixed2)
    if ys1 is None or ys2 is None:
        return None
    return _certify(nu, [(1, _diagram(sizes, ys1)), (-1, _diagram(sizes, ys2))], (d1, d2), "pair-merged")


@dataclass
class BasisReport:
    n: int
    bidegree: tuple
    k: int
    rank: int
    certificates: list

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "bidegree": list(self.bidegree),
            "k": self.k,
            "rank": self.rank,
            "certificates": [c.to_json_obj() for c in self.certificates],
        }


def basis_certificate(n: int, d1: int, d2: int) -> BasisReport:
    """Build f_nu for every nu in Pi_{d2,k}; distinct leading monomials certify the rank."""
    k = comb(n, 2) - d1 - d2
    if k < 0 or k > n - 3 or d2 > d1 or d2 < 0:
        raise ValueError(f"basis certificate needs 0 <= k <= n - 3 and d2 <= d1 (n={n}, d1={d1}, d2={d2})")
    certs = [construct_f_nu(n, d1, d2, nu) for nu in enumerate_partitions_bounded(d2, k)]
    certs.sort(key=lambda c: tuple(c.leading), reverse=True)
    lms = [c.leading for c in certs]
    if len(set(lms)) != len(lms):
        raise ConstructionError(f"repeated leading monomials {lms}")
    expected = set(enumerate_partitions_bounded(d2, k))
    if set(lms) != expected:
        raise ConstructionError(f"leading monomials {sorted(lms)} differ from Pi_(d2,k)")
    return BasisReport(n, (d1, d2), k, len(certs), certs)
