"""Verification suites tying the library to the theorems it implements.

Every suite is deterministic given (n_range, seed, trials).  Each randomized
suite draws from its own ``random.Random`` seeded with ``"<seed>:<suite>"``,
so adding or reordering suites never shifts another suite's inputs.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb

from .alternants import check_sum_lemma
from .catalan_diagrams import (
    census,
    construct_k0,
    embed,
    growth_witness,
    is_catalan,
    iter_lambda,
    theta,
    theta_inverse,
)
from .constructions import basis_certificate, construct_D_nu
from .diagrams import FLAVOR_D, FLAVOR_DPRIME, PointDiagram, blocks, format_diagram, make_diagram
from .dyck import build_table, corollary_b_formula, specialize_qq
from .partitions import Partition, count_partitions, count_partitions_bounded, enumerate_partitions_bounded
from .phi import (
    SizeGuardError,
    expand_to_staircase,
    phi,
    phi_determinant,
    phi_permutation,
    vandermonde_constant,
)
from .rho import RhoPoly, leading

DEFAULT_SEED = 42


@dataclass
class CheckReport:
    suite: str
    n_range: tuple
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: list = field(default_factory=list)
    parts: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(p.passed for p in self.parts)

    def fail(self, inputs, expected, got) -> None:
        self.failures.append({"inputs": inputs, "expected": str(expected), "got": str(got)})

    def to_json_obj(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        out["parts"] = [p.to_json_obj() for p in self.parts]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def format(self) -> str:
        lines = []
        for r in self.parts or [self]:
            status = "PASS" if r.passed else "FAIL"
            lo, hi = r.n_range
            lines.append(f"{status} {r.suite} n={lo}..{hi} cases={r.cases_run} failures={len(r.failures)} ({r.elapsed:.2f}s)")
            for note in r.notes:
                lines.append(f"  note: {note}")
            for f in r.failures[:10]:
                lines.append(f"  failure: {f['inputs']} expected {f['expected']} got {f['got']}")
        return "\n".join(lines)


def _rng(seed: int, suite: str) -> random.Random:
    return random.Random(f"{seed}:{suite}")


def _clamp(n_range, lo: int, hi: int) -> range:
    a, b = n_range
    return range(max(a, lo), min(b, hi) + 1)


def random_dprime(rng: random.Random, n: int, y_max: int = 3, slack: int = 0) -> PointDiagram:
    """Random D' diagram; sizes are mostly admissible (|P_i| <= i - 1) so phi is often nonzero.

    ``slack`` > 0 allows some sizes up to i - 1 + slack.
    """
    while True:
        pts = set()
        for i in range(n):
            s = rng.randint(0, i + slack)
            y = rng.randint(0, y_max)
            pts.add((s - y, y))
        if len(pts) == n:
            return make_diagram(pts, FLAVOR_DPRIME)


def random_block(rng: random.Random, n: int, y_max: int = 3) -> PointDiagram:
    """Random D' diagram with |P_1| = 0 and no other index where |P_i| = i - 1."""
    while True:
        pts = set()
        for i in range(n):
            s = 0 if i == 0 else rng.randint(0, i - 1)
            y = rng.randint(0, y_max)
            pts.add((s - y, y))
        if len(pts) == n:
            return make_diagram(pts, FLAVOR_DPRIME)


def random_d(rng: random.Random, n: int, y_max: int = 2) -> PointDiagram:
    while True:
        pts = {(rng.randint(0, n), rng.randint(0, y_max)) for _ in range(n)}
        if len(pts) == n:
            return make_diagram(pts, FLAVOR_D)


# -- phi ---------------------------------------------------------------------

def suite_phi_dual(n_range=(1, 7), seed=DEFAULT_SEED, trials=500) -> CheckReport:
    rep = CheckReport("phi_dual", tuple(n_range))
    ns = list(_clamp(n_range, 1, 7))
    rng = _rng(seed, "phi_dual")
    for _ in range(trials if ns else 0):
        d = random_dprime(rng, rng.choice(ns), slack=rng.choice([0, 0, 0, 1]))
        a, b = phi_permutation(d), phi_determinant(d)
        rep.cases_run += 1
        if a != b:
            rep.fail(format_diagram(d), a, b)
    return rep


def suite_lemma32(n_range=(1, 7), seed=DEFAULT_SEED, trials=200) -> CheckReport:
    rep = CheckReport("lemma32", tuple(n_range))
    ns = list(_clamp(n_range, 1, 7))
    rng = _rng(seed, "lemma32")
    if not ns:
        return rep
    small = [n for n in ns if n <= 6] or ns
    # (i) some |P_i| >= i forces phi = 0; checked with the permutation form,
    # since the determinant path short-circuits on this condition
    for _ in range(trials):
        n = rng.choice(small)
        d = random_dprime(rng, n, slack=2)
        if all(s < i + 1 for i, s in enumerate(d.sizes)):
            pts = list(d.points)
            x, y = pts[-1]
            bump = n - (x + y)
            pts[-1] = (x + bump, y)
            d = make_diagram(pts)
        got = phi_permutation(d)
        rep.cases_run += 1
        if got:
            rep.fail(("i", format_diagram(d)), 0, got)
    # (ii) prefix Q_1..Q_m with |Q_i| = i - 1 and shift by (m, 0)
    for _ in range(trials):
        m = rng.randint(1, 3)
        n = rng.choice([v for v in small if v + m <= 7] or [1])
        d = random_dprime(rng, n)
        qs = []
        for i in range(m):
            y = rng.randint(0, 2)
            qs.append((i - y, y))
        big = make_diagram(qs + [(x + m, y) for x, y in d.points])
        a, b = phi(d), phi(big)
        rep.cases_run += 1
        if a != b:
            rep.fail(("ii", format_diagram(d), qs), a, b)
    # (iii) translation by (-t, t)
    for _ in range(trials):
        d = random_dprime(rng, rng.choice(ns))
        t = rng.randint(1, 3)
        a, b = phi(d), phi(d.translate(-t, t, FLAVOR_DPRIME))
        rep.cases_run += 1
        if a != b:
            rep.fail(("iii", format_diagram(d), t), a, b)
    # (iv) factorization over blocks, 2 or 3 blocks
    for _ in range(trials):
        nb = rng.randint(2, 3)
        lens = [rng.randint(1, 3) for _ in range(nb)]
        pts, offset = [], 0
        for ln in lens:
            pts += [(x + offset, y) for x, y in random_block(rng, ln).points]
            offset += ln
        d = make_diagram(pts)
        prod = RhoPoly.constant(1)
        for blk in blocks(d):
            prod = prod * phi(blk)
        a = phi(d)
        rep.cases_run += 1
        if len(blocks(d)) != nb or a != prod:
            rep.fail(("iv", format_diagram(d)), prod, a)
    # (v) Vandermonde constant, exhaustive over distinct y <= 8
    for n in range(1, min(5, ns[-1]) + 1):
        for ys in combinations(range(9), n):
            d = make_diagram([(-y, y) for y in ys])
            c = vandermonde_constant(d)
            expect = RhoPoly.monomial((1,) * comb(n, 2), c)
            got = phi(d, self_check=False)
            rep.cases_run += 1
            if got != expect:
                rep.fail(("v", format_diagram(d)), expect, got)
    # (vi) {(-1,1),(0,0),...,(s-1,0)} -> rho_s
    for s in range(1, 9):
        d = make_diagram([(-1, 1)] + [(i, 0) for i in range(s)])
        got = phi(d, self_check=False)
        rep.cases_run += 1
        if got != RhoPoly.rho(s):
            rep.fail(("vi", s), RhoPoly.rho(s), got)
    # homogeneity of weight k
    for _ in range(trials):
        d = random_dprime(rng, rng.choice(ns))
        f = phi(d)
        rep.cases_run += 1
        if f and f.weight != d.deficit:
            rep.fail(("weight", format_diagram(d)), d.deficit, f.weight)
    return rep


def suite_lemma34(n_range=(1, 4), seed=DEFAULT_SEED, trials=100) -> CheckReport:
    rep = CheckReport("lemma34", tuple(n_range))
    ns = list(_clamp(n_range, 1, 4))
    rng = _rng(seed, "lemma34")
    for _ in range(trials if ns else 0):
        d = random_d(rng, rng.choice(ns))
        c, e = rng.randint(0, 2), rng.randint(0, 2)
        rep.cases_run += 1
        if not check_sum_lemma(d, c, e):
            rep.fail((format_diagram(d), c, e), True, False)
    return rep


def _distinct_pair(rng, lo=0, hi=4):
    a, b = rng.sample(range(lo, hi + 1), 2)
    return a, b


def suite_lemma59_510(n_range=None, seed=DEFAULT_SEED, trials=200) -> CheckReport:
    rep = CheckReport("lemma59_510", tuple(n_range or (0, 0)))
    rng = _rng(seed, "lemma59_510")
    for _ in range(trials):
        # one part: |P_1| = |P_2| = 0, |P_i| = i - 2 for 3 <= i <= w + 1
        w = rng.randint(2, 7)
        sizes = [0, 0] + list(range(1, w))
        b1, b2 = _distinct_pair(rng)
        ys = [b1, b2] + [rng.randint(0, 3) for _ in sizes[2:]]
        d = make_diagram([(s - y, y) for s, y in zip(sizes, ys)])
        y1, y2 = d.points[0][1], d.points[1][1]
        expect = (Partition((w,)), y1 - y2)
        got = leading(phi(d, self_check=False))
        rep.cases_run += 1
        if got != expect:
            rep.fail(("one-part", format_diagram(d)), expect, got)
    for _ in range(trials):
        # two parts (v, w), 2 <= v <= w <= 6
        w = rng.randint(2, 6)
        v = rng.randint(2, w)
        sizes = [0, 0] + [i - 2 for i in range(3, w - v + 4)] + [i - 3 for i in range(w - v + 4, w + 3)]
        ys = [0] * len(sizes)
        ys[0], ys[1] = _distinct_pair(rng)
        u = w - v + 2
        ys[u], ys[u + 1] = _distinct_pair(rng)
        for i in range(2, len(sizes)):
            if i not in (u, u + 1):
                ys[i] = rng.randint(0, 3)
        d = make_diagram([(s - y, y) for s, y in zip(sizes, ys)])
        p = [y for _, y in d.points]
        coeff = -(p[0] - p[1]) * (p[u] - p[u + 1])
        got = leading(phi(d, self_check=False))
        rep.cases_run += 1
        if tuple(got[0]) != (v, w) or got[1] != coeff:
            rep.fail(("two-part", format_diagram(d)), ((v, w), coeff), got)
    return rep


def suite_prop39(n_range=(1, 4), seed=DEFAULT_SEED, trials=100) -> CheckReport:
    rep = CheckReport("prop39", tuple(n_range))
    ns = list(_clamp(n_range, 1, 4))
    rng = _rng(seed, "prop39")
    done = 0
    while ns and done < trials:
        n = rng.choice(ns)
        pts = set()
        while len(pts) < n:
            s = rng.randint(0, n - 1)
            y = rng.randint(0, min(s, 2))
            pts.add((s - y, y))
        d = make_diagram(pts, FLAVOR_D)
        if d.deficit < 0 or d.bidegree[1] > 4:
            continue
        done += 1
        exp = expand_to_staircase(d, verify=False)
        target = phi(d)
        rep.cases_run += 1
        if exp.as_rho() != target:
            rep.fail(format_diagram(d), target, exp.as_rho())
    return rep


# -- Catalan diagrams and the table ----------------------------------------

def suite_theta(n_range=(1, 9), seed=DEFAULT_SEED, trials=0) -> CheckReport:
    rep = CheckReport("theta", tuple(n_range))
    for n in _clamp(n_range, 1, 9):
        for lam in iter_lambda(n):
            d = theta(lam)
            rep.cases_run += 1
            if not is_catalan(d):
                rep.fail(("image", lam.parts), "catalan", format_diagram(d))
            back = theta_inverse(d)
            if back != lam:
                rep.fail(("round-trip", lam.parts), lam.parts, back.parts)
    return rep


def suite_census(n_range=(1, 9), seed=DEFAULT_SEED, trials=20) -> CheckReport:
    rep = CheckReport("census", tuple(n_range))
    rng = _rng(seed, "census")
    for n in _clamp(n_range, 1, 9):
        table = build_table(n)
        rep.cases_run += 1
        if census(n) != table:
            rep.fail(("census", n), "build_table", "mismatch")
        # embedding into n + ell
        lams = list(iter_lambda(n))
        for _ in range(trials):
            lam = rng.choice(lams)
            ell = rng.randint(0, 3)
            d = theta(lam)
            e = embed(d, ell)
            d1, d2 = d.bidegree
            rep.cases_run += 1
            if not is_catalan(e) or e.bidegree != (d1 + comb(ell, 2) + n * ell, d2):
                rep.fail(("embed", lam.parts, ell), (d1 + comb(ell, 2) + n * ell, d2), e.bidegree)
        # k = 0 construction
        for d1 in range(comb(n, 2) + 1):
            rep.cases_run += 1
            try:
                construct_k0(n, d1)
            except AssertionError as exc:
                rep.fail(("k0", n, d1), "catalan diagram", exc)
        # strict growth witness at k = n - 2, d2 >= 2, d1 >= d2
        if n >= 3:
            k = n - 2
            for d2 in range(2, comb(n, 2) - k + 1):
                d1 = comb(n, 2) - k - d2
                if d1 < d2:
                    continue
                w = growth_witness(construct_k0(n - 2, d1 - n + 3))
                rep.cases_run += 1
                ok = is_catalan(w) and w.bidegree == (d1 + n, d2) and (0, 2) in w.points
                if not ok:
                    rep.fail(("growth", n, d1, d2), (d1 + n, d2), w.bidegree)
    return rep


def check_theoremA(n: int) -> CheckReport:
    if not 3 <= n <= 10:
        raise SizeGuardError(f"check_theoremA supports 3 <= n <= 10, got {n}")
    rep = CheckReport("theoremA", (n, n))
    table = build_table(n)
    top = comb(n, 2)
    needs_symmetry = 0
    for d1 in range(top + 1):
        for d2 in range(top + 1 - d1):
            k = top - d1 - d2
            delta = min(d1, d2)
            c = table[d1, d2]
            bound = count_partitions_bounded(delta, k)
            eq_expected = k <= n - 3 or (k == n - 2 and delta == 1) or delta == 0
            rep.cases_run += 1
            if d2 > d1:
                needs_symmetry += 1
            if c > bound:
                rep.fail(("bound", n, d1, d2), f"<= {bound}", c)
            elif (c == bound) != eq_expected:
                rep.fail(("equality", n, d1, d2), f"{'=' if eq_expected else '<'} {bound}", c)
    sym = table.is_symmetric()
    rep.notes.append(f"n={n}: {needs_symmetry} cells with d2 > d1 use the bound p(d1,k); table symmetric: {sym}")
    if not sym:
        rep.fail(("symmetry", n), "symmetric table", "asymmetric")
    return rep


def conjecture_value(n: int, k: int) -> int:
    return count_partitions(k) - 2 * sum(count_partitions(j) for j in range(0, k - n + 2)) - (
        count_partitions(k - n + 2) if k - n + 2 >= 0 else 0
    )


def check_conjecture(n: int) -> CheckReport:
    if not 6 <= n <= 10:
        raise SizeGuardError(f"check_conjecture supports 6 <= n <= 10, got {n}")
    rep = CheckReport("conjecture", (n, n))
    table = build_table(n)
    top = comb(n, 2)
    for k in range(n - 2, 2 * n - 7):
        pred = conjecture_value(n, k)
        for d1 in range(top - k + 1):
            d2 = top - k - d1
            if min(d1, d2) < k:
                continue
            rep.cases_run += 1
            if table[d1, d2] != pred:
                rep.fail(("conjecture", n, d1, d2), pred, table[d1, d2])
    return rep


def _per_n(name, fn, n_range, lo, hi) -> CheckReport:
    rep = CheckReport(name, tuple(n_range))
    for n in _clamp(n_range, lo, hi):
        sub = fn(n)
        rep.cases_run += sub.cases_run
        rep.failures += sub.failures
        rep.notes += sub.notes
    return rep


def suite_theoremA(n_range=(3, 10), seed=DEFAULT_SEED, trials=0) -> CheckReport:
    return _per_n("theoremA", check_theoremA, n_range, 3, 10)


def suite_conjecture(n_range=(6, 10), seed=DEFAULT_SEED, trials=0) -> CheckReport:
    return _per_n("conjecture", check_conjecture, n_range, 6, 10)


def suite_corollaryB(n_range=(3, 10), seed=DEFAULT_SEED, trials=0) -> CheckReport:
    rep = CheckReport("corollaryB", tuple(n_range))
    for n in _clamp(n_range, 3, 10):
        s = specialize_qq(build_table(n))
        for k in range(0, n - 2):
            rep.cases_run += 1
            want = corollary_b_formula(n, k)
            if s[comb(n, 2) - k] != want:
                rep.fail(("corollaryB", n, k), want, s[comb(n, 2) - k])
    return rep


def suite_basis(n_range=(3, 10), seed=DEFAULT_SEED, trials=0) -> CheckReport:
    rep = CheckReport("basis", tuple(n_range))
    for n in _clamp(n_range, 3, 10):
        table = build_table(n)
        top = comb(n, 2)
        for d2 in range(top + 1):
            for d1 in range(d2, top - d2 + 1):
                k = top - d1 - d2
                if k > n - 3:
                    continue
                rep.cases_run += 1
                try:
                    r = basis_certificate(n, d1, d2)
                    if k <= n - 4:
                        for nu in enumerate_partitions_bounded(d2, k):
                            construct_D_nu(n, d1, d2, nu)
                except AssertionError as exc:
                    rep.fail(("basis", n, d1, d2), "certificate", exc)
                    continue
                want = count_partitions_bounded(d2, k)
                if r.rank != want or table[d1, d2] != want:
                    rep.fail(("basis", n, d1, d2), want, (r.rank, table[d1, d2]))
    return rep


SUITES = {
    "lemma32": suite_lemma32,
    "lemma34": suite_lemma34,
    "lemma59_510": suite_lemma59_510,
    "phi_dual": suite_phi_dual,
    "prop39": suite_prop39,
    "theta": suite_theta,
    "census": suite_census,
    "theoremA": suite_theoremA,
    "conjecture": suite_conjecture,
    "corollaryB": suite_corollaryB,
    "basis": suite_basis,
}


def run_suite(name: str, n_range=None, seed: int = DEFAULT_SEED, trials: int | None = None) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[name]
    kwargs = {"seed": seed}
    if n_range is not None:
        kwargs["n_range"] = tuple(n_range)
    if trials is not None:
        kwargs["trials"] = trials
    start = time.perf_counter()
    rep = fn(**kwargs)
    rep.elapsed = time.perf_counter() - start
    return rep


def check_all(
    suites=None, n_range=None, seed: int = DEFAULT_SEED, trials: int | None = None, parallel: int = 0
) -> CheckReport:
    """Run the named suites (all by default). ``parallel > 1`` uses that many
    worker processes; reports are merged in suite order either way."""
    names = list(suites or SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}")
    agg = CheckReport("all", tuple(n_range or (1, 10)))
    start = time.perf_counter()
    if parallel > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            futures = [pool.submit(run_suite, name, n_range, seed, trials) for name in names]
            reports = [f.result() for f in futures]
    else:
        reports = [run_suite(name, n_range, seed, trials) for name in names]
    for rep in reports:
        agg.parts.append(rep)
        agg.cases_run += rep.cases_run
    agg.elapsed = time.perf_counter() - start
    return agg
