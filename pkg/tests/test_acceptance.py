"""Acceptance criteria, one test each.  Every test prints a single
``criterion N: PASS|FAIL ...`` line, echoed again in the terminal summary."""
from __future__ import annotations

import subprocess
import sys
import time
from math import comb
from pathlib import Path

import pytest

from qtcatalan import checks
from qtcatalan.catalan_diagrams import census, iter_lambda, theta, theta_inverse
from qtcatalan.dyck import build_table, catalan_number, corollary_b_formula, specialize_qq
from qtcatalan.rho import RhoPoly

from conftest import ACCEPTANCE_LINES

GOLDEN = Path(__file__).parent / "golden" / "catalan_n7.txt"


def _record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _load_golden() -> list[list[int]]:
    rows = []
    for raw in GOLDEN.read_text().splitlines():
        raw = raw.strip()
        if raw and not raw.startswith("#"):
            rows.append([int(v) for v in raw.split()])
    return rows


def test_c01_golden_table_n7():
    start = time.perf_counter()
    table = build_table(7)
    elapsed = time.perf_counter() - start
    golden = _load_golden()
    m = comb(7, 2)
    # the file stores the triangle d1 + d2 <= 21; the rest of the 22 x 22 square is zero
    expected = {(d1, m - j): row[d1] for j, row in enumerate(golden) for d1 in range(len(row))}
    square = [(d1, d2) for d1 in range(m + 1) for d2 in range(m + 1)]
    cells = len(square)
    mismatched = [c for c in square if table[c] != expected.get(c, 0)]
    ok = (
        len(golden) == m + 1
        and table.grid() == golden
        and not mismatched
        and cells == 484
        and table[0, 21] == 1
        and table[21, 0] == 1
        and table[7, 8] == 8
        and elapsed < 1.0
    )
    _record(1, ok, f"{cells} cells, {len(mismatched)} mismatches, (7,8)={table[7, 8]}, {elapsed:.3f}s")


def test_c02_catalan_totals():
    bad = [n for n in range(1, 13) if build_table(n).total != comb(2 * n, n) // (n + 1)]
    start = time.perf_counter()
    t12 = build_table(12)
    elapsed = time.perf_counter() - start
    ok = not bad and t12.total == 208012 and elapsed < 5.0
    _record(2, ok, f"n=1..12 totals, mismatches={bad}, n=12 in {elapsed:.2f}s")


def test_c03_phi_reference_value():
    diagram = "(-1,1);(0,0);(0,1);(0,2);(1,1)"
    out = subprocess.run(
        [sys.executable, "-m", "qtcatalan", "phi", "--diagram", diagram, "--method", "both"],
        capture_output=True, text=True, check=False,
    )
    r = RhoPoly.rho
    want = -r(2) * r(3) + r(1) * r(4) + r(1) * r(2) ** 2 - 2 * r(1) ** 2 * r(3) + 2 * r(1) ** 3 * r(2) - r(1) ** 5
    text = out.stdout.strip()
    ok = out.returncode == 0 and text == str(want) and text == "-r2*r3 + r1*r4 + r1*r2^2 - 2*r1^2*r3 + 2*r1^3*r2 - r1^5"
    _record(3, ok, f"phi = {text}")


def test_c04_phi_dual_definition():
    rep = checks.run_suite("phi_dual", (1, 7), trials=500)
    _record(4, rep.passed and rep.cases_run >= 500, f"{rep.cases_run} diagrams, {len(rep.failures)} mismatches")


def test_c05_alternant_properties():
    rep = checks.run_suite("lemma32", (1, 7), trials=200)
    _record(5, rep.passed, f"{rep.cases_run} cases, {len(rep.failures)} failures")


def test_c06_leading_terms():
    rep = checks.run_suite("lemma59_510", trials=200)
    _record(6, rep.passed and rep.cases_run >= 400, f"{rep.cases_run} configurations, {len(rep.failures)} failures")


def test_c07_staircase_expansion():
    rep = checks.run_suite("prop39", (1, 4), trials=100)
    _record(7, rep.passed and rep.cases_run >= 100, f"{rep.cases_run} diagrams, {len(rep.failures)} failures")


def test_c08_power_sum_identity():
    rep = checks.run_suite("lemma34", (1, 4), trials=100)
    _record(8, rep.passed and rep.cases_run >= 100, f"{rep.cases_run} triples, {len(rep.failures)} failures")


def test_c09_theta_and_census():
    start = time.perf_counter()
    bad = []
    sizes = {}
    for n in range(1, 10):
        lams = list(iter_lambda(n))
        sizes[n] = len(lams)
        if any(theta_inverse(theta(lam)) != lam for lam in lams):
            bad.append(("round-trip", n))
        if census(n) != build_table(n):
            bad.append(("census", n))
    elapsed = time.perf_counter() - start
    ok = not bad and sizes[9] == 4862 and elapsed < 10.0
    _record(9, ok, f"n=1..9, |Lambda_9|={sizes[9]}, failures={bad}, {elapsed:.2f}s")


@pytest.mark.slow
def test_c10_basis_certificates():
    start = time.perf_counter()
    rep = checks.run_suite("basis", (3, 10))
    elapsed = time.perf_counter() - start
    ok = rep.passed and elapsed < 300
    _record(10, ok, f"{rep.cases_run} bidegrees, {len(rep.failures)} failures, {elapsed:.1f}s")


def test_c11_bound_and_equality_cases():
    rep = checks.run_suite("theoremA", (3, 10))
    _record(11, rep.passed, f"{rep.cases_run} cells n=3..10, {len(rep.failures)} failures")


def test_c12_closed_form_beyond_range():
    rep = checks.run_suite("conjecture", (6, 10))
    _record(12, rep.passed and rep.cases_run > 0, f"{rep.cases_run} cells n=6..10, {len(rep.failures)} failures")


def test_c13_antidiagonal_sums():
    rep = checks.run_suite("corollaryB", (3, 10))
    s7 = specialize_qq(build_table(7))
    spot = (s7[21], s7[20]) == (22, 19) == (corollary_b_formula(7, 0), corollary_b_formula(7, 1))
    small = all(
        specialize_qq(build_table(n))[comb(n, 2) - k] == corollary_b_formula(n, k)
        for n in (1, 2) for k in range(0, max(0, n - 2))
    )
    _record(13, rep.passed and spot and small, f"{rep.cases_run} cases, n=7 spot {s7[21]},{s7[20]}")


def test_catalan_number_helper():
    assert [catalan_number(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
