import json
import random

import pytest

from qtcatalan import checks
from qtcatalan.phi import SizeGuardError


def test_suite_registry():
    assert set(checks.SUITES) == {
        "lemma32", "lemma34", "lemma59_510", "phi_dual", "prop39", "theta",
        "census", "theoremA", "conjecture", "corollaryB", "basis",
    }


def test_unknown_suite():
    with pytest.raises(KeyError):
        checks.run_suite("nope")
    with pytest.raises(KeyError):
        checks.check_all(["theta", "nope"])


def test_reports_are_deterministic():
    a = checks.run_suite("phi_dual", (1, 5), seed=7, trials=30)
    b = checks.run_suite("phi_dual", (1, 5), seed=7, trials=30)
    assert a.passed and a.cases_run == b.cases_run == 30
    assert a.failures == b.failures


def test_random_generators_are_seeded():
    assert checks.random_dprime(random.Random(3), 5) == checks.random_dprime(random.Random(3), 5)
    d = checks.random_d(random.Random(1), 4)
    assert all(x >= 0 and y >= 0 for x, y in d.points)


def test_failure_record_and_json():
    rep = checks.CheckReport("demo", (1, 2))
    rep.cases_run = 1
    rep.fail(("demo", 1), 3, 2)
    assert not rep.passed
    obj = json.loads(rep.to_json())
    assert obj["failures"] == [{"inputs": ["demo", 1], "expected": "3", "got": "2"}]
    assert "FAIL demo" in rep.format()


def test_aggregate_over_small_range():
    rep = checks.check_all(["theta", "census", "corollaryB"], (3, 6))
    assert rep.passed
    assert [p.suite for p in rep.parts] == ["theta", "census", "corollaryB"]
    assert rep.cases_run == sum(p.cases_run for p in rep.parts)


def test_parallel_matches_sequential():
    names = ["theta", "corollaryB", "theoremA"]
    seq = checks.check_all(names, (3, 6))
    par = checks.check_all(names, (3, 6), parallel=2)
    assert [(p.suite, p.cases_run, p.failures) for p in seq.parts] == [
        (p.suite, p.cases_run, p.failures) for p in par.parts
    ]


def test_bound_checker_notes_symmetry():
    rep = checks.check_theoremA(7)
    assert rep.passed
    assert any("symmetric: True" in note for note in rep.notes)


def test_probe_cells_n7():
    # k = n - 2 with delta != 1: strict inequality; the closed form matches
    from qtcatalan.dyck import build_table
    from qtcatalan.partitions import count_partitions_bounded

    t = build_table(7)
    assert t[8, 8] == 6 < count_partitions_bounded(8, 5) == 7
    assert checks.conjecture_value(7, 5) == 6


def test_guards():
    with pytest.raises(SizeGuardError):
        checks.check_theoremA(11)
    with pytest.raises(SizeGuardError):
        checks.check_conjecture(5)
