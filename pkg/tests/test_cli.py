import json

import pytest

from qtcatalan.cli import main
from qtcatalan.dyck import CatalanTable, build_table
from qtcatalan.rho import RhoPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_text_and_json(capsys):
    code, out, _ = run(capsys, "table", "--n", "4")
    assert code == 0
    assert out.splitlines() == build_table(4).format_grid().splitlines()
    code, out, _ = run(capsys, "table", "--n", "4", "--json")
    assert CatalanTable.from_json(out) == build_table(4)


def test_coeff(capsys):
    assert run(capsys, "coeff", "--n", "7", "--d1", "7", "--d2", "8")[1].strip() == "8"
    code, out, _ = run(capsys, "coeff", "--n", "7", "--d1", "8", "--d2", "8", "--json")
    assert json.loads(out)["coeff"] == "6"


def test_phi_json(capsys):
    code, out, _ = run(capsys, "phi", "--diagram", "(0,0);(0,1);(1,0)", "--json")
    assert code == 0
    assert RhoPoly.from_json(out) == RhoPoly.rho(1)


def test_diagrams(capsys):
    code, out, _ = run(capsys, "diagrams", "--n", "4", "--d1", "3", "--d2", "2")
    assert code == 0 and len(out.split()) == build_table(4)[3, 2]
    code, out, _ = run(capsys, "diagrams", "--n", "4")
    assert out.strip() == build_table(4).format_grid()
    assert run(capsys, "diagrams", "--n", "4", "--d1", "3")[0] == 2


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "basis", "--n", "7", "--d1", "13", "--d2", "5", "--json")
    assert code == 0 and json.loads(out)["rank"] == 3
    code, out, _ = run(capsys, "construct", "fnu", "--n", "7", "--d1", "14", "--d2", "3", "--partition", "1,1,2")
    assert code == 0 and "phi = -r1^2*r2" in out
    code, out, _ = run(capsys, "construct", "dnu", "--n", "7", "--d1", "13", "--d2", "5", "--partition", "3")
    assert code == 0 and out.startswith("nu=(3,)")
    assert run(capsys, "construct", "dnu", "--n", "7", "--d1", "13", "--d2", "5")[0] == 2


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--suite", "theta", "--n-range", "1..5")
    assert code == 0 and out.startswith("PASS theta")
    code, out, _ = run(capsys, "check", "--suite", "corollaryB", "--n-range", "3..6", "--json")
    assert json.loads(out)["passed"] is True


def test_export_to_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    assert run(capsys, "export", "csv", "--n", "5", "--out", str(target))[0] == 0
    assert CatalanTable.from_csv(5, target.read_text()) == build_table(5)
    target = tmp_path / "t.json"
    assert run(capsys, "export", "json", "--n", "5", "--out", str(target))[0] == 0
    assert CatalanTable.from_json(target.read_text()) == build_table(5)


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["table"],
        ["table", "--n", "20"],
        ["phi", "--diagram", "(0,0);(0,0)"],
        ["check", "--suite", "nope"],
        ["check", "--suite", "theta", "--n-range", "5..1"],
        ["construct", "basis", "--n", "7", "--d1", "8", "--d2", "8"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
