"""Command-line interface: output formats, round trips, exit codes."""

import json

from orbiseif.cli import main, report_from_dict, report_json
from orbiseif.engine import evaluate
from orbiseif.groups import FamilySpec


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_json_icosahedral(capsys):
    code, out, _ = run_cli(capsys, "compute", "--family", "9", "-m", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["euler"] == {"num": -1, "den": 30}
    assert doc["base"]["kind"] == "Sphere"
    assert doc["base"]["cones"] == [2, 3, 5]
    assert doc["underlying"]["kind"] == "NotComputed"


def test_compute_text_projective_space(capsys):
    code, out, _ = run_cli(capsys, "compute", "--family", "1",
                           "-m", "1", "-n", "1", "-r", "1", "-s", "1")
    assert code == 0
    assert "L(2,1)" in out


def test_compute_invalid_parameters_exit_1(capsys):
    code, _, err = run_cli(capsys, "compute", "--family", "1p",
                           "-m", "2", "-n", "1", "-r", "2", "-s", "1")
    assert code == 1
    assert "m must be odd" in err


def test_compute_unsupported_family_exit_3(capsys):
    code, _, err = run_cli(capsys, "compute", "--family", "20")
    assert code == 3
    assert "no fibration" in err
    code, _, _ = run_cli(capsys, "compute", "--family", "nonsense")
    assert code == 3


def test_compute_with_verification(capsys):
    code, out, _ = run_cli(capsys, "compute", "--family", "2",
                           "-m", "2", "-n", "3", "--verify")
    assert code == 0
    assert "agrees" in out


def test_json_round_trip_and_determinism(capsys):
    report = evaluate(FamilySpec("10", m=2, n=3))
    text = report_json(report)
    assert report_from_dict(json.loads(text)) == report
    assert report_json(report) == text
    code1, out1, _ = run_cli(capsys, "compute", "--family", "34",
                             "-m", "3", "-n", "5", "--json")
    code2, out2, _ = run_cli(capsys, "compute", "--family", "34",
                             "-m", "3", "-n", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_mirror_and_normalized_flags(capsys):
    _, plain, _ = run_cli(capsys, "compute", "--family", "9", "-m", "1", "--json")
    _, mirrored, _ = run_cli(capsys, "compute", "--family", "9", "-m", "1",
                             "--json", "--mirror")
    assert json.loads(mirrored)["euler"] == {"num": 1, "den": 30}
    nums = sorted((v["num"], v["den"])
                  for v in json.loads(mirrored)["invariants"])
    assert nums == [(1, 2), (2, 3), (4, 5)]
    _, normalized, _ = run_cli(capsys, "compute", "--family", "1", "-m", "1",
                               "-n", "1", "-r", "2", "-s", "1",
                               "--json", "--normalized")
    assert all(v["num"] == v["normalizedNum"]
               for v in json.loads(normalized)["invariants"])


def test_enumerate_bounds_and_fibered_flags(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-order", "24",
                           "--families", "9")
    assert code == 0
    assert "total: 0 groups" in out

    code, out, _ = run_cli(capsys, "enumerate", "--max-order", "120",
                           "--families", "30,31", "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"family": "31", "params": {}, "phiOrder": 120,
                     "fibered": False}]

    code, out, _ = run_cli(capsys, "enumerate", "--max-order", "8",
                           "--families", "1", "--json")
    rows = json.loads(out)
    assert all(row["phiOrder"] <= 8 for row in rows)
    assert {tuple(sorted(r["params"].items())) for r in rows} >= \
        {(("m", 1), ("n", 1), ("r", 2), ("s", 1))}


def test_enumerate_invalid_bound(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--max-order", "0")
    assert code == 1


def test_verify_small_run_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-order", "16",
                           "--families", "abelian,dihedral")
    assert code == 0
    assert "all agree" in out


def test_verify_bad_arguments(capsys):
    code, _, _ = run_cli(capsys, "verify", "--max-order", "0")
    assert code == 1
    code, _, _ = run_cli(capsys, "verify", "--max-order", "10",
                         "--families", "bogus")
    assert code == 1
    code, _, _ = run_cli(capsys, "verify", "--max-order", "10",
                         "--families", "20")
    assert code == 1


def test_verify_json_shape(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-order", "12",
                           "--families", "2,34", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["mismatches"] == []
    assert doc["checked"] > 0


def test_usage_error_exit_code(capsys):
    assert main(["compute"]) == 1
    assert main(["bogus-command"]) == 1
