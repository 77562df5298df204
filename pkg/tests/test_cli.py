import json
import subprocess
import sys

from lgperiod.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_period_matches_the_documented_output(capsys):
    code, out, _ = run_cli(capsys, "period", "x+x^-1", "--degree", "4")
    assert code == 0
    assert out == '{"degree":4,"coefficients":["1","0","2","0","6"]}\n'


def test_period_of_zero_potential(capsys):
    code, out, _ = run_cli(capsys, "period", "0", "--degree", "2")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "0", "0"]


def test_period_rejects_runaway_degrees(capsys):
    code, _, err = run_cli(capsys, "period", "x+x^-1", "--degree", "65")
    assert code == 2
    assert "--degree" in err


def test_period_reports_parse_errors(capsys):
    code, _, err = run_cli(capsys, "period", "x +", "--degree", "2")
    assert code == 2
    assert "offset 3" in err


def test_period_with_grading_file(tmp_path, capsys):
    grading = {
        "rank": 1,
        "weights": [1],
        "tags": {"x": [1], "y": [1], "x^-1*y^-1": [1]},
    }
    path = tmp_path / "grading.json"
    path.write_text(json.dumps(grading))
    code, out, _ = run_cli(
        capsys, "period", "x + y + x^-1*y^-1", "--degree", "3", "--grading", str(path)
    )
    assert code == 0
    data = json.loads(out)
    assert data["monoid"] == {"rank": 1, "weights": [1]}
    assert data["coefficients"][3] == [{"class": [3], "coeff": "6"}]


def test_period_grading_rejects_zero_weights(tmp_path, capsys):
    path = tmp_path / "grading.json"
    path.write_text(json.dumps({"rank": 1, "weights": [0], "tags": {"x": [1]}}))
    code, _, err = run_cli(capsys, "period", "x", "--degree", "2", "--grading", str(path))
    assert code == 2
    assert "positive integers" in err


def test_period_grading_requires_all_tags(tmp_path, capsys):
    path = tmp_path / "grading.json"
    path.write_text(json.dumps({"rank": 1, "weights": [1], "tags": {"x": [1]}}))
    code, _, err = run_cli(
        capsys, "period", "x + y", "--degree", "2", "--grading", str(path)
    )
    assert code == 2
    assert "y" in err


def test_period_grading_rejects_misspelled_tags(tmp_path, capsys):
    path = tmp_path / "grading.json"
    path.write_text(
        json.dumps({"rank": 1, "weights": [1], "tags": {"x": [1], "x^1*y": [1]}})
    )
    code, _, err = run_cli(
        capsys, "period", "x + x*y", "--degree", "2", "--grading", str(path)
    )
    assert code == 2
    assert "x^1*y" in err and "x*y" in err


def test_verify_pass_and_unknown_space(capsys):
    code, out, _ = run_cli(capsys, "verify", "P1", "--degree", "20")
    assert code == 0
    assert out.rstrip().endswith("PASS")

    code, out, _ = run_cli(capsys, "verify", "P2", "--degree", "12", "--json")
    assert code == 0
    assert json.loads(out)["match"] is True

    code, _, err = run_cli(capsys, "verify", "P5", "--degree", "10")
    assert code == 2
    assert "unknown reference space" in err


def test_match_command(capsys):
    code, out, _ = run_cli(
        capsys, "match", "x+y+x^-1*y^-1", "y+x+y^-1*x^-1", "--degree", "6"
    )
    assert code == 0
    assert "EQUAL" in out

    code, out, _ = run_cli(
        capsys, "match", "x+y+x^-1*y^-1", "x+x^-1+y+y^-1", "--degree", "4", "--json"
    )
    assert code == 0
    assert json.loads(out)["mismatch"] == 2


def test_mutate_command(capsys):
    code, out, _ = run_cli(
        capsys, "mutate", "y + x*y + y^-1", "--w", "0,-1", "--h", "1+x", "--degree", "8"
    )
    assert code == 0
    assert "y + x*y^-1 + y^-1" in out
    assert "periods agree to degree 8" in out

    code, out, _ = run_cli(
        capsys, "mutate", "x+y+x^-1*y^-1", "--w", "0,1", "--h", "1+x", "--degree", "4"
    )
    assert code == 0
    assert "NotMutable at level -1" in out

    code, out, _ = run_cli(
        capsys, "mutate", "y + x*y + y^-1", "--w", "0,-1", "--h", "1", "--degree", "4",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["mutable"] and data["periods_equal"]


def test_db_round_trip(tmp_path, capsys):
    database = tmp_path / "db.jsonl"
    code, out, _ = run_cli(
        capsys, "db", "add", str(database),
        "--name", "p1", "--potential", "x + x^-1", "--degree", "8",
    )
    assert code == 0 and "added p1" in out

    code, out, _ = run_cli(
        capsys, "db", "add", str(database),
        "--name", "p2", "--potential", "x + y + x^-1*y^-1", "--degree", "8",
    )
    assert code == 0

    code, out, _ = run_cli(
        capsys, "db", "search", str(database),
        "--query", "[1,0,2,0,6]", "--degree", "4",
    )
    assert code == 0
    names = [json.loads(line)["name"] for line in out.splitlines()]
    assert names == ["p1"]


def test_db_add_rejects_tampered_record(tmp_path, capsys):
    database = tmp_path / "db.jsonl"
    record = {
        "name": "bad",
        "potential": "x + x^-1",
        "sequence": {"degree": 4, "coefficients": ["1", "0", "3", "0", "6"]},
    }
    record_path = tmp_path / "record.json"
    record_path.write_text(json.dumps(record))
    code, _, err = run_cli(
        capsys, "db", "add", str(database), "--record", str(record_path)
    )
    assert code == 2
    assert "disagrees" in err


def _external(*argv):
    return subprocess.run(
        [sys.executable, "-m", "lgperiod.cli", *argv],
        capture_output=True,
        check=False,
    )


def test_reruns_are_byte_identical():
    # two fresh interpreters (different hash seeds) must print identical bytes
    first = _external("period", "x + y + x^-1*y^-1", "--degree", "9")
    second = _external("period", "x + y + x^-1*y^-1", "--degree", "9")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout

    first = _external("verify", "P1xP1", "--degree", "10", "--json")
    second = _external("verify", "P1xP1", "--degree", "10", "--json")
    assert first.stdout == second.stdout and first.returncode == 0
