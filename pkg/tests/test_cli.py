import json
import subprocess
import sys

import pytest

from symdet import cli, schur


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_betti_table_format(capsys):
    code, out, err = run_cli(capsys, "betti", "--n", "3", "--t", "1")
    assert code == 0 and not err
    assert "total:" in out
    assert "6  8  3" in out


def test_betti_json(capsys):
    code, out, _ = run_cli(capsys, "betti", "--n", "5", "--t", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["char"] == "0"
    assert [entry["rank"] for entry in doc["entries"]] == ["1", "15", "24", "10"]
    assert doc["entries"][2]["partitions"] == ["5,4,1"]


def test_betti_json_deterministic_and_roundtrips(capsys):
    first = run_cli(capsys, "betti", "--n", "4", "--t", "2", "--format", "json")
    second = run_cli(capsys, "betti", "--n", "4", "--t", "2", "--format", "json")
    assert first == second
    out = first[1]
    doc = json.loads(out)
    assert json.dumps(doc, indent=2) + "\n" == out
    keys = [(entry["i"], entry["degree"]) for entry in doc["entries"]]
    assert keys == sorted(keys)


def test_betti_usage_errors(capsys):
    code, out, err = run_cli(capsys, "betti", "--n", "2", "--t", "2")
    assert code == 2 and not out and "error" in err
    code, _, _ = run_cli(capsys, "betti", "--n", "3")
    assert code == 2
    code, _, _ = run_cli(capsys, "betti", "--n", "3", "--t", "1", "--bogus")
    assert code == 2


def test_classify_symmetric(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--family", "symmetric", "--n", "3", "--t", "1"
    )
    assert code == 0
    assert "almost_gorenstein=yes" in out
    assert "gorenstein=no" in out

    code, out, _ = run_cli(
        capsys,
        "classify", "--family", "symmetric", "--n", "3", "--t", "1",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["almost_gorenstein"] is True
    assert doc["obstruction"]["passes"] is True


def test_classify_hankel(capsys):
    code, out, _ = run_cli(
        capsys,
        "classify", "--family", "hankel", "--n", "5", "--t", "2",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["almost_gorenstein"] is True
    assert doc["cm_type"] == "not computed"


def test_classify_pfaffian_square(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--family", "pfaffian-square", "--n", "5",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["almost_gorenstein"] is False
    assert doc["t"] is None


def test_classify_usage_errors(capsys):
    # symmetric and hankel need --t, pfaffian-square must not get one
    code, _, err = run_cli(capsys, "classify", "--family", "symmetric", "--n", "3")
    assert code == 2 and "--t" in err
    code, _, _ = run_cli(
        capsys, "classify", "--family", "pfaffian-square", "--n", "5", "--t", "1"
    )
    assert code == 2
    code, _, _ = run_cli(capsys, "classify", "--family", "hankel", "--n", "3", "--t", "4")
    assert code == 2
    code, _, _ = run_cli(capsys, "classify", "--family", "weird", "--n", "3", "--t", "1")
    assert code == 2


def test_schur_rank(capsys):
    code, out, _ = run_cli(capsys, "schur-rank", "--shape", "5,4,1", "--n", "5")
    assert code == 0
    assert out.strip() == "24"


def test_schur_rank_with_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "schur-rank", "--shape", "5,4,1", "--n", "5", "--oracle-cap", "12"
    )
    assert code == 0
    assert out.splitlines() == ["24", "oracle: 24"]
    # a cap below the box count is an explicit usage error, never silence
    code, _, err = run_cli(
        capsys, "schur-rank", "--shape", "5,4,1", "--n", "5", "--oracle-cap", "5"
    )
    assert code == 2 and "cap" in err


def test_schur_rank_json(capsys):
    code, out, _ = run_cli(
        capsys, "schur-rank", "--shape", "2,2", "--n", "3", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"shape": "2,2", "n": 3, "rank": "6"}


def test_schur_rank_usage_errors(capsys):
    code, _, _ = run_cli(capsys, "schur-rank", "--shape", "2,3", "--n", "3")
    assert code == 2
    code, _, _ = run_cli(capsys, "schur-rank", "--shape", "x,y", "--n", "3")
    assert code == 2
    code, _, _ = run_cli(capsys, "schur-rank", "--shape", "2,1", "--n", "0")
    assert code == 2


def test_partition_command(capsys):
    code, out, _ = run_cli(capsys, "partition", "--shape", "4,4,2,1")
    assert code == 0
    assert "conjugate: 4,3,2,2" in out
    assert "hook notation: 4,3|4,2" in out

    code, out, _ = run_cli(
        capsys, "partition", "--shape", "4,4,2,1", "--format", "json"
    )
    doc = json.loads(out)
    assert doc == {
        "shape": "4,4,2,1",
        "weight": 11,
        "conjugate": "4,3,2,2",
        "diagonal_rank": 2,
        "hook_notation": "4,3|4,2",
    }


def test_partition_empty_shape(capsys):
    code, out, _ = run_cli(capsys, "partition", "--shape", "", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weight"] == 0
    assert doc["hook_notation"] is None


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "4")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 12


def test_verify_fault_injection(monkeypatch, capsys):
    # corrupting the closed form must be caught and named, with exit code 1
    real = schur.schur_rank

    def corrupted(shape, n):
        return real(shape, n) + (1 if shape.parts else 0)

    monkeypatch.setattr(schur, "schur_rank", corrupted)
    code, out, _ = run_cli(capsys, "verify", "--n-max", "4")
    assert code == 1
    assert "FAIL schur-ssyt-oracle" in out


def test_unknown_command(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symdet", "schur-rank", "--shape", "2,2", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "6"
