"""Command-line contract: JSON schema, exit codes, determinism."""

import json

from click.testing import CliRunner

from aztecbridge.cli import main

runner = CliRunner()


def run(*args):
    return runner.invoke(main, list(args))


def test_count_commands():
    for spec, expected in [("ad:4", 1024), ("hex:1,1,1", 2), ("dr:1,2,0,1,2", 12)]:
        result = run("count", spec)
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["schema"] == 1 and doc["status"] == "ok"
        assert doc["count"] == expected


def test_usage_errors_exit_two():
    assert run("count", "nonsense").exit_code == 2
    assert run("count", "dr:2,1,0,2,1").exit_code == 2
    assert run("genfun", "hex:1,1,1").exit_code == 2
    assert run("render", "dr:1,2,0,1,2", "99999").exit_code == 2


def test_genfun_reports_convention():
    result = run("genfun", "ad:1")
    doc = json.loads(result.output)
    assert result.exit_code == 0
    assert doc["matched_conventions"] == ["proof"] or set(
        doc["matched_conventions"]
    ) == {"proof", "statement"}
    assert doc["enumeration"] == [[0, 0, "1"], [2, 2, "1"]]  # 1 + tq


def test_genfun_double_rectangle_proof_convention():
    result = run("genfun", "dr:1,2,0,1,2")
    doc = json.loads(result.output)
    assert result.exit_code == 0
    assert "proof" in doc["matched_conventions"]
    assert doc["verdict"] == "ok"


def test_formula_command():
    doc = json.loads(run("formula", "dr:1,2,0,1,2").output)
    assert doc["count"] == 12
    doc = json.loads(run("formula", "hex:2,2,2").output)
    assert doc["count"] == 20
    assert run("formula", "ar:2x3").exit_code == 2


def test_rank_command():
    doc = json.loads(run("rank", "dr:1,2,0,1,2").output)
    assert doc["tilings"] == 12
    assert doc["ranks"]["0"] == 1


def test_paths_command():
    doc = json.loads(run("paths", "dr:1,2,0,1,2", "minimal").output)
    assert len(doc["paths"]) == 3
    assert doc["steps"]["up"] + doc["steps"]["down"] + 2 * doc["steps"]["level"] > 0


def test_render_command(tmp_path):
    out = tmp_path / "t.svg"
    result = run("render", "dr:1,2,0,1,2", "0", "--overlay", "paths", "--out", str(out))
    assert result.exit_code == 0
    first = out.read_bytes()
    run("render", "dr:1,2,0,1,2", "0", "--overlay", "paths", "--out", str(out))
    assert out.read_bytes() == first
    assert first.startswith(b"<?xml")


def test_verify_small_suites():
    for args in [
        ("verify", "aztec", "--max", "3"),
        ("verify", "macmahon", "--max", "2"),
        ("verify", "lemmas", "--trials", "5"),
    ]:
        result = run(*args)
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["status"] == "ok" and doc["failures"] == 0


def test_verify_is_seed_deterministic():
    a = run("verify", "weighted", "--trials", "2", "--seed", "9").output
    b = run("verify", "weighted", "--trials", "2", "--seed", "9").output
    assert a == b
