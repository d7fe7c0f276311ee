"""Command-line interface: subcommands, formats, exit codes, determinism."""

import json
from fractions import Fraction

import pytest

from dbecurves.cli import main, parse_range

F = Fraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("4..10") == [4, 5, 6, 7, 8, 9, 10]
    assert parse_range("8") == [8]
    assert parse_range(" 1..3 ") == [1, 2, 3]


def test_construct_n3(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "3", "--a", "1/4",
                           "--alpha", "1/2")
    assert code == 0
    blob = json.loads(out)
    assert blob["n"] == 3
    assert blob["components"] == [{"a": "1/4", "kind": "riesz_nagy"}]
    assert blob["schema_version"] == 1


def test_construct_n5_has_composed_mappers(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "5", "--a", "1/4",
                           "--M", "4")
    assert code == 0
    blob = json.loads(out)
    assert blob["n"] == 5
    assert len(blob["components"]) == 3
    assert blob["components"][0]["kind"] == "riesz_nagy"
    assert all(c["kind"] == "composition" for c in blob["components"][1:])
    assert len(blob["mappers"]) == 2


def test_construct_rejects_n2(capsys):
    code, _, err = run_cli(capsys, "construct", "--n", "2")
    assert code == 2
    assert "n >= 3" in err


def test_certify_n3(capsys):
    code, out, _ = run_cli(capsys, "certify", "--n", "3", "--d", "14")
    assert code == 0
    blob = json.loads(out)
    assert blob["upper"] == "2/1"
    assert float(blob["lower"]) == pytest.approx(1.7461950287924362, abs=1e-12)
    assert float(blob["error_radius"]) < 1e-18
    assert blob["depth"] == 14
    assert blob["method"]["upper"] == "partition-image-sum"


def test_certify_n4_upper(capsys):
    code, out, _ = run_cli(capsys, "certify", "--n", "4", "--d", "5")
    assert code == 0
    assert json.loads(out)["upper"] == "3/1"


def test_certify_depth_zero_valid(capsys):
    code, out, _ = run_cli(capsys, "certify", "--n", "3", "--d", "0")
    assert code == 0
    blob = json.loads(out)
    assert float(blob["lower"]) == pytest.approx(2.0 ** 0.5, abs=1e-12)


def test_certify_spec_roundtrip(tmp_path, capsys):
    spec_file = tmp_path / "curve.json"
    code, out, _ = run_cli(capsys, "construct", "--n", "4", "--out",
                           str(spec_file))
    assert code == 0 and spec_file.exists()
    code, out, _ = run_cli(capsys, "certify", "--spec", str(spec_file),
                           "--d", "4")
    assert code == 0
    assert json.loads(out)["upper"] == "3/1"


def test_verify_dbe(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dbe", "--n", "3", "--d", "5")
    assert code == 0
    blob = json.loads(out)
    assert blob["ok"] is True
    assert blob["pair_count"] == 33 * 32 // 2
    assert blob["violations"] == []


def test_verify_family(capsys):
    code, out, _ = run_cli(capsys, "verify", "--family", "--n", "4")
    assert code == 0
    blob = json.loads(out)
    assert blob["max_family_size"] == 4
    assert blob["near_pencil_attains"] is True


def test_verify_family_bad_n(capsys):
    code, _, err = run_cli(capsys, "verify", "--family", "--n", "9")
    assert code == 2
    assert "2..5" in err


def test_verify_lemmas(capsys):
    code, out, _ = run_cli(capsys, "verify", "--lemmas", "--trials", "30",
                           "--seed", "7")
    assert code == 0
    blob = json.loads(out)
    assert blob["ok"] is True
    assert set(blob["violations"]) == {
        "refinement", "sum_image_bound", "lipschitz_image", "derivative_bound"
    }


def test_emit_samples(capsys):
    code, out, _ = run_cli(capsys, "emit", "--samples", "--d", "8")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x1,x2,x3"
    assert len(lines) == 1 + 257
    assert lines[1] == "0/1,0/1,1/2"
    assert lines[-1] == "1/1,1/1,1/2"


def test_emit_length_series_nondecreasing(capsys):
    code, out, _ = run_cli(capsys, "emit", "--length-series", "--d", "1..14")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "depth,value,error_radius"
    assert len(lines) == 15
    values = [float(line.split(",")[1]) for line in lines[1:]]
    assert values == sorted(values)


def test_emit_boxcount(capsys):
    code, out, _ = run_cli(capsys, "emit", "--boxcount", "--m", "4..10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "m,count"
    assert len(lines) == 8
    assert lines[1] == "4,23"
    assert lines[-1] == "10,1365"


def test_emit_deterministic(capsys, tmp_path):
    f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli(capsys, "emit", "--samples", "--d", "6", "--out", str(f1))
    run_cli(capsys, "emit", "--samples", "--d", "6", "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_construct_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "construct", "--n", "5")
    _, out2, _ = run_cli(capsys, "construct", "--n", "5")
    assert out1 == out2


def test_precision_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("DBECURVES_PRECISION", "16")
    code, _, err = run_cli(capsys, "certify", "--n", "3", "--d", "2")
    assert code == 2
    assert "precision" in err
    monkeypatch.setenv("DBECURVES_PRECISION", "48")
    code, out, _ = run_cli(capsys, "certify", "--n", "3", "--d", "2")
    assert code == 0
    monkeypatch.delenv("DBECURVES_PRECISION")
    code, _, err = run_cli(capsys, "certify", "--n", "3", "--d", "2",
                           "--precision", "8")
    assert code == 2


def test_rational_flag_parsing(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "3", "--a", "2/5",
                           "--alpha", "3/7")
    assert code == 0
    blob = json.loads(out)
    assert blob["a"] == "2/5"
    assert blob["alpha"] == "3/7"
