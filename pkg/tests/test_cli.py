"""Exit codes, flag parsing, and output determinism of the command line."""

import json

import pytest

from specialortho.cli import main
from specialortho.superalg import import_superalgebra


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_ok(capsys):
    code, out, err = run(capsys, "verify", "g2", "--compact")
    assert code == 0
    assert err == ""
    assert out.endswith("result: ok (15 checks: 15 hold)\n")


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "d21", "--alpha", "1", "--beta", "1")
    assert code == 1
    assert "FAIL" in out
    assert "witness" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "mathews", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["suite"] == "mathews"
    assert blob["result"] == "ok"


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "hodge", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("suite: hodge\n")


def test_verify_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "g2", "--json", "--out", str(a))
    run(capsys, "verify", "g2", "--json", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_unknown_suite_exits_2(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_zero_alpha_exits_2(capsys):
    code, _, err = run(capsys, "verify", "d21", "--alpha", "0")
    assert code == 2
    assert "nonzero" in err


def test_bad_at_exits_2(capsys):
    code, _, err = run(capsys, "verify", "g2", "--at", "l1=2,bogus=1")
    assert code == 2
    assert "--at" in err


def test_non_rational_alpha_exits_2(capsys):
    code, _, err = run(capsys, "verify", "d21", "--alpha", "l1")
    assert code == 2
    assert "rational" in err


def test_decompose_row_counts(capsys):
    for target, count in (("phi", 7), ("q-im", 7), ("q-oct", 14)):
        code, out, _ = run(capsys, "decompose", target)
        assert code == 0
        assert len(out.splitlines()) == count
    assert "affine plane" in out


def test_decompose_bad_target(capsys):
    code, _, err = run(capsys, "decompose", "bogus")
    assert code == 2
    assert "q-oct" in err


def test_hodge_table(capsys):
    code, out, _ = run(capsys, "hodge")
    assert code == 0
    assert len(out.splitlines()) == 11
    assert "147/8" in out
    assert "-56" in out


def test_export_round_trip(tmp_path, capsys):
    target = tmp_path / "d21.json"
    code, out, _ = run(
        capsys, "export", "--algebra", "d21", "--alpha", "2", "--out", str(target)
    )
    assert code == 0
    assert "9|8" in out
    sa = import_superalgebra(target.read_text())
    assert (sa.even_dim, sa.odd_dim) == (9, 8)
    assert all(w is None for w in sa.super_jacobi_check().values())


def test_export_even_algebra_to_stdout(capsys):
    code, out, _ = run(capsys, "export", "--algebra", "g2", "--compact")
    assert code == 0
    blob = json.loads(out)
    assert blob["even_dim"] == 14
    assert blob["odd_dim"] == 0
    assert blob["parameters"] == {"l1": "1", "l2": "1", "l3": "1"}


def test_export_not_special_exits_2(tmp_path, capsys):
    code, _, err = run(
        capsys, "export", "--algebra", "d21",
        "--alpha", "1", "--beta", "1", "--out", str(tmp_path / "x.json"),
    )
    assert code == 2
    assert "special" in err


def test_export_bad_algebra(capsys):
    code, _, err = run(capsys, "export", "--algebra", "e8")
    assert code == 2
    assert "f4" in err
