"""Command-line surface: parsing, subcommands, exit codes, determinism."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from picardfuchs.bipoly import X, Y
from picardfuchs.cli import main
from picardfuchs.errors import ParseError
from picardfuchs.parsing import parse_polynomial


def test_parse_examples():
    quintic = parse_polynomial("x^5+y^5+x^2*y^2+x+y")
    assert quintic == X**5 + Y**5 + X**2 * Y**2 + X + Y
    assert parse_polynomial("x^2 + y^2") == X**2 + Y**2
    assert parse_polynomial("3/2 x y - y^3") == Fraction(3, 2) * X * Y - Y**3


def test_parse_implicit_and_parens():
    assert parse_polynomial("x^2y^2") == X**2 * Y**2
    assert parse_polynomial("2(x+y)") == 2 * X + 2 * Y
    assert parse_polynomial("(x+y)^2") == (X + Y) ** 2
    assert parse_polynomial("-x^2") == -(X**2)
    assert parse_polynomial("  - 3 x ") == -3 * X


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^5 + z")
    assert err.value.position == 6
    with pytest.raises(ParseError):
        parse_polynomial("x^(2)")
    with pytest.raises(ParseError):
        parse_polynomial("x/2")
    with pytest.raises(ParseError):
        parse_polynomial("x +")


def test_check_rejection_exit_code(capsys):
    code = main(["check", "y^2+x^3-x"])
    out = capsys.readouterr().out
    assert code == 2
    assert "repeated factor" in out
    assert "x^3" in out


def test_check_accepts_quintic(capsys):
    code = main(["check", "x^5+y^5+x^2y^2+x+y", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["regular"] is True and doc["n"] == 4 and doc["mu"] == 16


def test_basis_listing(capsys):
    code = main(["basis", "x^3+y^3-3xy", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert [(e["a"], e["b"]) for e in doc["basis"]] == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_system_json_golden_entry(capsys):
    code = main(["system", "x^5+y^5+x^2y^2+x+y", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    basis = [(e["a"], e["b"]) for e in doc["basis"]]
    row = doc["B1"][basis.index((3, 3))]
    assert row[basis.index((0, 0))] == "1/175"
    assert {v for j, v in enumerate(row) if j != basis.index((0, 0))} == {"0"}
    assert doc["classification"]["infinity_fuchsian_form"] is False
    assert all(doc["validation"].values())


def test_system_out_file(tmp_path, capsys):
    target = tmp_path / "system.json"
    code = main(["system", "x^2+y^2", "--out", str(target)])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["A"] == [["0"]]


def test_reduce_command(capsys):
    code = main(["reduce", "x^2+y^2", "--form", "y,0", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["p"] == ["-1"]
    assert doc["zero_class"] is False


def test_verify_numeric(capsys):
    code = main(["verify", "x^3+y^3-3xy", "--numeric", "--t", "-0.5", "--seed", "1,1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "spectrum_ok: pass" in out
    assert "residual at t = -0.5" in out


def test_verify_fails_on_bad_residual_tol(capsys):
    code = main(["verify", "x^3+y^3-3xy", "--numeric", "--t", "-0.5",
                 "--seed", "1,1", "--residual-tol", "1e-18"])
    assert code == 1


def test_periods_command_and_cycle_file(tmp_path, capsys):
    cycle_file = tmp_path / "cycle.json"
    code = main(["periods", "x^2+y^2", "--t", "1", "--seed", "1,0",
                 "--out-cycle", str(cycle_file)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["residual"] < 1e-10
    assert abs(doc["I"][0][0] - 3.14159265358979) < 1e-9
    stored = json.loads(cycle_file.read_text())
    assert set(stored) == {"t", "samples"}

    code = main(["periods", "x^2+y^2", "--t", "1", "--seed", "1,0",
                 "--cycle", str(cycle_file)])
    doc2 = json.loads(capsys.readouterr().out)
    assert code == 0
    assert abs(doc2["I"][0][0] - doc["I"][0][0]) < 1e-12


def test_periods_x_loop_mode(capsys):
    code = main(["periods", "x^3+y^3", "--t", "1", "--seed", "2,-1.26",
                 "--mode", "x_loop", "--loop-center", "0", "--loop-turns", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["residual"] < 1e-8
    # the infinity loop pairs with the two degree-3 forms: periods +-(2 pi/3) i
    assert abs(abs(doc["I"][1][1]) - 2.0943951023931953) < 1e-8


def test_json_errors_flag(capsys):
    code = main(["--json-errors", "system", "x^5 + w"])
    captured = capsys.readouterr()
    assert code == 2
    doc = json.loads(captured.err)
    assert doc["error"] == "ParseError"
    assert doc["position"] == 6


def test_critical_t_is_input_error(capsys):
    code = main(["periods", "x^2+y^2", "--t", "0", "--seed", "0,0"])
    assert code == 2


def test_cli_deterministic_bytes():
    cmd = [sys.executable, "-m", "picardfuchs.cli", "system", "x^3+y^3-3xy", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    doc = json.loads(first.decode())
    assert doc["mu"] == 4
