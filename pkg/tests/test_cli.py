"""Command-line behavior: output shapes, exit codes, round trips."""
import json
import subprocess
import sys

import pytest

from arctanpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "--kind", "beta", "--n", "5")
    assert code == 0
    assert out.strip() == "6x^5 - 20x^3 + 6x"


def test_poly_json_alpha_zero(capsys):
    code, out, _ = run_cli(capsys, "poly", "--kind", "alpha", "--n", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["1"]
    assert payload["kind"] == "alpha"


def test_poly_json_monic(capsys):
    code, out, _ = run_cli(capsys, "poly", "--kind", "pi", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["-1/3", "0", "1"]


def test_poly_json_round_trip(capsys):
    from arctanpoly.exact import format_rational, parse_rational

    code, out, _ = run_cli(capsys, "poly", "--kind", "beta", "--n", "7", "--format", "json")
    assert code == 0
    coeffs = json.loads(out)["coeffs"]
    assert [format_rational(parse_rational(c)) for c in coeffs] == coeffs


def test_poly_invalid_pair_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "poly", "--kind", "beta", "--n", "3", "--method", "monic-bernoulli"
    )
    assert code == 2
    assert "monic-bernoulli" in err and "beta" in err


def test_deriv_examples(capsys):
    code, out, _ = run_cli(capsys, "deriv", "--func", "arctan", "--n", "3", "--x", "0")
    assert code == 0
    assert out.strip() == "-2"
    code, out, _ = run_cli(capsys, "deriv", "--func", "arctan", "--n", "1", "--x", "0")
    assert out.strip() == "1"
    code, out, _ = run_cli(capsys, "deriv", "--func", "artanh", "--n", "2", "--x", "1/2")
    assert out.strip() == "16/9"


def test_deriv_json(capsys):
    code, out, _ = run_cli(
        capsys, "deriv", "--func", "arctan", "--n", "2", "--x", "1", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["exact"] == "-1/2"
    assert payload["decimal"].startswith("-0.5")


def test_deriv_pole_exits_2(capsys):
    code, _, err = run_cli(capsys, "deriv", "--func", "artanh", "--n", "2", "--x", "1")
    assert code == 2
    assert "pole" in err.lower()


def test_deriv_float_x_rejected(capsys):
    code, _, err = run_cli(capsys, "deriv", "--func", "arctan", "--n", "1", "--x", "0.5")
    assert code == 2


def test_verify_identities_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "identities", "--max-n", "8")
    assert code == 0
    assert "checks passed" in out


def test_verify_cross_trivial(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "cross", "--max-n", "1")
    assert code == 0


def test_verify_hessenberg(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "hessenberg", "--max-n", "8")
    assert code == 0


def test_verify_json_shape(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "cross", "--max-n", "2", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert all(row["passed"] for row in rows)
    assert {"suite", "check", "n", "passed", "detail"} <= set(rows[0])


def test_verify_csv_header(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "hessenberg", "--max-n", "3", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "suite,check,n,passed,detail"


def test_verify_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "--suite", "series", "--max-n", "5")
    _, second, _ = run_cli(capsys, "verify", "--suite", "series", "--max-n", "5")
    assert first == second


def test_series_csv(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--kind", "euler", "--x", "1", "--terms", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,term,partial_sum,abs_error"
    assert lines[1].startswith("0,1/2,1/2,")


def test_pi_command(capsys):
    code, out, _ = run_cli(capsys, "pi", "--method", "euler", "--tol", "1e-10")
    assert code == 0
    assert out.startswith("3.1415926535")
    assert "terms" in out


def test_roots_command(capsys):
    code, out, _ = run_cli(capsys, "roots", "--kind", "beta", "--n", "2")
    assert code == 0
    assert "cot(1*pi/3)" in out
    assert "0.577350269" in out
    assert "certified" in out


def test_connect_matching(capsys):
    code, out, _ = run_cli(capsys, "connect", "--what", "matching-path", "--n", "3")
    assert code == 0
    assert out.strip() == "x^3 - 2x"


def test_connect_tan(capsys):
    code, out, _ = run_cli(capsys, "connect", "--what", "tan", "--n", "1")
    assert code == 0
    assert out.strip() == "(x) / (1)  [odd n]"


def test_connect_fibonacci_with_argument(capsys):
    code, out, _ = run_cli(capsys, "connect", "--what", "fibonacci", "--n", "4", "--h", "0,1")
    assert code == 0
    assert out.strip() == "x^3 + 2x"


def test_connect_enumeration_cap_exits_2(capsys):
    code, _, err = run_cli(capsys, "connect", "--what", "matching-path", "--n", "17")
    assert code == 2
    assert "capped" in err


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "arctanpoly.cli", "poly", "--kind", "beta", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "3x^2 - 1"
