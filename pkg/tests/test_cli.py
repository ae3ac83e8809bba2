import io
import json
import subprocess
import sys

import pytest

from ncfactor.cli import main


def run(*argv, env=None):
    out = io.StringIO()
    code = main(list(argv), environ=env or {}, stdout=out)
    return code, out.getvalue()


def test_factor_text():
    code, out = run("factor", "--field", "fp:2", "1+x1+x2+x1*x2")
    assert code == 0
    assert out.splitlines() == ["1 + x1", "1 + x2"]


def test_options_before_command():
    assert run("--field", "fp:2", "factor", "1+x1+x2+x1*x2") == run(
        "factor", "--field", "fp:2", "1+x1+x2+x1*x2")


def test_structured_output_is_deterministic():
    argv = ("gcd", "--output", "structured", "--certificate", "1+x1^2+x2^2", "1+x1+x1^2")
    first, second = run(*argv), run(*argv)
    assert first == second
    record = json.loads(first[1])
    assert record["status"] == "ok" and record["result"]["gcd"] == "1"
    assert record["result"]["certificate_valid"] is True
    assert set(record) == {"command", "inputs", "field", "vars", "seed", "budget",
                           "strategy", "status", "result", "error"}


def test_environment_defaults_and_flag_precedence():
    env = {"NCFACTOR_FIELD": "fp:2", "NCFACTOR_OUTPUT": "structured"}
    rec = json.loads(run("irreducible", "1+x1*x2", env=env)[1])
    assert rec["field"] == "fp:2" and rec["result"] is True
    rec = json.loads(run("irreducible", "--field", "fp:3", "1+x1*x2", env=env)[1])
    assert rec["field"] == "fp:3"


@pytest.mark.parametrize("argv,code", [
    (("factor", "1+x1++x2"), 1),
    (("factor", "--vars", "1", "1+x2"), 1),
    (("factor", "--field", "fp:4", "1+x1"), 1),
    (("nosuch",), 1),
    (("quotient", "1+x2", "1+x1"), 2),
    (("irreducible", "x1"), 2),
    (("simclass", "1+x1*x2"), 3),
    (("factor", "--field", "fp:2", "--budget", "1", "--strategy", "exhaustive",
      "(1+x1*x2)*(1+x2*x1)"), 3),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    if code != 1 or argv[0] != "nosuch":
        assert capsys.readouterr().err.strip()


def test_structured_error_record():
    code, out = run("quotient", "--output", "structured", "1+x2", "1+x1")
    rec = json.loads(out)
    assert code == 2 and rec["status"] == "error"
    assert rec["error"]["type"] == "NotDivisible"


@pytest.mark.parametrize("argv,expected", [
    (("divides", "1+x1", "(1+x2)*(1+x1)"), "true"),
    (("quotient", "(1+x2)*(1+x1)", "1+x1"), "1 + x2"),
    (("quotient", "--side", "right", "(1+x2)*(1+x1)", "1+x2"), "1 + x1"),
    (("length", "--field", "fp:3", "(1+x1)*(1+x2)*(1+x1*x2)"), "3"),
    (("similar", "1+x1*x2", "1+x2*x1"), "true"),
    (("star", "1+x1^2+x1*x2+x2^2*x3+x3*x2", "1", "--var", "1"), "-x1 - x2"),
    (("star", "1+x1^2+x2^2", "1+x1+x1^2", "--word", "x1^2"), "-x1"),
    (("leavitt-nf", "x1'*(1+x1*x2)"), "x1' + x2"),
    (("cofactors", "1+x1*x2", "--word", "x1"), "x2"),
    (("verify-cert", "1", "1+x1*x2", "0", "x1", "x1'"), "true"),
])
def test_single_line_results(argv, expected):
    code, out = run(*argv)
    assert code == 0 and out.strip() == expected


def test_simclass_and_zero_constant():
    code, out = run("simclass", "--field", "fp:2", "1+x1*x2")
    assert out.splitlines() == ["1 + x1*x2", "1 + x2*x1"]
    code, out = run("zero-constant", "(x1*x2*x3+x1+x3)*(1+x2*x1)")
    assert out.splitlines() == ["left: (1 + x1*x2) * (x1 + x3 + x3*x2*x1)",
                                "right: (x1 + x3 + x1*x2*x3) * (1 + x2*x1)"]


def test_gcd_notice(capsys):
    code, out = run("gcd", "x1+x1^3+x1*x2^2+x2+x2*x1^2+x2^3")
    assert code == 0 and out.strip() == "1 + x1^2 + x2^2"
    assert "notice" in capsys.readouterr().err


def test_module_commands_round_trip():
    from ncfactor import FDModule, build_v, parse_poly, QQ
    rec = json.loads(run("vmodule", "--output", "structured", "1+x1*x2")[1])
    assert FDModule.from_dict(rec["result"]) == build_v(parse_poly("1+x1*x2", QQ))
    rec = json.loads(run("endo", "--output", "structured", "--field", "fp:2", "(1+x1*x2)^2")[1])
    assert rec["result"]["dim"] == 2 and rec["result"]["is_division"] is False
    code, out = run("divmod", "1+x1*x2+x2*x1", "1+x1*x2")
    assert "exact: false" in out


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "ncfactor", "factor", "--field", "fp:2",
                           "1+x1+x2+x1*x2"], capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == ["1 + x1", "1 + x2"]
