import io
import json
import random
import subprocess
import sys

import pytest

from kneading.cli import main, odd_form, polynomial_str
from kneading.dynamics import evaluate_composition
from kneading.syntax import format_value, parse_number

from oracles import random_surd_in_unit
from strategies import SYSTEMS

SQRT2 = "(-1+1*sqrt(2))/1"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def machine(*argv):
    code, out, _ = run(*argv, "--format", "machine")
    return code, json.loads(out)


class TestExpand:
    def test_ordinary(self):
        code, rec = machine("expand", "--system", "ordinary", "--number", "3/7")
        assert code == 0
        assert (rec["digits"], rec["terminal"]) == ([2, 3], "zero")

    def test_odd(self):
        code, rec = machine("expand", "--system", "odd", "--number", "3/7")
        assert (rec["digits"], rec["terminal"]) == ([2, 1, 2], "one")
        assert rec["odd_form"] == [[3, -1], [1, 1], [3, -1]]
        assert rec["odd_pretty"] == "1/(3-1/(1+1/(3-1)))"

    def test_farey_surd(self):
        code, rec = machine("expand", "--system", "farey", "--number", SQRT2,
                            "--max-steps", "8")
        assert rec["digits"] == [1, 2, 2, 1, 1, 2, 2, 1]
        assert rec["terminal"] == "ongoing"

    def test_text(self):
        code, out, _ = run("expand", "--number", "3/7")
        assert code == 0
        assert "digits: 2 3" in out and "terminal: zero" in out

    @pytest.mark.parametrize("number", ["3/7", "5/13", SQRT2, "(sqrt(7))/3", "(2-sqrt(3))"])
    @pytest.mark.parametrize("system", sorted(SYSTEMS))
    def test_identity_end_to_end(self, system, number):
        code, rec = machine("expand", "--system", system, "--number", number,
                            "--max-steps", "40")
        assert code == 0
        x = evaluate_composition(SYSTEMS[system], rec["digits"],
                                 parse_number(rec["terminal_value"]))
        assert x == parse_number(rec["input"]) == parse_number(number)

    def test_errors(self):
        code, out, err = run("expand", "--number", "(1+sqrt(2)")
        assert code == 1 and "ParseError" in err and "column 11" in err
        code, rec = machine("expand", "--number", "7/3")
        assert code == 1 and rec["error"] == "OutOfDomain"
        code, rec = machine("expand", "--number", "3/7x")
        assert rec["error"] == "ParseError" and rec["column"] == 4
        code, rec = machine("expand", "--system", "/nonexistent/p.json", "--number", "1/2")
        assert code == 1 and rec["error"] == "KneadingError"


class TestPeriod:
    def test_sqrt2(self):
        code, rec = machine("period", "--system", "ordinary", "--number", SQRT2)
        assert code == 0
        assert (rec["preperiod_digits"], rec["period_digits"]) == ([], [2])
        assert rec["certificate"]["H"] == [[1, 1], [1, 3]]
        assert rec["certificate"]["lambda"] == "(2+1*sqrt(2))/1"
        assert (rec["certificate"]["trace"], rec["certificate"]["det"]) == (4, 2)
        assert (rec["detect_index"], rec["detect_gap"]) == (0, 1)

    def test_golden(self):
        code, rec = machine("period", "--number", "(-1+1*sqrt(5))/2")
        assert (rec["preperiod_digits"], rec["period_digits"]) == ([], [1])

    def test_rational(self):
        code, rec = machine("period", "--number", "3/7")
        assert code == 1 and rec["error"] == "NotQuadratic"
        assert "expand" in rec["message"]

    def test_budget(self):
        code, rec = machine("period", "--system", "farey", "--number", SQRT2,
                            "--max-steps", "2")
        assert code == 1 and rec["error"] == "StepBudgetExceeded"

    def test_text(self):
        code, out, _ = run("period", "--system", "odd", "--number", SQRT2)
        assert code == 0 and "period (3): 2 1 1" in out

    def test_round_trip_through_reconstruct(self):
        rng = random.Random(31)
        for system in sorted(SYSTEMS):
            for _ in range(20):
                x = format_value(random_surd_in_unit(rng))
                _, first = machine("period", "--system", system, "--number", x)
                code, rec = machine(
                    "reconstruct", "--system", system,
                    "--preperiod", ",".join(map(str, first["preperiod_digits"])),
                    "--period", ",".join(map(str, first["period_digits"])),
                )
                assert code == 0 and rec["value"] == first["input"]
                _, again = machine("period", "--system", system, "--number", rec["value"])
                assert again["preperiod_digits"] == first["preperiod_digits"]
                assert again["period_digits"] == first["period_digits"]


class TestReconstruct:
    @pytest.mark.parametrize("pre,per,value", [
        ("", "2", "(-1+1*sqrt(2))/1"),
        ("1", "2", "(0+1*sqrt(2))/2"),
        ("", "1", "(-1+1*sqrt(5))/2"),
    ])
    def test_examples(self, pre, per, value):
        code, rec = machine("reconstruct", "--system", "ordinary",
                            "--preperiod", pre, "--period", per)
        assert code == 0 and rec["value"] == value

    def test_polynomial(self):
        code, out, _ = run("reconstruct", "--period", "2")
        assert "minimal polynomial: X^2 + 2X - 1" in out
        _, rec = machine("reconstruct", "--period", "2")
        assert rec["minimal_polynomial"] == [1, 2, -1]

    def test_errors(self):
        code, rec = machine("reconstruct", "--system", "farey", "--period", "3")
        assert code == 1 and rec["error"] == "InvalidDigit"
        code, rec = machine("reconstruct", "--system", "farey", "--period", "1")
        assert code == 1 and rec["error"] == "RationalFixedPoint"
        code, rec = machine("reconstruct", "--period", "")
        assert code == 1


class TestValidate:
    def test_ok_text(self, tmp_path):
        path = tmp_path / "farey.json"
        path.write_text('{"Q": ["0", "1/2", "1"], "epsilon": [-1, -1]}')
        code, out, _ = run("validate", str(path))
        assert code == 0
        assert out.startswith("OK")
        assert "G=[[1,0],[-1,1]]" in out and "G=[[2,-1],[1,0]]" in out

    def test_custom_system_in_other_commands(self, tmp_path):
        path = tmp_path / "farey.json"
        path.write_text('{"Q": ["0", "1/2", "1"], "epsilon": [-1, -1]}')
        code, rec = machine("period", "--system", str(path), "--number", SQRT2)
        assert rec["period_digits"] == [1, 2, 2, 1]
        assert rec["system"] == {"file": str(path), "Q": ["0", "1/2", "1"],
                                 "epsilon": [-1, -1]}

    def test_missing_file(self):
        code, out, err = run("validate", "/nonexistent/file.json")
        assert code == 1 and "cannot read" in err


class TestConvergents:
    def test_sqrt2(self):
        code, rec = machine("convergents", "--number", SQRT2, "-n", "2")
        rows = [(r["digit"], r["lo"], r["hi"], r["length"]) for r in rec["rows"]]
        assert rows == [(None, "0", "1", "1"), (2, "1/3", "1/2", "1/6"),
                        (2, "2/5", "3/7", "1/35")]

    def test_zero_steps(self):
        for system in sorted(SYSTEMS):
            code, rec = machine("convergents", "--system", system, "--number", "1/3", "-n", "0")
            assert [(r["lo"], r["hi"], r["length"]) for r in rec["rows"]] == [("0", "1", "1")]

    def test_farey_lengths(self):
        code, rec = machine("convergents", "--system", "farey", "--number", SQRT2, "-n", "4")
        lengths = [parse_number(r["length"]) for r in rec["rows"][1:]]
        assert lengths[:2] == [parse_number("1/2"), parse_number("1/6")]
        assert all(a >= b for a, b in zip(lengths, lengths[1:]))

    def test_rational_stops(self):
        code, rec = machine("convergents", "--number", "3/7", "-n", "10")
        assert [r["digit"] for r in rec["rows"]] == [None, 2, 3]
        # points with digits 2, 3 fill [3/7, 4/9)
        assert (rec["rows"][-1]["lo"], rec["rows"][-1]["hi"]) == ("3/7", "4/9")
        assert rec["rows"][-1]["length"] == "1/63"


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["expand"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["expand", "--number", "1/2", "--max-steps", "0"])
    assert err.value.code == 2


def test_helpers():
    assert polynomial_str(2, 0, -1) == "2X^2 - 1"
    assert polynomial_str(1, -1, 0) == "X^2 - X"
    assert odd_form((1,), "ongoing", None) == "1/(1+G^1x)"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kneading", "expand", "--number", "3/7", "--format", "machine"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["digits"] == [2, 3]
