import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

from bqsym import qsym
from bqsym.cli import main
from bqsym.expression import ParseError, parse_element, parse_index
from bqsym.verify import ALL_CHECKS
from bqsym.worked_examples import CHOW_M12, DELTA_A_M21, DELTA_B_M121, DELTA_B_M211, F21_TYPE_A, F21_TYPE_B

from strategies import elements


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


# parser -------------------------------------------------------------------------

def test_parse_basics():
    assert parse_element("3*M[2,1] - F[0,1,1] + 2") == 3 * qsym.monomial((2, 1)) - qsym.fundamental((0, 1, 1)) + 2
    assert parse_element("-M[]") == -qsym.one()
    assert parse_element(" M[0] ") == qsym.one()
    assert parse_element("K[1]") == qsym.peak_element((1,))
    assert parse_index("[1,2]") == (1, 2) == parse_index("K[1,2]") == parse_index("1,2")
    assert parse_index("[]") == ()


@pytest.mark.parametrize("bad", ["M[1", "M[1,0]", "3*", "X[1]", "M[1] +", "M[1] M[2]", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_element(bad)


@given(elements(max_degree=4))
def test_print_parse_round_trip(x):
    assert parse_element(qsym.format_element(x)) == x
    assert parse_element(qsym.format_element(qsym.to_fundamental(x))) == x


# commands -------------------------------------------------------------------------

def test_mul(capsys):
    assert run(capsys, "mul", "M[0,1]", "M[0,1]") == (0, "2*M[0,1,1] + M[0,2]", "")
    code, out, err = run(capsys, "mul", "F[1]", "F[0,1]", "--check-oracle", "--out-basis", "F")
    assert code == 0 and "pass" in err
    assert parse_element(out) == qsym.fundamental((1,)) * qsym.fundamental((0, 1))


def test_coproduct_worked(capsys):
    code, out, _ = run(capsys, "coproduct", "M[2,1,1]", "--format", "json")
    assert code == 0 and qsym.from_json(json.loads(out)) == DELTA_B_M211
    code, out, _ = run(capsys, "coproduct", "M[1,2]", "--variant", "chow", "--format", "json")
    assert qsym.from_json(json.loads(out)) == CHOW_M12
    code, out, _ = run(capsys, "coproduct", "M[0,2,1]", "--variant", "a", "--format", "json")
    assert qsym.from_json(json.loads(out)) == DELTA_A_M21


def test_coproduct_text(capsys):
    assert run(capsys, "coproduct", "M[1]")[1] == "1 (x) M[1] + M[1] (x) 1"
    assert run(capsys, "coproduct", "M[0,1]", "--variant", "a", "--notation", "a")[1] == "1 (x) M[1] + M[1] (x) 1"


def test_antipode_and_convert(capsys):
    assert run(capsys, "antipode", "M[0,2,1]", "--variant", "a")[1] == "M[0,1,2] + M[0,3]"
    assert run(capsys, "antipode", "M[2,1]", "--variant", "recursive")[1] == "-M[2,1]"
    assert run(capsys, "convert", "F[2,1]")[1] == "M[0,1,1,1] + M[0,2,1] + M[1,1,1] + M[2,1]"
    assert run(capsys, "convert", "M[1]", "--to", "F")[1] == "-F[0,1] + F[1]"


def test_theta_and_k(capsys):
    assert run(capsys, "theta", "M[1]")[1] == "M[1]"
    assert run(capsys, "theta", "F[0,1,1]", "--type", "a", "--out-basis", "F")[1] == "2*F[0,1,1] + 2*F[0,2]"
    assert run(capsys, "k", "[1]")[1] == "2*M[0,1] + M[1]"
    assert run(capsys, "k", "[3]", "--type", "a", "--notation", "a")[1] == "8*M[1,1,1] + 4*M[1,2] + 4*M[2,1] + 2*M[3]"


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "(-3,2,-4,5,1)", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"Des_B": [0, 2, 4], "C_B": [0, 2, 2, 1], "Pe_B": [0, 2, 4], "hatC_B": [0, 2, 2, 1]}
    code, out, _ = run(capsys, "stats", "(3,2,7,5,4,1,8,6)", "--format", "json")
    stats = json.loads(out)
    assert stats["Pe"] == [3, 7] and stats["hatC"] == [3, 4, 1]
    assert "Pe_B = {0,2,4}" in run(capsys, "stats", "(-3,2,-4,5,1)")[1]


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "5", "--format", "json")
    assert json.loads(out) == {"compositions": 16, "pseudo": 32, "peakA": 5, "peakB": 13}


def test_usage_errors(capsys):
    assert run(capsys, "mul", "M[1", "M[1]")[0] == 2
    assert run(capsys, "coproduct", "M[1]", "--variant", "a")[0] == 2
    assert run(capsys, "mul", "M[3]", "M[3]", "--max-degree", "5")[0] == 2
    assert run(capsys, "verify", "--checks", "nonsense")[0] == 2
    assert run(capsys, "stats", "(1,1)")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["coproduct", "M[1]", "--variant", "z"])
    assert exc.value.code == 2


# verify -------------------------------------------------------------------------

def test_verify_degree_four(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "4", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["degree"] == 4
    assert [c["name"] for c in report["checks"]] == list(ALL_CHECKS)
    assert all(c["status"] == "pass" and c["counterexample"] is None for c in report["checks"])


def test_verify_degree_zero(capsys):
    assert run(capsys, "verify", "--max-degree", "0")[0] == 0


@pytest.mark.parametrize("fault", ["product", "coproduct", "antipode"])
def test_corrupted_build_fails(capsys, fault):
    code, out, _ = run(capsys, "verify", "--max-degree", "3", "--inject-fault", fault, "--format", "json")
    report = json.loads(out)
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    assert code == 1 and failed
    assert all(c["counterexample"] for c in failed)


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "counting,worked_examples", "--format", "json")
    assert code == 0 and [c["name"] for c in json.loads(out)["checks"]] == ["counting", "worked_examples"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bqsym", "dims", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "peakB: 5" in proc.stdout


# golden files ---------------------------------------------------------------------

GOLDEN = sorted((Path(__file__).parent / "golden").glob("*.json"))

# the hand-checked values each golden file must also agree with
WORKED_VALUES = {
    "coproduct_b_M121": DELTA_B_M121,
    "coproduct_b_M211": DELTA_B_M211,
    "coproduct_a_M021": DELTA_A_M21,
    "coproduct_chow_M12": CHOW_M12,
    "convert_F21_type_b": F21_TYPE_B,
    "convert_F021_type_a": F21_TYPE_A,
    "theta_b_M1": qsym.monomial((1,)),
}


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden(capsys, path):
    golden = json.loads(path.read_text())
    code, out, _ = run(capsys, *golden["argv"], "--format", "json")
    assert code == 0
    assert json.loads(out) == golden["output"]
    if path.stem in WORKED_VALUES:
        assert qsym.from_json(golden["output"]) == WORKED_VALUES[path.stem]
