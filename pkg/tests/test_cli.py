import json
import subprocess
import sys

import pytest

from pretzelbraid.cli import CSV_COLUMNS, main, run


def test_index_example_type1():
    code, out, err = run(["index", "P1(5,3;-5,-1)"])
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert obj["braid_index"] == 6 and obj["consistent"] is True


def test_index_example_type2():
    code, out, _ = run(["index", "P2(4,4,2;-4)"])
    assert code == 0 and json.loads(out)["braid_index"] == 7


def test_index_parity_error():
    code, out, err = run(["index", "P1(4,3;-5)"])
    assert code == 2 and out == ""
    obj = json.loads(err)
    assert obj["error"] == "parity" and obj["entry"] == 4


@pytest.mark.parametrize("argv", [
    ["index", "P1(5,3"],
    ["index", "P(3,4,-5)"],
    ["homfly", "P(3,4)"],
    ["index", "P1(1;-1)"],
    ["sweep", "--type", "P1", "--max-strips", "0"],
    ["bogus"],
])
def test_invalid_inputs_exit_2_with_json(argv):
    code, out, err = run(argv)
    assert code == 2
    assert "error" in json.loads(err.strip().splitlines()[-1])


def test_index_explain_and_csv():
    code, out, _ = run(["index", "P1(5,7,7;-3)", "--explain"])
    sched = json.loads(out)["schedule"]
    assert sched["s_tilde"] == 16 and sched["inventory"]["S"] == 5
    code, out, _ = run(["index", "P1(5,7,7;-3)", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0].split(",") == CSV_COLUMNS
    assert lines[1] == "P1,5 7 7 -3,MT1e2,9,9,9,true"


def test_index_no_verify():
    code, out, _ = run(["index", "P1(5,3;-5,-1)", "--no-verify"])
    obj = json.loads(out)
    assert code == 0 and obj["mfw_lower"] is None and "not_verified" in obj["flags"]


def test_homfly_examples():
    code, out, _ = run(["homfly", "P1(3,3,3;0)"])
    obj = json.loads(out)
    assert (obj["E"], obj["e"], obj["mfw_lower"]) == (-2, -10, 5)
    code, out, _ = run(["homfly", "P1(3;-3)"])
    obj = json.loads(out)
    assert (obj["E"], obj["e"]) == (1, -1)
    assert obj["terms"] == [[-1, -1, "-1"], [-1, 1, "1"]]


def test_homfly_single_strip_is_unknot():
    code, out, _ = run(["homfly", "P(3)"])
    assert json.loads(out)["terms"] == [[0, 0, "1"]]


def test_homfly_csv():
    code, out, _ = run(["homfly", "P(1,1,1)", "--format", "csv"])
    assert out.splitlines() == ["z_exp,a_exp,coefficient", "0,-4,-1", "0,-2,2", "2,-2,1"]


def test_classify():
    code, out, _ = run(["classify", "P(5,3,-5,-1)"])
    obj = json.loads(out)
    assert obj["class"] == "Type1" and obj["seifert_circles"] == 12
    code, out, _ = run(["classify", "P(3,4,-5)"])
    assert json.loads(out)["class"] == "Type3"


@pytest.mark.parametrize("t", ["P1", "P2"])
def test_sweep_small(t):
    code, out, _ = run(["sweep", "--type", t, "--max-strips", "4", "--max-alpha", "3"])
    obj = json.loads(out)
    assert code == 0 and obj["inconsistent"] == 0 and obj["checked"] > 100


def test_sweep_output_independent_of_jobs():
    argv = ["sweep", "--type", "P2", "--max-strips", "3", "--max-alpha", "3", "--format", "csv"]
    _, serial, _ = run(argv)
    _, parallel, _ = run(argv + ["--jobs", "3"])
    assert serial == parallel
    _, again, _ = run(argv)
    assert again == serial


def test_table():
    code, out, _ = run(["table", "--type", "P2", "--max-strips", "2", "--max-alpha", "2", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "type,strips,case,braid_index"
    assert "P2,4 4,MT2e1,5" in lines


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pretzelbraid", "index", "P2(4,4,4,2;0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["braid_index"] == 8
