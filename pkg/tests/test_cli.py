import json
import subprocess
import sys

import pytest

from bchwork.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--p", "2", "--deg", "4")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 16 and data["alpha_order"] == 15
    assert data["modulus"] == [1, 1, 0, 0, 1]


def test_cosets(capsys):
    _, out, _ = run(capsys, "cosets", "--q", "2", "--m", "4", "--of", "3")
    assert json.loads(out) == {"leader": 3, "size": 4, "elements": [3, 6, 9, 12]}
    _, out, _ = run(capsys, "cosets", "--q", "2", "--m", "5", "--top", "2")
    assert json.loads(out)["leader"] == 11


def test_code_params_and_generator(capsys):
    code, out, _ = run(capsys, "code", "--q", "2", "--m", "4", "--delta", "auto2",
                       "--variant", "c", "params")
    data = json.loads(out)
    assert code == 0 and (data["n"], data["k"], data["delta"], data["bose"]) == (15, 7, 5, 5)
    _, out, _ = run(capsys, "code", "--q", "2", "--m", "4", "--delta", "5", "generator")
    data = json.loads(out)
    assert len(data["generator_coeffs"]) == 9


def test_code_weights_formats(capsys):
    base = ["code", "--q", "2", "--m", "4", "--delta", "auto2", "--variant", "ctilde", "weights"]
    _, out, _ = run(capsys, *base, "--format", "csv")
    assert out == "weight,count\n0,1\n6,30\n8,15\n10,18\n"
    _, out, _ = run(capsys, *base)
    assert json.loads(out)["counts"] == {"0": 1, "6": 30, "8": 15, "10": 18}
    _, out, _ = run(capsys, *base, "--format", "md")
    assert "| 6 | 30 |" in out


def test_code_budget_error(capsys):
    code, _, err = run(capsys, "code", "--q", "3", "--m", "5", "--delta", "auto3", "weights")
    assert code == 2 and "BudgetExceeded" in err
    code, _, err = run(capsys, "code", "--q", "2", "--m", "4", "--delta", "15", "params")
    assert code == 2 and "DeltaOutOfRange" in err


def test_trace_actions(capsys):
    code, out, _ = run(capsys, "trace", "--q", "3", "--m", "3", "--family", "delta2", "weights")
    assert code == 0 and json.loads(out)["counts"] == {"0": 1, "15": 312, "18": 260, "21": 156}
    code, out, _ = run(capsys, "trace", "--q", "3", "--m", "4", "charsum-check")
    data = json.loads(out)
    assert code == 0 and data["ok"] and "case 2.1 u=0" in data["case_tallies"]
    code, out, _ = run(capsys, "trace", "--q", "3", "--m", "4", "min-weight-census")
    assert code == 0 and json.loads(out)["codewords"] == 480
    code, out, _ = run(capsys, "trace", "--q", "3", "--m", "4", "facts")
    assert code == 0 and json.loads(out)["non_permutation_count"] == 8


def test_verify_scope(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "duals", "--cache-dir", str(tmp_path))
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6
    assert all(r["status"] == "pass" for r in rows)
    code, out, _ = run(capsys, "verify", "duals", "--cache-dir", str(tmp_path), "--format", "md")
    assert "6 pass, 0 fail, 0 skipped" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bchwork", "field", "--p", "3", "--deg", "2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["order"] == 9


def test_budget_parsing():
    from bchwork.cli import _budget
    assert _budget("none") is None
    assert _budget("1e6") == 10**6
    assert _budget("0x10") == 16
    with pytest.raises(SystemExit):
        main(["verify", "nowhere"])
