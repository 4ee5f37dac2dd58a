import json

import pytest

from jmkit.cli import main
from jmkit.symfunc import loads_expansion, s


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_char_table_csv(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "2", "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[2:] == ["2,1,1", '"1,1",-1,1']


def test_char_table_json_and_text(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["values"]) == 7 and sum(data["class_sizes"]) == 120
    code, out, _ = run(capsys, "char-table", "--n", "3")
    assert code == 0 and "(2,1)" in out


@pytest.mark.parametrize("argv", [
    ["char-table", "--n", "0"],
    ["char-table"],
    ["schur", "--op", "mult-p", "--lambda", "1"],
    ["schur", "--op", "eq6", "--lambda", "1"],
    ["rimhooks", "--lambda", "2,x", "--length", "1", "--mode", "add"],
    ["verify", "--suite", "bogus", "--n", "3"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_guard_exit(capsys, monkeypatch):
    monkeypatch.setenv("JMKIT_GUARD_N", "4")
    assert run(capsys, "char-table", "--n", "5")[0] == 3
    assert run(capsys, "verify", "--suite", "t1", "--n", "5")[0] == 3


def test_schur_ops(capsys):
    code, out, _ = run(capsys, "schur", "--op", "mult-p", "--j", "3", "--lambda", "")
    assert code == 0 and loads_expansion(out) == s(3) - s(2, 1) + s(1, 1, 1)
    code, out, _ = run(capsys, "schur", "--op", "eq3", "--lambda", "3,3,2")
    terms = {tuple(t["partition"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms[(3, 2, 2)] == "1"
    code, out, _ = run(capsys, "schur", "--op", "skew-dp", "--j", "2", "--lambda", "1")
    assert json.loads(out)["terms"] == []
    code, out, _ = run(capsys, "schur", "--op", "t3", "--lambda", "1", "--side", "rhs", "--format", "text")
    assert out.strip() == "1*s(2) - 1*s(1,1)"


def test_verify_single_record(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "t1", "--n", "6",
                       "--lambda", "3,2,1", "--type", "3,1,1", "--jobs", "1")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 2
    assert lines[0]["identity"] == "T1" and lines[0]["ok"]
    assert lines[1]["summary"] and lines[1]["total"] == 1


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "t1", "--n", "6", "--jobs", "1", "--format", "text")
    assert code == 0 and out.splitlines()[-1] == "77/77 passed"
    code, out, _ = run(capsys, "verify", "--suite", "eq9", "--n", "12", "--jobs", "1", "--stable")
    summary = json.loads(out.splitlines()[-1])
    assert code == 0 and summary["total"] == 56 and "elapsed_ms" not in summary


def test_verify_failure_exit(capsys, monkeypatch):
    import jmkit.identities as ids

    def broken(lam):
        rec = ids.verify_eq9(lam)
        rec.ok = False
        return rec

    monkeypatch.setitem(ids._CHECKS, "EQ9", broken)
    code, out, _ = run(capsys, "verify", "--suite", "eq9", "--n", "3", "--jobs", "1")
    assert code == 1


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eq3,eq6", "--n", "3", "--jobs", "1", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "identity,n,inputs,lhs,rhs,ok"


def test_rimhooks(capsys):
    code, out, _ = run(capsys, "rimhooks", "--lambda", "4,3,2", "--length", "5", "--mode", "remove")
    assert code == 0 and "(2,1,1) ht 2" in out.splitlines()
    code, out, _ = run(capsys, "rimhooks", "--lambda", "", "--length", "3", "--mode", "add", "--format", "json")
    assert json.loads(out) == [{"partition": [3], "height": 0}, {"partition": [2, 1], "height": 1},
                               {"partition": [1, 1, 1], "height": 2}]
    code, out, _ = run(capsys, "rimhooks", "--lambda", "1", "--length", "2", "--mode", "remove")
    assert code == 0 and out == ""


def test_output_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "char-table", "--n", "3", "--format", "csv", "--output", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("lambda")
