import io
import json
import subprocess
import sys

import pytest

from gencomp import build_count_table, count_all, count_compositions, weighted_polynomial_coefficient
from gencomp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_proc(*argv):
    return subprocess.run([sys.executable, "-m", "gencomp", *argv], capture_output=True, text=True)


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--weights", "2,1", "--parts", "2", "--total", "3"], "4\n"),
        (["count", "--weights", "1,1", "--parts", "3", "--total", "4"], "3\n"),
        (["count", "--weights", "1,1", "--parts", "2", "--total", "5"], "0\n"),
        (["total", "--weights", "1,1", "--n", "4"], "5\n"),
        (["total", "--weights", "2,1", "--n", "0"], "1\n"),
        (["total", "--weights", "0,0", "--n", "3"], "0\n"),
        (["coeff", "--weights", "2,1", "--k", "2", "--i", "1"], "4\n"),
        (["coeff", "--weights", "1,1,1", "--k", "2", "--i", "2"], "3\n"),
        (["coeff", "--weights", "2,1", "--k", "2", "--i", "9"], "0\n"),
    ],
)
def test_single_value_commands(argv, expected):
    assert run(*argv) == (0, expected)


def test_table_csv():
    code, text = run("table", "--weights", "1,1", "--n-max", "3", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "k,n,count"
    rows = [l for l in lines[1:] if not l.startswith("total")]
    totals = [l for l in lines[1:] if l.startswith("total")]
    assert rows == ["1,1,1", "1,2,1", "2,2,1", "2,3,2", "3,3,1"]
    assert totals == ["total,1,1", "total,2,2", "total,3,3"]
    assert "\r" not in text


def test_table_r1_default_format():
    _, text = run("table", "--weights", "1", "--n-max", "2")
    assert text == "k,n,count\n1,1,1\ntotal,1,1\n2,2,1\ntotal,2,1\n"


def test_table_formats_agree():
    _, csv = run("table", "--weights", "2,0,1", "--n-max", "9", "--format", "csv")
    _, jsonl = run("table", "--weights", "2,0,1", "--n-max", "9", "--format", "jsonl")
    from_csv = sorted(tuple(map(int, l.split(","))) for l in csv.splitlines()[1:] if not l.startswith("total"))
    records = [json.loads(l) for l in jsonl.splitlines()]
    from_json = sorted((r["k"], r["n"], r["count"]) for r in records if "k" in r)
    assert from_csv == from_json
    totals_csv = [int(l.split(",")[2]) for l in csv.splitlines() if l.startswith("total")]
    assert totals_csv == [r["total"] for r in records if "total" in r]


def test_table_unknown_format():
    with pytest.raises(SystemExit) as e:
        run("table", "--weights", "1,1", "--n-max", "3", "--format", "xml")
    assert e.value.code == 2


def test_table_values_match_library():
    _, text = run("table", "--weights", "3,1,2", "--n-max", "12")
    t = build_count_table([3, 1, 2], 12)
    for line in text.splitlines()[1:]:
        a, n, v = line.split(",")
        expect = count_all([3, 1, 2], int(n)) if a == "total" else t[int(a), int(n)]
        assert int(v) == expect


def test_enumerate():
    code, text = run("enumerate", "--weights", "2,1", "--total", "2")
    assert code == 0
    assert text.splitlines() == ["1.1+1.1", "1.1+1.2", "1.2+1.1", "1.2+1.2", "2.1"]
    assert run("enumerate", "--weights", "1,1", "--total", "5", "--parts", "2") == (0, "")
    _, text = run("enumerate", "--weights", "2,1", "--total", "2", "--limit", "2")
    assert len(text.splitlines()) == 2


def test_enumerate_jsonl():
    _, text = run("enumerate", "--weights", "2,1", "--total", "3", "--parts", "2", "--format", "jsonl")
    recs = [json.loads(l) for l in text.splitlines()]
    assert [r["index"] for r in recs] == [0, 1, 2, 3]
    assert recs[0]["parts"] == [{"value": 1, "type": 1}, {"value": 2, "type": 1}]


def test_verify_text_and_jsonl():
    code, text = run("verify", "--weights", "1,1", "--n-max", "30")
    assert code == 0
    assert "fibonacci_binomial: ok" in text
    code, text = run("verify", "--r", "3", "--n-max", "15", "--format", "jsonl")
    recs = [json.loads(l) for l in text.splitlines()]
    assert code == 0
    assert "k_bonacci_coefficients" in [r["identity"] for r in recs]
    assert all(r["failures"] == [] and r["checked"] > 0 for r in recs)


def test_verify_failure_exit_code(monkeypatch):
    from gencomp import cli, counting

    real = counting.count_all
    monkeypatch.setattr(counting, "count_all", lambda b, n: real(b, n) + (n == 5))
    code, text = run("verify", "--weights", "2,1", "--n-max", "8", "--k-max", "4")
    assert code == 1
    assert "FAILED" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--weights", "1,-2"],
        ["count", "--weights", "", "--parts", "1", "--total", "1"],
        ["count", "--weights", "1,a", "--parts", "1", "--total", "1"],
        ["count", "--weights", "1", "--parts", "-1", "--total", "1"],
        ["verify", "--n-max", "5"],
        ["verify", "--weights", "1,1", "--r", "3"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        run(*argv)
    assert e.value.code == 2


def test_big_counts_printed_exactly():
    _, text = run("total", "--weights", "3,2,1", "--n", "200")
    assert text == f"{count_all([3, 2, 1], 200)}\n"
    assert "e" not in text and len(text.strip()) > 60
    for k, n in [(1, 1), (5, 9), (40, 90)]:
        _, text = run("count", "--weights", "2,5,1", "--parts", str(k), "--total", str(n))
        assert int(text) == count_compositions([2, 5, 1], k, n)
        _, text = run("coeff", "--weights", "2,5,1", "--k", str(k), "--i", str(n - k))
        assert int(text) == weighted_polynomial_coefficient([2, 5, 1], k, n - k)


def test_module_entry_point():
    p = run_proc("count", "--weights", "2,1", "--parts", "2", "--total", "3")
    assert (p.returncode, p.stdout) == (0, "4\n")
    p = run_proc("count", "--weights", "1,-2", "--parts", "1", "--total", "1")
    assert p.returncode == 2 and "negative" in p.stderr and p.stdout == ""
