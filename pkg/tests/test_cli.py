import io
from fractions import Fraction
import json
import subprocess
import sys

import pytest

from weyl_eulerian.cli import main, parse_range


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_dist_examples():
    code, out = run("dist", "--group", "a", "--stat", "exc", "--sign", "plus", "--n", "3", "--method", "both")
    data = json.loads(out)
    assert code == 0 and data["coeffs"] == ["1", "1", "1"] and data["match"] is True
    code, out = run("dist", "--group", "b", "--stat", "des-b", "--n", "2")
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "6", "1"]
    code, out = run("dist", "--group", "d", "--stat", "des-d", "--sign", "all", "--n", "2")
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "2", "1"]


def test_dist_csv():
    code, out = run("dist", "--group", "b", "--stat", "des-b", "--n", "2", "--format", "csv")
    assert code == 0 and out == "k,count\n0,1\n1,6\n2,1\n"


def test_dist_without_closed_form_falls_back_to_brute():
    code, out = run("dist", "--group", "b-minus-d", "--stat", "exc-b", "--n", "3")
    assert code == 0 and json.loads(out)["method"] == "brute"
    code, _ = run("dist", "--group", "b-minus-d", "--stat", "exc-b", "--n", "3", "--method", "closed")
    assert code == 2


def test_usage_errors():
    assert run("dist", "--group", "b", "--stat", "des", "--n", "2")[0] == 2
    assert run("dist", "--group", "q", "--stat", "des", "--n", "2")[0] == 2
    assert run("verify", "identity", "--name", "nope", "--n-range", "1..2")[0] == 2
    assert run("verify", "carlitz", "--family", "d", "--n-range", "1..3")[0] == 2
    assert run("verify", "involution", "--n-range", "2..3")[0] == 2
    assert run("clt", "--family", "a-des", "--n-range", "5..3")[0] == 2
    assert run("dist", "--group", "a", "--stat", "des", "--n", "3", "--threads", "0")[0] == 2


def test_resource_cap_exit_code(monkeypatch):
    monkeypatch.setenv("WEYL_EULERIAN_CAP_BD", "3")
    assert run("dist", "--group", "b", "--stat", "des-b", "--n", "4", "--method", "brute")[0] == 3


def test_verify_carlitz():
    code, out = run("verify", "carlitz", "--family", "b-pm", "--n-range", "1..10", "--order", "50")
    verdicts = lines(out)
    assert code == 0 and len(verdicts) == 20 and all(v["pass"] for v in verdicts)


def test_verify_carlitz_literal_fails_with_exit_1():
    code, out = run("verify", "carlitz", "--family", "d", "--n-range", "3..3", "--order", "10",
                    "--reading", "literal")
    assert code == 1
    assert lines(out)[0] == {"K": 10, "first_fail_k": 2, "identity": "carlitz:d:literal",
                             "lhs": "65", "n": 3, "pass": False, "rhs": "77"}


def test_verify_identity():
    code, out = run("verify", "identity", "--name", "mantaci", "--n-range", "1..8")
    assert code == 0 and len(lines(out)) == 8


def test_verify_involution():
    code, out = run("verify", "involution", "--n-range", "3..5")
    records = lines(out)
    assert code == 0
    verdicts = [r for r in records if "identity" in r]
    reports = [r for r in records if "class" in r]
    assert verdicts and all(v["pass"] for v in verdicts)
    assert len(reports) == 3 * 2 * 6


@pytest.mark.parametrize("fam,sign,rng,field,expected", [
    ("a-exc", "plus", "3..20", "mean", lambda n: Fraction(n - 1, 2)),
    ("d-des", "minus", "4..20", "variance", lambda n: Fraction(n + 2, 12)),
    ("bdes-over-d", "plus", "4..20", "variance", lambda n: Fraction(n + 1, 12)),
])
def test_clt_examples(fam, sign, rng, field, expected):
    code, out = run("clt", "--family", fam, "--sign", sign, "--n-range", rng, "--format", "json")
    assert code == 0
    records = lines(out)
    assert len(records) == len(parse_range(rng))
    for r in records:
        assert Fraction(r[field]) == expected(r["n"])
        assert r[field + "_ok"] is True


def test_clt_csv_header():
    code, out = run("clt", "--family", "b-des", "--n-range", "1..3")
    assert code == 0 and out.splitlines()[0] == "n,mean,variance,ks"


def test_parse_range():
    assert parse_range("2..5") == range(2, 6)
    with pytest.raises(Exception):
        parse_range("5")


@pytest.mark.parametrize("threads", ["1", "4", "16"])
def test_thread_count_does_not_change_output(threads):
    base = run("dist", "--group", "b", "--stat", "exc-b", "--sign", "minus", "--n", "6", "--method", "both")[1]
    other = run("dist", "--group", "b", "--stat", "exc-b", "--sign", "minus", "--n", "6", "--method", "both",
                "--threads", threads)[1]
    assert base == other


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weyl_eulerian", "dist", "--group", "a", "--stat", "des",
                           "--n", "3", "--seedless"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "4", "1"]
