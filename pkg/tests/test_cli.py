import io
import json
import subprocess
import sys

import pytest

from irrpoly.cli import Report, run, serialize_report


def call(*argv):
    out = io.BytesIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue().decode()


def test_count():
    code, out = call("count", "--q", "2", "--n", "6")
    assert code == 0 and out.strip() == "9"


def test_count_json_uses_decimal_strings():
    code, out = call("count", "--q", "3", "--n", "200", "--format", "json")
    data = json.loads(out)
    assert code == 0 and isinstance(data["rows"][0]["count"], str)
    from irrpoly.count import irreducible_count
    assert int(data["rows"][0]["count"]) == irreducible_count(200, 3)


def test_table_csv():
    code, out = call("table", "--q", "2", "--n-max", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,count", "1,2", "2,1", "3,2", "4,3"]


def test_verify_logconvex_paper_range():
    code, out = call("verify", "--check", "logconvex", "--q", "2", "--n-range", "19..388", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["failures"] == [] and data["checked_range"] == [19, 388]


def test_verify_failure_exit_code():
    code, out = call("verify", "--check", "logconvex", "--q", "2", "--n-range", "1..10", "--format", "json")
    assert code == 1 and json.loads(out)["failures"] == [2, 4, 6, 8, 10]


def test_oracle_compare():
    code, out = call("oracle", "--q", "3", "--n-max", "8", "--compare", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,sieve,formula,agree"
    assert all(line.endswith(",true") for line in lines[1:]) and len(lines) == 9


def test_scan_json_onset():
    code, out = call("scan", "--property", "rootratio", "--q", "2", "--n-max", "100", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["onset"] == 14 and data["property"] == "root_ratio_decreasing"


def test_exact_only_has_no_certified_decisions():
    code, out = call("scan", "--property", "rootmono", "--q", "3", "--n-max", "30",
                     "--exact-only", "--format", "json")
    assert json.loads(out)["method_counts"] == {"exact": 30, "certified": 0}


@pytest.mark.parametrize("check", ["lemma21", "lemma22", "lemma23", "lemma24"])
def test_verify_lemmas(check):
    code, out = call("verify", "--check", check, "--q-set", "2,9", "--n-range", "2..60", "--format", "json")
    assert code == 0 and all(r["failures"] == [] for r in json.loads(out))


def test_verify_chains():
    assert call("verify", "--check", "pnchain", "--q", "16", "--n-range", "6..100")[0] == 0
    assert call("verify", "--check", "smallqchain", "--q", "4", "--n-range", "389..420")[0] == 0
    assert call("verify", "--check", "pnchain", "--q", "4", "--n-range", "6..10")[0] == 2


def test_bounds_command():
    code, out = call("bounds", "--q", "2", "--n-range", "2..120", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rows"][0]["residual"] == "-1/2"
    assert data["rows"][-1]["gap_sign"] == "+"


@pytest.mark.parametrize("argv", [
    ["count", "--q", "6", "--n", "2"],
    ["count", "--q", "2"],
    ["verify", "--check", "nope", "--q", "2", "--n", "3"],
    ["table", "--q", "2", "--n-max", "100000", "--bit-cap", "1000"],
    ["oracle", "--q", "2", "--n-max", "40"],
    ["oracle", "--q", "6", "--n-max", "2", "--allow-nonprimepower"],
    ["scan", "--property", "rootmono", "--q", "2", "--n-max", "5", "--precision-bits", "8"],
    ["verify", "--check", "logconvex", "--q", "2", "--n-range", "5..3"],
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_allow_nonprimepower():
    assert call("count", "--q", "6", "--n", "2", "--allow-nonprimepower") == (0, "15\n")


def test_json_round_trip():
    code, out = call("scan", "--property", "logconvex", "--q-set", "2,3", "--n-max", "40", "--format", "json")
    payload = json.loads(out)
    rebuilt = [Report.from_dict(d) for d in payload]
    assert json.loads(serialize_report(rebuilt, "json")) == payload


def test_empty_failures_serialize_as_list():
    data = json.loads(serialize_report(Report("verify", 2, [1, 1]), "json"))
    assert data["failures"] == [] and "onset" not in data


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "irrpoly", "count", "--q", "2", "--n", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "9"
