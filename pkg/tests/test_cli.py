"""Command-line interface: verbs, exit codes, JSON round trips."""

import json

import pytest

from patgf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_examples(capsys):
    code, out, _ = run(capsys, "count", "--avoid", "123;213", "--n", "4", "--implicit-132")
    assert (code, out.strip()) == (0, "5")
    code, out, _ = run(capsys, "count", "--n", "4")
    assert (code, out.strip()) == (0, "24")
    code, out, _ = run(capsys, "count", "--avoid", "eps", "--n", "1")
    assert (code, out.strip()) == (0, "0")


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--avoid", "132", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"count": "5"}


def test_count_at_least_once(capsys):
    code, out, _ = run(capsys, "count", "--at-least-once", "12", "--n", "3")
    assert (code, out.strip()) == (0, "5")


def test_count_bound_overrides(capsys, monkeypatch):
    code, out, _ = run(capsys, "count", "--avoid", "12", "--n", "11", "--max-n", "11")
    assert (code, out.strip()) == (0, "1")
    monkeypatch.setenv("PATGF_MAX_N", "11")
    code, out, _ = run(capsys, "count", "--avoid", "12", "--n", "11")
    assert (code, out.strip()) == (0, "1")
    monkeypatch.setenv("PATGF_MAX_N", "4")
    code, _, _ = run(capsys, "count", "--n", "5")
    assert code == 3


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--avoid", "123;213", "--implicit-132",
                       "--order", "5")
    assert (code, out.strip()) == (0, "1,1,2,3,5,8")
    code, out, _ = run(capsys, "series", "--exactly-once", "12", "--order", "4")
    assert (code, out.strip()) == (0, "0,0,1,2,3")
    code, out, _ = run(capsys, "series", "--avoid", "132", "--order", "4", "--json")
    assert json.loads(out) == {"coefficients": ["1", "1", "2", "5", "14"]}


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "count", "--avoid", "122", "--n", "3")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "count", "--n", "3", "--no-such-flag")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_exit_code_too_large(capsys):
    code, _, err = run(capsys, "count", "--n", "11")
    assert code == 3 and "feasibility" in err


def test_exit_code_engine_error(capsys):
    code, _, err = run(capsys, "gf", "recurrence", "--avoid", "132")
    assert code == 4 and "Not132Avoiding" in err
    code, _, err = run(capsys, "gf", "recurrence", "--avoid", "")
    assert code == 4


def test_gf_examples(capsys):
    code, out, _ = run(capsys, "gf", "catalog:ulk", "--k", "4", "--l", "2")
    assert (code, out.strip()) == (0, "(1 - x - x^2)/(1 - 2*x - x^2)")
    code, out, _ = run(capsys, "gf", "recurrence", "--avoid", "231")
    assert (code, out.strip()) == (0, "(1 - x)/(1 - 2*x)")
    code, out, _ = run(capsys, "gf", "catalog:ulk-once", "--k", "3", "--l", "1")
    assert (code, out.strip()) == (0, "x^3/(1 - 4*x + 4*x^2)")
    code, out, _ = run(capsys, "gf", "catalog:u2k-both", "--k", "4")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(capsys, "gf", "recurrence", "--avoid", "213",
                       "--exactly-once", "123")
    assert (code, out.strip()) == (0, "x^3/(1 - 2*x - x^2 + 2*x^3 + x^4)")


def test_gf_missing_parameter(capsys):
    code, _, err = run(capsys, "gf", "catalog:ulk", "--k", "4")
    assert code == 2 and "--l" in err


def test_gf_json_round_trip(capsys):
    code, out, _ = run(capsys, "gf", "catalog:ulk", "--k", "4", "--l", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["provenance"] == "catalog"
    # re-rendering the parsed JSON is byte-identical
    from patgf import RatFunc
    parsed = RatFunc.from_json_dict(payload)
    again = parsed.to_json_dict()
    again["provenance"] = payload["provenance"]
    assert json.dumps(again) == out.strip()


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "ulk", "--l", "1", "--k", "3",
                       "--order", "5")
    assert (code, out.strip()) == (0, "k=3,l=1: 1,1,2,4,8,16")
    code, out, _ = run(capsys, "table", "--family", "ulk", "--l", "2", "--k", "3",
                       "--order", "5")
    assert (code, out.strip()) == (0, "k=3,l=2: 1,1,2,3,5,8")
    code, out, _ = run(capsys, "table", "--family", "u2k-both", "--k", "3",
                       "--order", "6")
    assert (code, out.strip()) == (0, "k=3: 0,0,0,0,0,0,0")
    code, out, _ = run(capsys, "table", "--family", "ulk", "--l", "2", "--k", "2",
                       "--k-max", "4", "--order", "3", "--json")
    rows = json.loads(out)["rows"]
    assert [row["params"]["k"] for row in rows] == [2, 3, 4]
    assert rows[1]["coefficients"] == ["1", "1", "2", "3"]


def test_verify_passing_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra")
    assert code == 0 and "all checks passed" in out
    code, out, _ = run(capsys, "verify", "--suite", "catalog", "--json")
    report = json.loads(out)
    assert report["passed"] is True
    assert all(c["status"] == "pass" for c in report["suites"]["catalog"])


def test_verify_oracle_reports_known_defect(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "8",
                       "--json", "--out", str(out_file))
    assert code == 1  # the k=5 closed-sum defect is reported honestly
    report = json.loads(out)
    assert report["passed"] is False
    failing = [c for c in report["suites"]["oracle"] if c["status"] == "fail"]
    assert len(failing) == 1
    assert "k=5" in failing[0]["name"]
    assert json.loads(out_file.read_text()) == report


def test_verify_text_and_json_agree(capsys):
    code_t, text, _ = run(capsys, "verify", "--suite", "catalog")
    code_j, blob, _ = run(capsys, "verify", "--suite", "catalog", "--json")
    assert code_t == code_j == 0
    report = json.loads(blob)
    for check in report["suites"]["catalog"]:
        assert check["name"] in text
