import json

import pytest

from nsg.cli import main, parse_gens, render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_gens():
    assert parse_gens("10..14,17") == [10, 11, 12, 13, 14, 17]
    assert parse_gens(" 5, 6 ,") == [5, 6]
    for bad in ("", "a", "5..3", "0,3", "-2"):
        with pytest.raises(ValueError):
            parse_gens(bad)


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "13..18,21,23", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["genus"] == 17 and d["sporadic_count"] == 9
    assert d["colength"] == 9 and d["g_minus_n"] == 8
    assert d["question_a_satisfied"] is False and d["far_flung"] is True
    assert d["cm_type"] == 5 and d["trace_stable_from"] == 26
    assert d["pf"] == [19, 20, 22, 24, 25]


def test_table_and_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "3,4,5")
    assert code == 0 and "colength" in out
    code, out, _ = run(capsys, "trace", "--gens", "10..14,17", "--format", "csv")
    head, row = out.strip().splitlines()
    assert head.split(",")[-1] == "colength" and row.endswith(",3")
    assert "0 12 17" in row


def test_render_list():
    text = render([{"a": 1, "b": [1, 2]}, {"a": 2, "b": []}], "csv")
    assert text.splitlines() == ["a,b", "1,1 2", "2,"]


@pytest.mark.parametrize("argv", [
    ["analyze", "--gens", "4,6"],
    ["analyze", "--gens", "0,3"],
    ["analyze", "--gens", "x"],
    ["bg", "--gens", "5,6,13,14", "--candidate", "5,7"],
    ["bg", "--gens", "10..14,17", "--candidate", "3,4,5"],
    ["family", "--ell", "-1"],
    ["scan", "--max-genus", "-1"],
    ["nonsense"],
    ["analyze"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bg(capsys):
    code, out, _ = run(capsys, "bg", "--gens", "10..14,17", "--format", "json", "--all-witnesses")
    d = json.loads(out)
    assert code == 0
    assert (d["lower"], d["upper"], d["exact"]) == (2, 2, 2)
    assert d["certificate"] == "cor33_meets_witness"
    assert [10, 11, 12, 13, 14] in d["witnesses"]
    code, out, _ = run(capsys, "bg", "--gens", "5,6,13,14", "--format", "json", "--no-search")
    assert json.loads(out)["exact"] == 3


def test_bg_with_candidate(capsys):
    code, out, _ = run(capsys, "bg", "--gens", "10..14,17", "--candidate", "10..14",
                       "--no-search", "--format", "json")
    assert code == 0 and json.loads(out)["exact"] == 2


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--ell", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"]
    assert d["invariants"]["colength"] == 5 and d["bg"]["exact"] == 3


def test_verify_examples_command(capsys):
    code, out, err = run(capsys, "verify-paper")
    assert code == 0, err
    assert out.strip().endswith("fixtures reproduce")
    code, out, _ = run(capsys, "verify-paper", "--format", "json")
    rows = json.loads(out)
    assert rows and all(r["ok"] for r in rows)


def test_scan_stdout(capsys):
    code, out, err = run(capsys, "scan", "--max-genus", "4", "--type-filter", "2")
    assert code == 0
    recs = [json.loads(x) for x in out.splitlines()]
    assert recs and all(r["cm_type"] == 2 for r in recs)
    assert json.loads(err)["total"] == 1 + 1 + 2 + 4 + 7


def test_scan_out_resumes(capsys, tmp_path):
    out = str(tmp_path / "s.jsonl")
    code, _, _ = run(capsys, "scan", "--max-genus", "5", "--out", out)
    assert code == 0
    assert json.load(open(out + ".ckpt")) == {"completed_genus": 5}
    # simulate a crash mid-level: a partial genus-6 tail is dropped on resume
    with open(out, "a") as f:
        f.write('{"minimal_generators":[7],"genus":6,"frobenius":0,"cm_type":1,'
                '"colength":0,"g_minus_n":0,"sporadic_count":0,"far_flung":false,'
                '"question_a_satisfied":true}\n')
    code, _, _ = run(capsys, "scan", "--max-genus", "7", "--out", out)
    assert code == 0
    lines = open(out).read().splitlines()
    assert len(lines) == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39
    summary = json.load(open(out + ".summary.json"))
    assert summary["counts_by_genus"]["7"] == 39


def test_scan_frontier(capsys):
    code, out, _ = run(capsys, "scan", "--max-genus", "9", "--frontier")
    d = json.loads(out)
    assert code == 0 and d["genus_max"] == 9
    assert d["violations_by_type"]["1"] == 0
