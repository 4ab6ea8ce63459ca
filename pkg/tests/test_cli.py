import json
import subprocess
import sys

import pytest

from unknotone.cli import main

EIGHT_TEN_JSON = json.dumps(
    [{"name": "8_10", "goeritz": [[-4, 1, 1], [1, -2, 1], [1, 1, -5]], "determinant": 27}]
)


def run_main(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_corrections_json(capsys):
    code, out, _ = run_main(["corrections", "--knot", "8_10", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["D"] == 27
    assert payload["A"][0] == "-1/2"
    assert payload["gate"] is True


def test_gamma_text_and_json(capsys):
    code, out, _ = run_main(["gamma", "--D", "27"], capsys)
    assert code == 0
    assert out.splitlines()[1].startswith("B = 1/2, 23/54, 11/54, -1/6")
    code, out, _ = run_main(["gamma", "--D", "27", "--json"], capsys)
    payload = json.loads(out)
    assert payload["B"][9] == "-3/2"


def test_gamma_rejects_even(capsys):
    code, _, err = run_main(["gamma", "--D", "4"], capsys)
    assert code == 3
    assert "odd" in err


def test_obstruct_eight_ten(capsys):
    code, out, _ = run_main(["obstruct", "--knot", "8_10"], capsys)
    assert code == 0
    assert "NoSymmetricMatching" in out
    assert "2, 2, [4], 2, 2, 2" in out


def test_obstruct_json_shape(capsys):
    code, out, _ = run_main(["obstruct", "--knot", "8_10", "--json"], capsys)
    payload = json.loads(out)
    assert payload["knot"] == "8_10"
    assert payload["verdict"] == "NoSymmetricMatching"
    assert payload["gate_applied"] is True
    assert payload["witnesses"] == ["2, 2, [4], 2, 2, 2"]
    assert any(m["flags"]["even"] and m["flags"]["positive"] for m in payload["matchings"])


def test_obstruct_missing_file(capsys):
    code, _, err = run_main(["obstruct", "--input", "does-not-exist.json"], capsys)
    assert code == 3
    assert "cannot read" in err


def test_unknown_knot(capsys):
    code, _, err = run_main(["obstruct", "--knot", "99_99"], capsys)
    assert code == 3
    assert "99_99" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_stdin_single_record(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(EIGHT_TEN_JSON))
    code, out, _ = run_main(["obstruct"], capsys)
    assert code == 0
    assert "NoSymmetricMatching" in out


def test_match_lists_flags(capsys):
    code, out, _ = run_main(["match", "--knot", "8_10"], capsys)
    assert code == 0
    assert "matchings" in out.splitlines()[0]
    # the unique even positive matching climbs the staircase but is asymmetric
    assert any("[EP-t]" in line for line in out.splitlines())


def test_sign_refined_nine_33(capsys):
    code, out, _ = run_main(["obstruct", "--knot", "9_33", "--sign-refined"], capsys)
    assert code == 0
    lines = out.splitlines()
    outcomes = [line.split(":")[1].strip().split()[0] for line in lines[1:3]]
    assert sorted(outcomes) == ["NoSymmetricMatching", "NotObstructed"]


def test_sign_refined_requires_signature(capsys):
    code, _, err = run_main(["obstruct", "--knot", "8_10", "--sign-refined"], capsys)
    assert code == 3
    assert "signature" in err


def test_alexander_nine_33(capsys):
    code, out, _ = run_main(["alexander", "--knot", "9_33"], capsys)
    assert code == 0
    assert "torsion:  4, 3, 3, 2, 2, 2, 1, 1, 1, 1, 0" in out
    assert "Delta(T)" in out


def test_plumbing_check_ten_125(capsys):
    code, out, _ = run_main(["plumbing-check", "--knot", "10_125"], capsys)
    assert code == 0
    assert "11 bounded classes" in out
    assert "L-space certificate: yes" in out


def test_report_batch_continues_past_bad_records(tmp_path, capsys):
    bad = [
        {"name": "good", "goeritz": [[-3]]},
        {"name": "broken", "goeritz": [[-2, 1], [0, -2]]},
    ]
    path = tmp_path / "records.json"
    path.write_text(json.dumps(bad))
    code, out, err = run_main(["report", "--input", str(path)], capsys)
    assert code == 3  # a record failed to parse
    assert "good" in out
    assert "PARSE ERROR" in err


def test_report_json_includes_analysis_errors(tmp_path, capsys):
    records = [
        {"name": "fine", "goeritz": [[-3]]},
        {"name": "indefinite", "goeritz": [[2, 0], [0, -3]]},
    ]
    path = tmp_path / "records.json"
    path.write_text(json.dumps(records))
    code, out, _ = run_main(["report", "--input", str(path), "--json"], capsys)
    assert code == 0  # parse succeeded; the analysis error lives in the summary
    payload = json.loads(out)
    entries = {e["knot"]: e for e in payload["records"]}
    assert "error" in entries["indefinite"]
    assert entries["fine"]["verdict"]


def test_paper_tables_json(capsys):
    code, out, _ = run_main(["report", "--paper-tables", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert "10_121" in payload["no_even_matching"] or "8_16" in payload["no_even_matching"]
    two = payload["ten_crossing_unknotting_two"]
    assert len(two) == 24


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "unknotone.cli", "obstruct", "--knot", "8_10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "NoSymmetricMatching" in proc.stdout
