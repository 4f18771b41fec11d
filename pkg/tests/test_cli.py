"""Tests for the command-line interface: output formats, exit codes, cache."""

import csv
import io
import json
from fractions import Fraction

import pytest

from mzv.cli import main
from mzv.values import CACHE_ENV_VAR, clear_memo


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value_single_path(capsys):
    code, out, _ = run(capsys, "value", "--kind", "mzf-reg", "--index", "0,1")
    assert code == 0
    assert "mzf-reg(0,1) = 1/12" in out
    assert "[recurrence]" in out


def test_value_all_paths_agree(capsys):
    code, out, _ = run(
        capsys, "value", "--kind", "mzf-rev", "--index", "1,1", "--path", "all"
    )
    assert code == 0
    assert out.count("1/240") == 3
    for path in ("recurrence", "stirling", "gregory"):
        assert f"[{path}]" in out
    assert "verdict: AGREE" in out


def test_value_star_regular_example(capsys):
    code, out, _ = run(capsys, "value", "--kind", "mzsf-reg", "--index", "0,3")
    assert code == 0
    assert "mzsf-reg(0,3) = 0" in out


def test_value_star_reverse_all_has_two_paths(capsys):
    code, out, _ = run(
        capsys,
        "value", "--kind", "mzsf-rev", "--index", "1,1", "--path", "all",
    )
    assert code == 0
    assert out.count("1/240") == 2
    assert "verdict: AGREE" in out


def test_value_unavailable_path_is_usage_error(capsys):
    code, _, err = run(
        capsys,
        "value", "--kind", "mzsf-rev", "--index", "1,1", "--path", "gregory",
    )
    assert code == 2
    assert "not available" in err


def test_value_bad_index_is_usage_error(capsys):
    code, _, err = run(capsys, "value", "--kind", "mzf-reg", "--index", "1,x")
    assert code == 2
    assert "error" in err


def test_value_json_round_trips(capsys):
    code, out, _ = run(
        capsys,
        "value", "--kind", "mzf-rev", "--index", "1,1",
        "--path", "all", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "AGREE"
    for record in payload["records"]:
        assert Fraction(record["value"]) == Fraction(1, 240)


def test_value_csv_parses(capsys):
    code, out, _ = run(
        capsys, "value", "--kind", "mzf-rev", "--index", "0,1", "--csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["query", "value", "provenance"]
    assert rows[1] == ["mzf-rev(0,1)", "1/12", "recurrence"]


def test_value_decimal_marked_approximate(capsys):
    code, out, _ = run(
        capsys,
        "value", "--kind", "mzf-reg", "--index", "0", "--decimal", "3",
    )
    assert code == 0
    assert "-0.500" in out
    assert "approximate" in out


def test_json_and_csv_conflict(capsys):
    code, _, err = run(
        capsys,
        "value", "--kind", "mzf-reg", "--index", "0", "--json", "--csv",
    )
    assert code == 2
    assert "mutually exclusive" in err


def test_coeff_example(capsys):
    code, out, _ = run(
        capsys, "coeff", "--index", "1,1", "--d", "1", "--a", "1,1"
    )
    assert code == 0
    assert "= 1/720" in out
    assert "[definition]" in out


def test_coeff_defaults(capsys):
    # d defaults to all zeros and a to all ones: the regular value
    code, out, _ = run(capsys, "coeff", "--index", "0,1")
    assert code == 0
    assert "= 1/12" in out


def test_coeff_bad_direction_is_usage_error(capsys):
    code, _, err = run(capsys, "coeff", "--index", "1,1", "--d", "2")
    assert code == 2
    assert "error" in err


def test_gregory_table_text(capsys):
    code, out, _ = run(capsys, "gregory", "--max", "4", "4")
    assert code == 0
    assert "-1/2" in out
    assert "1/12" in out
    assert "19/720" in out


def test_gregory_table_csv(capsys):
    code, out, _ = run(capsys, "gregory", "--max", "2", "3", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m\\n", "1", "2", "3"]
    assert rows[1] == ["1", "1", "-1/2", "1/3"]
    assert rows[2] == ["2", "-1/2", "1/12", "-1/24"]


def test_gregory_table_json(capsys):
    code, out, _ = run(capsys, "gregory", "--max", "2", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == [["1", "-1/2"], ["-1/2", "1/12"]]


def test_gregory_bad_bounds(capsys):
    code, _, err = run(capsys, "gregory", "--max", "0", "3")
    assert code == 2
    assert "error" in err


def test_stirling_number(capsys):
    code, out, _ = run(capsys, "stirling", "--kind", "S", "--n", "3", "--m", "2")
    assert code == 0
    assert "S(3,2) = 3" in out


def test_stirling_polynomial(capsys):
    code, out, _ = run(
        capsys, "stirling", "--kind", "S-poly", "--n", "2", "--m", "1"
    )
    assert code == 0
    assert "2*Y + 1" in out


def test_stirling_polynomial_at_value(capsys):
    code, out, _ = run(
        capsys,
        "stirling", "--kind", "S-poly", "--n", "2", "--m", "1",
        "--y", "1/2",
    )
    assert code == 0
    assert "= 2" in out


def test_stirling_y_with_number_kind_is_usage_error(capsys):
    code, _, err = run(
        capsys, "stirling", "--kind", "s", "--n", "2", "--m", "1", "--y", "3"
    )
    assert code == 2
    assert "--y" in err


def test_verify_suite_ok(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--suite", "choi",
        "--max-r", "3", "--max-weight", "2",
    )
    assert code == 0
    assert "identities verified" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--suite", "values", "--json",
        "--max-depth", "2", "--max-weight", "2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["results"][0]["suite"] == "values"
    assert payload["results"][0]["checked"] > 0


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2


def test_table_command(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "mzf-rev", "--max-depth", "2", "--max-weight", "2",
    )
    assert code == 0
    assert "mzf-rev(0) = -1/2" in out
    assert "mzf-rev(1,1) = 1/240" in out


def test_table_json(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "mzsf-reg",
        "--max-depth", "1", "--max-weight", "3", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    values = {r["query"]: r["value"] for r in payload["records"]}
    assert values["mzsf-reg(0)"] == "-1/2"
    assert values["mzsf-reg(3)"] == "1/120"


def test_no_command_is_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "value" in out and "verify" in out


def test_cache_dir_round_trip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    clear_memo()
    code, out, _ = run(capsys, "value", "--kind", "mzf-rev", "--index", "1,2")
    assert code == 0
    cache_file = tmp_path / "values.txt"
    assert cache_file.exists()
    assert cache_file.read_text().startswith("#mzv-values v1")
    # a fresh process state reloads the cached values without recomputing
    clear_memo()
    code, out2, _ = run(capsys, "value", "--kind", "mzf-rev", "--index", "1,2")
    assert code == 0
    assert out == out2


def test_cache_dir_corrupt_file_is_reported(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    (tmp_path / "values.txt").write_text("#wrong\n")
    code, _, err = run(capsys, "value", "--kind", "mzf-reg", "--index", "0")
    assert code == 2
    assert "cache" in err


def test_usage_error_does_not_save_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    code, _, _ = run(capsys, "value", "--kind", "mzf-reg", "--index", "1,x")
    assert code == 2
    assert not (tmp_path / "values.txt").exists()
