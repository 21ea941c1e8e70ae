"""CLI surface: commands, exit codes, JSON determinism."""

import json

import pytest

from mixedprod.cli import main, parse_pairs
from mixedprod.ideals import InvalidInput


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_pairs():
    assert parse_pairs("1:2,2:1") == [(1, 2), (2, 1)]
    with pytest.raises(InvalidInput):
        parse_pairs("nope")


def test_classify_worked_example(capsys):
    code, out, _ = run(capsys, "classify", "--n", "2", "--m", "2", "--pairs", "1:2,2:1")
    assert code == 0
    assert "cohen_macaulay: true" in out
    assert "sequentially_cm: true" in out
    assert "unmixed: true" in out


def test_classify_disjoint_edges(capsys):
    code, out, _ = run(capsys, "classify", "--n", "2", "--m", "2", "--pairs", "1:1")
    assert code == 0
    assert "cohen_macaulay: false" in out
    assert "sequentially_cm: false" in out
    assert "unmixed: true" in out


def test_classify_with_oracle(capsys):
    code, out, _ = run(capsys, "classify", "--n", "1", "--m", "3", "--pairs", "1:1",
                       "--oracle", "full")
    assert code == 0
    assert "sequentially_cm: true" in out
    assert "oracle scm_duval: true" in out


def test_classify_json_deterministic(capsys):
    code, out1, _ = run(capsys, "classify", "--n", "2", "--m", "2",
                        "--pairs", "1:2,2:1", "--json")
    assert code == 0
    _, out2, _ = run(capsys, "classify", "--n", "2", "--m", "2",
                     "--pairs", "1:2,2:1", "--json")
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["verdicts"] == {"cohen_macaulay": True, "sequentially_cm": True,
                                   "unmixed": True}
    assert payload["profile"]["q_bar"] == [0, 1, 2]
    assert payload["timing"] is None


def test_classify_invalid_input(capsys):
    code, _, err = run(capsys, "classify", "--n", "2", "--m", "2", "--pairs", "bogus")
    assert code == 1 and "error:" in err


def test_classify_non_proper(capsys):
    code, _, err = run(capsys, "classify", "--n", "2", "--m", "2", "--pairs", "0:0")
    assert code == 1 and "error:" in err


def test_dual_single_summand(capsys):
    code, out, _ = run(capsys, "dual", "--n", "3", "--m", "2", "--pairs", "2:1")
    assert code == 0
    assert "dual: I0J2 + I2J0" in out


def test_dual_twice_round_trips(capsys):
    _, out, _ = run(capsys, "dual", "--n", "3", "--m", "2", "--pairs", "2:1", "--json")
    dual = json.loads(out)["dual"]
    pairs = ",".join(f"{q}:{r}" for q, r in dual["pairs"])
    _, out2, _ = run(capsys, "dual", "--n", "3", "--m", "2", "--pairs", pairs, "--json")
    assert json.loads(out2)["dual"]["pairs"] == [[2, 1]]


def test_dual_expand(capsys):
    code, out, _ = run(capsys, "dual", "--n", "1", "--m", "1", "--pairs", "1:1", "--expand")
    assert code == 0
    assert "x1, y1" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--m", "2", "--pairs", "1:1",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["px"] == [["x1", "x2"]]
    assert payload["py"] == [["y1", "y2"]]
    assert payload["height"] == 2


def test_decompose_six_components(capsys):
    _, out, _ = run(capsys, "decompose", "--n", "2", "--m", "2", "--pairs", "1:2,2:1",
                    "--json")
    payload = json.loads(out)
    total = len(payload["px"]) + len(payload["pxy"]) + len(payload["py"])
    assert total == 6 and payload["height"] == 2


def test_facets(capsys):
    code, out, _ = run(capsys, "facets", "--n", "2", "--m", "2", "--pairs", "1:1",
                       "--json")
    assert code == 0
    assert json.loads(out)["blocks"] == [[["y1", "y2"]], [["x1", "x2"]]]


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2", "--m", "2", "--pairs", "1:1")
    assert code == 0
    assert "all oracles agree" in out


def test_sweep_clean_exit_zero(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "2", "--max-m", "2", "--max-s", "2",
                       "--oracle", "fast")
    assert code == 0
    assert "0 mismatches" in out


def test_sweep_perturb_exit_two(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "2", "--max-m", "2", "--max-s", "2",
                       "--oracle", "fast", "--perturb")
    assert code == 2
    assert "MISMATCH" in out


def test_sweep_json_lines(capsys, tmp_path):
    out_file = tmp_path / "records.jsonl"
    code, _, _ = run(capsys, "sweep", "--max-n", "1", "--max-m", "1", "--max-s", "1",
                     "--oracle", "none", "--out", str(out_file))
    assert code == 0
    records = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert len(records) == 3  # I1, J1, I1J1 at n=m=1
    assert all("verdicts" in r for r in records)


def test_sweep_workers(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "2", "--max-m", "2", "--max-s", "1",
                       "--oracle", "fast", "--workers", "2")
    assert code == 0
    assert "0 mismatches" in out
