import json
from pathlib import Path

import pytest

from radchain.cli import EXIT_CHECK, EXIT_INPUT, EXIT_OK, dump_json, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chain_json_c4(capsys):
    code, out, _ = run(capsys, "chain", "--group", "C4", "--p", "2", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["length"] == 2
    assert doc["dimension"] == 4 and doc["p"] == 2 and doc["group"] == "C4"
    assert [s["index_val"] for s in doc["steps"]] == [0, 1, 3]
    assert doc["checks"] and all(doc["checks"].values())
    assert set(doc["steps"][0]) == {"n", "index_val", "radical_selfdual", "hereditary"}


@pytest.mark.parametrize("group", ["C2", "Q8", "C3xC3"])
def test_json_round_trip(capsys, group):
    p = "3" if "3" in group else "2"
    _, out, _ = run(capsys, "chain", "--group", group, "--p", p, "--format", "json")
    assert dump_json(json.loads(out)) == out


def test_chain_text(capsys):
    code, out, _ = run(capsys, "chain", "--group", "C2", "--p", "2")
    assert code == EXIT_OK
    assert "length: 1, head order reached" in out
    code, out, _ = run(capsys, "chain", "--group", "C2xC4", "--p", "2")
    assert "length: 4" in out


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "chain", "--group", "C4")[0] == EXIT_INPUT  # no --p
    assert run(capsys, "chain", "--group", "C4", "--p", "4")[0] == EXIT_INPUT
    assert run(capsys, "chain", "--group", "S4", "--p", "2")[0] == EXIT_INPUT
    assert run(capsys, "chain", "--p", "2")[0] == EXIT_INPUT
    assert run(capsys, "frobnicate")[0] == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "chain", "--input", str(bad))
    assert code == EXIT_INPUT and "error" in err
    bad.write_text(json.dumps({"order": 2, "identity": 0, "table": [[0, 1], [1, 1]]}))
    assert run(capsys, "chain", "--input", str(bad), "--p", "2")[0] == EXIT_INPUT
    bad.write_text(json.dumps({"dim": 2, "p": 2, "structure_constants": [[["1", "0"]]], "unit": ["1"], "tau": ["1"]}))
    assert run(capsys, "chain", "--input", str(bad))[0] == EXIT_INPUT
    assert run(capsys, "chain", "--input", str(tmp_path / "missing.json"))[0] == EXIT_INPUT


def test_non_order_input(capsys, tmp_path):
    doc = json.loads((DATA / "c2_algebra.json").read_text())
    doc["order_basis"] = [["1", "0"], ["0", "2"]]  # <1, 2g> is an order; <2, g> is not
    f = tmp_path / "o.json"
    f.write_text(json.dumps(doc))
    assert run(capsys, "chain", "--input", str(f))[0] == EXIT_OK
    doc["order_basis"] = [["2", "0"], ["0", "1"]]
    f.write_text(json.dumps(doc))
    assert run(capsys, "chain", "--input", str(f))[0] == EXIT_INPUT


def test_file_inputs(capsys):
    code, out, _ = run(capsys, "chain", "--input", str(DATA / "q8_group.json"), "--p", "2", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["length"] == 3
    code, out, _ = run(capsys, "chain", "--input", str(DATA / "c2_algebra.json"), "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["length"] == 1
    assert "step1_is_dual_of_radical" not in doc["checks"]
    code, out, _ = run(
        capsys, "chain", "--input", str(DATA / "c2_algebra.json"), "--assume-indecomposable", "--format", "json"
    )
    assert json.loads(out)["checks"]["step1_is_dual_of_radical"]
    assert run(capsys, "chain", "--input", str(DATA / "c2_algebra.json"), "--p", "3")[0] == EXIT_INPUT


def test_failed_check_exit_code(capsys, monkeypatch):
    import radchain.cli as cli

    monkeypatch.setattr(cli, "group_checks", lambda *a: {"forced": False})
    assert run(capsys, "chain", "--group", "C2", "--p", "2")[0] == EXIT_CHECK


def test_verify_abelian(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "abelian", "--p", "2", "--max-order", "16", "--jobs", "1")
    assert code == EXIT_OK
    assert "11 groups, 11 matches" in out


def test_verify_structure_line(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pgroup-structure", "--p", "2", "--jobs", "1")
    assert code == EXIT_OK
    assert "[Δ:Λ] valuation Q8: expected 4, got 4" in out


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "everything")[0] == EXIT_INPUT


def test_verify_pool_is_deterministic(capsys):
    args = ("verify", "--suite", "abelian", "--p", "3", "--max-order", "9", "--format", "json")
    _, a, _ = run(capsys, *args, "--jobs", "1")
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert a == b
