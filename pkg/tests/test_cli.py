import json
import os

import pytest

from bhmirror.cli import main

FIX = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fix(name):
    return os.path.join(FIX, name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", fix("fermat-cubic_J.json"))
    assert code == 0
    assert "central charge:   1" in out
    assert "|G_dual|:         9" in out


def test_rings_json_table(capsys):
    code, out, _ = run(capsys, "rings", fix("fermat-cubic_J.json"),
                       "--side", "B", "--engine", "orbifold", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["table"] == {"0 0": 1, "0 1": 1, "1 0": 1, "1 1": 1}
    assert rep["anomalies"] == []


def test_rings_engines_agree(capsys):
    outs = []
    for engine in ("complex", "orbifold"):
        code, out, _ = run(capsys, "rings", fix("fermat-cubic_J.json"),
                           "--engine", engine, "--json")
        assert code == 0
        outs.append(json.loads(out)["table"])
    assert outs[0] == outs[1]


def test_verify_pass_and_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", fix("fermat-cubic_J.json"),
                         "--json")
    code2, out2, _ = run(capsys, "verify", fix("fermat-cubic_J.json"),
                         "--json")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reports
    rep = json.loads(out1)
    assert all(v["status"] == "PASS" for v in rep["verdicts"])
    assert set(rep["tables"]) == {"A", "B", "A_dual", "B_dual",
                                  "oracle_B", "oracle_B_dual"}


def test_verify_threads_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", fix("fermat-cubic_J.json"),
                         "--json")
    code2, out2, _ = run(capsys, "verify", fix("fermat-cubic_J.json"),
                         "--json", "--threads", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_dual_roundtrip(capsys):
    code, out, _ = run(capsys, "dual", fix("fermat-cubic_J.json"), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["matrix"] == [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
    assert rep["group_order"] == 9


def test_check_unified_pass(capsys):
    code, out, _ = run(capsys, "check-unified", fix("reflexive_simplex.json"),
                       "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "PASS"
    assert rep["necessary_condition"] == "pass"


def test_check_unified_bound_zero(capsys):
    code, out, _ = run(capsys, "check-unified", fix("reflexive_simplex.json"),
                       "--degree-bound", "0", "--json")
    assert code == 1
    assert json.loads(out)["status"] == "FAIL-UNKNOWN"


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "analyze", fix("does_not_exist.json"))
    assert code == 2
    assert "input error" in err


def test_malformed_json_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2


def test_non_cy_input_rejected(tmp_path, capsys):
    doc = {"mode": "bh", "matrix": [[2, 1], [0, 2]]}
    f = tmp_path / "chain.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
    assert "Calabi-Yau" in err


def test_float_rational_rejected(tmp_path, capsys):
    doc = {"mode": "bh", "matrix": [[3, 0, 0], [0, 3, 0], [0, 0, 3]],
           "group": {"generators": [[0.333, 0.333, 0.333]]}}
    f = tmp_path / "float.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
