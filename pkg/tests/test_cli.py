from __future__ import annotations

import json

import pytest

from gaugecalc.cli import main, run


def envelope(capsys, *argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_s(capsys):
    code, env = envelope(capsys, "s", "U(6)")
    assert code == 0 and env["status"] == "OK"
    assert env["result"]["s"] == 6
    assert env["result"]["factor_orders"] == [6]
    assert env["result"]["samelson_order"] == 6
    assert env["citations"]


def test_classify(capsys):
    code, env = envelope(capsys, "classify", "U(5)", "--k", "1", "--l", "5")
    assert env["result"]["verdict"] == "NOT_EQUIVALENT"
    assert env["citations"] == ["theorem:main-2"]


def test_classes(capsys):
    _, env = envelope(capsys, "classes", "U(6)")
    assert env["result"]["representatives"] == [1, 2, 3, 6]


def test_pi_warns_with_both_forms(capsys):
    code, env = envelope(capsys, "pi", "U(4)", "--k", "1", "--i", "6", "--genus", "2")
    assert code == 0
    assert env["result"]["group"] == {"rendered": "Z^4 ⊕ Z/6", "free_rank": 4, "torsion": [6]}
    assert "Z/6" in env["warnings"][0] and "gives 0" in env["warnings"][0]


def test_pi_unknown_has_reason(capsys):
    code, env = envelope(capsys, "pi", "(S1 x E7)/<(1/2; 1)>", "--k", "1", "--i", "3")
    assert code == 0 and env["status"] == "UNKNOWN"
    assert env["result"]["reason"]


def test_moduli_statuses(capsys):
    code, env = envelope(capsys, "moduli", "--n", "4", "--k", "4", "--g", "10", "--i", "7")
    assert env["result"]["group"]["rendered"] == "Z^20 ⊕ Z/24"
    code, env = envelope(capsys, "moduli", "--n", "2", "--k", "2", "--g", "10", "--i", "3")
    assert code == 2 and env["status"] == "REJECTED"
    code, env = envelope(capsys, "moduli", "--n", "4", "--k", "1", "--g", "10", "--i", "60")
    assert code == 2 and env["status"] == "OUT_OF_RANGE"


def test_invalid_spec(capsys):
    code = main(["s", "(S1 x SU(2))/<(0/1; 1)>"])
    captured = capsys.readouterr()
    assert code == 2
    assert "π₁ has torsion" in captured.err


def test_verify_cases(capsys):
    code, env = envelope(capsys, "verify", "sq-lemma", "--n", "10")
    assert code == 0 and env["result"]["passed"]
    code, env = envelope(capsys, "verify", "wu", "--i", "2", "--j", "6", "--n", "12")
    assert env["result"]["value"] == "w2*w6"
    code, env = envelope(capsys, "verify", "criterion", "--case", "psp", "--n", "3")
    assert env["result"]["passed"]
    code, env = envelope(capsys, "verify", "commutator", "--case", "e6", "--verbose")
    assert env["result"]["pipeline"][0].startswith("mu*")


def test_verify_failure_exit_code(capsys):
    code, env = envelope(capsys, "verify", "criterion", "--case", "so-even", "--n", "10")
    assert code == 3 and env["status"] == "FAILED"


def test_verify_all():
    env = run(["verify", "all"])
    assert env.exit_code == 0


def test_text_format(capsys):
    assert main(["pi", "U(3)", "--k", "1", "--i", "4", "--verbose"]) == 0
    out = capsys.readouterr().out
    assert "group: Z/2" in out and "d_5" in out


def test_tables_flag(tmp_path, capsys):
    f = tmp_path / "t.csv"
    f.write_text("family,n,i,value\nE7,,4,0\nE7,,5,0\nE7,,6,Z/5\n", encoding="utf-8")
    _, env = envelope(capsys, "pi", "(S1 x E7)/<(1/2; 1)>", "--k", "2", "--i", "4", "--tables", str(f))
    assert env["result"]["group"]["rendered"] == "Z/5"


def test_missing_tables_file(capsys):
    code, env = envelope(capsys, "s", "U(3)", "--tables", "/nonexistent.csv")
    assert code == 2 and env["status"] == "INVALID"


def test_bad_flags():
    with pytest.raises(SystemExit):
        main(["classify", "U(3)", "--k", "1"])
