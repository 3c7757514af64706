from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from walab.cli import dumps, loads, main, run_verify, to_jsonable

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_info_d4(capsys):
    code, out = run(capsys, "info", "d4")
    assert code == 0
    assert "h_check: 6" in out
    assert "two_rho: 6α1+10α2+6α3+6α4" in out


def test_info_a1_and_e8_json(capsys):
    _, out = run(capsys, "info", "a1", "--json")
    assert json.loads(out)["positive_roots"] == 1
    _, out = run(capsys, "info", "e8", "--json")
    assert json.loads(out)["theta"] == "2α1+3α2+4α3+6α4+5α5+4α6+3α7+2α8"


def test_unknown_algebra_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["info", "b7"])
    assert exc.value.code == 2


def test_levels_e6(capsys):
    _, out = run(capsys, "levels", "e6", "--m", "0", "--json")
    d = loads(out)
    assert d["k"] == -2
    assert d["l_plus_h_check"] == Fraction(10, 9)
    assert d["principal_cc_l"] == Fraction(-22, 5)
    assert d["l_admissible"] is False
    assert '"k": "-2/1"' in out


def test_levels_d4_edges(capsys):
    _, out = run(capsys, "levels", "d4", "--m", "-1", "--json")
    assert loads(out)["k"] == -2
    _, out = run(capsys, "levels", "d4", "--m", "1", "--json")
    assert loads(out)["k"] == 0
    with pytest.raises(SystemExit):
        main(["levels", "d4", "--m", "-2"])


def test_tables_markdown_golden(capsys):
    _, out = run(capsys, "tables")
    assert out == (FIXTURES / "tables.md").read_text(encoding="utf-8")


def test_tables_json_golden(capsys):
    _, out = run(capsys, "tables", "--format", "json")
    assert out == (FIXTURES / "tables.json").read_text(encoding="utf-8")
    data = loads(out)
    cell = next(r for r in data["table1"] if r["algebra"] == "e8" and r["m"] == 3)
    assert cell["l_plus_h_check"] == Fraction(28, 27)
    row = data["lemma"]["e6"]["rows"][1]
    assert row["y"] == "t_{-ρ}s_{-θ+10δ}s_2" and row["beta"].endswith("θ-α2")


def test_json_round_trip():
    rep = run_verify("d4", 0)
    once = to_jsonable(rep.as_dict())
    assert json.loads(dumps(loads(dumps(rep.as_dict())))) == json.loads(dumps(rep.as_dict()))
    assert to_jsonable(loads(json.dumps(once))) == once


def test_verify_d4_json_schema(capsys):
    code, out = run(capsys, "verify", "d4", "--m", "0", "--json")
    assert code == 0
    d = json.loads(out)
    assert set(d) == {"tool_version", "command", "cases", "summary", "caveats"}
    lemma = next(c for c in d["cases"] if c["m"] == 0)
    assert lemma["p"] == 5
    for c in lemma["checks"]:
        assert set(c) == {"name", "pass", "lhs", "rhs"} and c["pass"] is True
    assert d["summary"]["failed"] == 0


def test_verify_e8_m4_condition3(capsys):
    code, out = run(capsys, "verify", "e8", "--m", "4")
    assert code == 0
    assert "PASS e8 m=4 condition3: (34, 49, 66, 96, 75, 52, 27, 0)" in out


def test_verify_all():
    rep = run_verify("all")
    lemma = [c for c in rep.cases if c.p is not None]
    assert len(lemma) == 11
    cc = [ch for c in rep.cases for ch in c.checks if ch.name.startswith("central_charge")]
    assert len(cc) == 10 and all(ch.passed for ch in cc)
    assert len({c.algebra for c in rep.cases if any(ch.name.startswith("central_charge") for ch in c.checks)}) == 8
    contra = [ch for c in rep.cases for ch in c.checks if ch.name == "growth_contradiction"]
    assert len(contra) == 4
    assert rep.summary["failed"] == 0
    order = [(c.algebra, -2 if c.m is None else c.m) for c in rep.cases]
    assert order == sorted(order)


def test_exit_status_reflects_failures(monkeypatch, capsys):
    import walab.cli as cli
    from walab.integral import Check

    real = cli.cc_report

    def broken(name):
        rep = real(name)
        rep.checks.append(Check("forced", False, 0, 1))
        return rep

    monkeypatch.setattr(cli, "cc_report", broken)
    code, out = run(capsys, "verify", "a1")
    assert code == 1 and "FAIL a1 forced" in out


def test_linkage_reflexive(capsys):
    code, out = run(capsys, "linkage", "d4", "--m", "0", "--lambda", "0,0,0,0", "--mu", "0,0,0,0")
    assert code == 0 and "weight chain: 0 step(s)" in out


def test_linkage_dominant_partner_depth_one(capsys):
    # theta - alpha_2 has Dynkin labels (1, -1, 1, 1) in d4
    _, out = run(capsys, "linkage", "d4", "--m", "0", "--lambda", "1,-1,1,1", "--mu", "0,0,0,0", "--json")
    d = loads(out)
    assert len(d["weight_chain"]) == 1
    step = d["weight_chain"][0]
    assert step["beta"] == "θ-α2" and step["n"] == 1 and step["lhs"] == step["rhs"] == 2


def test_linkage_generic_level_bounded_failure(capsys):
    _, out = run(capsys, "linkage", "a1", "--k", "1000003/999983", "--lambda", "3", "--mu", "0")
    assert "not found within bounds" in out and "note:" in out


def test_linkage_malformed_rational(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["linkage", "a1", "--k", "1/x", "--lambda", "0", "--mu", "0"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "walab", "info", "a1"], capture_output=True, text=True, check=True)
    assert "positive_roots: 1" in out.stdout
