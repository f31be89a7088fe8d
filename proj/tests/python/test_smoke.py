import json

import pytest

import revadd


def test_carry_in_adder_metrics():
    m = revadd.rca_with_carry(16).metrics()
    assert m["quantum_cost"] == 234
    assert m["step_delay"] == 145
    assert m["ancilla"] == 0 and m["garbage"] == 0
    assert m["asap_depth"] <= m["step_delay"]


def test_simulate_adds():
    c = revadd.rca_with_carry(3)
    inputs = {"a0": 1, "a1": 1, "a2": 0, "b0": 1, "b1": 0, "b2": 1, "z": 0, "c0": 1}
    out = c.simulate(inputs)
    # 3 + 5 + 1 = 9
    assert [out[f"s{i}"] for i in range(4)] == [True, False, False, True]


def test_verify_against_oracles():
    assert revadd.verify(revadd.rca_no_carry(4), "adder", n=4)["ok"]
    r = revadd.verify(revadd.rbcd(3), "rbcd", design=3)
    assert r["ok"] and r["exhaustive"]
    r = revadd.verify(revadd.bcd(2, 16), "bcd", n=16, design=2, samples=2000)
    assert r["ok"] and r["points"] == 2000


def test_real_round_trip():
    c = revadd.rbcd(1)
    assert revadd.parse_real(c.to_real()) == c
    with pytest.raises(ValueError):
        revadd.parse_real(".numvars 1\n.variables a\n.begin\nt2 a a\n.end\n")


def test_report_tables():
    doc = revadd.report("adder-carry", [8, 16])
    cost = doc["tables"][0]
    assert cost["rows"][1]["proposed"] == 234
    assert cost["rows"][0]["improvement_hundredths"] == [1230, None]
    assert revadd.improvement_hundredths(179, 96) == 4636
    assert json.loads(revadd.rbcd(3).to_json())["metrics"]["quantum_cost"] == 70


def test_formula_ledger_and_errors():
    checks = revadd.check_formulas("rca-carry", [4, 8])
    assert all(c["expected"] == c["measured"] for c in checks)
    with pytest.raises(ValueError):
        revadd.generate("ripple", 4)
