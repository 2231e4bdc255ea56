import json
from pathlib import Path

import pytest

import axialrad

DATA = Path(__file__).resolve().parents[2] / "data"


def radical_dims(report):
    return {k: report["radicals"][k]["dimension"] for k in ("axial", "jacobson", "form")}


@pytest.mark.parametrize("eta, dim", [("1/2", 0), ("1/3", 0), ("-1", 1), ("2", 2)])
def test_three_c_radicals(eta, dim):
    result = axialrad.analyze(axialrad.construct("3C", eta=eta))
    assert result.ok
    assert radical_dims(result.report) == {"axial": dim, "jacobson": dim, "form": dim}


def test_inflated_form_given_policy():
    result = axialrad.analyze(axialrad.construct("inflated-form"), form_policy="given")
    assert result.ok
    assert radical_dims(result.report) == {"axial": 0, "jacobson": 0, "form": 3}


def test_file_input_and_input_errors():
    assert axialrad.analyze(DATA / "3c_half.json").ok
    bad = axialrad.analyze(DATA / "not_idempotent.json")
    assert bad.exit_code == 1
    assert bad.report["violations"][0]["condition"] == "nonzero-idempotent"


def test_oracle_agreement_and_bound():
    assert axialrad.oracle(axialrad.construct("2B", field=3)).report["ideal_count"] == 4
    assert axialrad.oracle(axialrad.construct("matsuo", eta="2", field=5)).ok
    with pytest.raises(axialrad.BoundExceeded):
        axialrad.oracle(axialrad.construct("matsuo", group="s4", field=3), bound=100)


def test_corpus_and_determinism():
    names = axialrad.corpus("5")
    assert "Matsuo(S4,1/2) over GF(5)" in names
    member = axialrad.corpus_member("1A(1/2)+3C(1/2)")
    first = axialrad.analyze(member).report
    assert json.dumps(first, sort_keys=True) == json.dumps(axialrad.analyze(member).report, sort_keys=True)


def test_parse_errors():
    assert axialrad.analyze("{").exit_code == 1
    with pytest.raises(axialrad.ParseError):
        axialrad.oracle("{")
