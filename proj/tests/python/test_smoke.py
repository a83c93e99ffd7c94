import pytest

import unigen


def test_parse_spec_canonical():
    assert unigen.parse_spec("C2  x S3") == "C2 x S3"
    with pytest.raises(ValueError, match="offset 5"):
        unigen.parse_spec("C2 x Q8")


def test_analyze_s4():
    a = unigen.analyze("S4", chains=True)
    assert a["order"] == 24
    assert (a["d"], a["m"], a["ell"], a["lambda"]) == (2, 3, 4, 3)
    assert len(a["longest_chain"]) == 5
    assert a["classification"]["behavioral_agreement"] is True


def test_csv_row():
    assert unigen.csv_header().split(",")[0] == "spec"
    assert unigen.csv_row("S4").startswith("S4,24,2,3,4,3,1,4,false,false,")


def test_classify_record():
    rec = unigen.classify("Scalar(5,2,2)")
    assert rec["verdict"] == "ScalarSemidirect(5,2,2,4)"
    assert (rec["p"], rec["q"], rec["d"], rec["lambda"]) == (5, 2, 3, 4)


def test_table_input():
    z3 = {"kind": "table", "order": 3, "table": [[1, 2, 0], [2, 0, 1], [0, 1, 2]]}
    assert unigen.analyze(z3)["order"] == 3
    with pytest.raises(ValueError):
        unigen.analyze({"kind": "table", "order": 2, "table": [[0, 1], [1, 5]]})


def test_chains_and_export():
    c = unigen.chains("S4")
    assert (c["ell"], c["lambda"]) == (4, 3)
    assert len(c["longest"]) == 5 and len(c["shortest"]) == 4
    lat = unigen.export_lattice("S4")
    assert len(lat["subgroups"]) == 30
    assert all(isinstance(e, list) and len(e) == 2 for e in lat["edges"])


def test_cap(monkeypatch):
    monkeypatch.setenv("UNIGEN_ORDER_CAP", "10")
    with pytest.raises(unigen.CapExceeded):
        unigen.analyze("S4")


def test_verify_deterministic():
    one = unigen.verify(max_order=24, workers=1)
    two = unigen.verify(max_order=24, workers=2)
    assert one["exit_code"] == 0
    assert one["failures"] == 0
    assert one["text"] == two["text"]
    with pytest.raises(unigen.UnigenError):
        unigen.verify(checks="nope")
