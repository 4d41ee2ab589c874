import json

import pytest

import ngc


def test_forms_counts():
    assert [len(ngc.enumerate_forms(n)) for n in (1, 2, 3)] == [1, 4, 28]
    assert ngc.enumerate_forms(1) == [[[1]]]


def test_classify_z2():
    doc = ngc.classify(1)
    assert doc["monoidal"]["conductor"] == 16
    assert len(doc["braidings"]) == 4
    first = doc["braidings"][0]
    assert first["sigma1"]["1"] == {"exp": 4}
    assert first["sigma3"]["0"] == {"exp": 1}
    assert first["sigma3"]["1"] == {"exp": 13}


def test_verify_round_trip_and_tamper():
    doc = ngc.classify(2, "hyperbolic", -1)
    report = ngc.verify(doc)
    assert report["passed"] and report["pentagon"]
    assert len(report["braidings"]) == 8

    doc["braidings"][0]["sigma3"]["00"]["exp"] = (doc["braidings"][0]["sigma3"]["00"]["exp"] + 16) % 32
    bad = ngc.verify(json.dumps(doc))
    assert not bad["passed"]
    assert 5 in bad["braidings"][0]["failed_equations"]


def test_obstruct():
    assert ngc.obstruct([2, 2])["braidable"]
    z4 = ngc.obstruct([4])
    assert not z4["braidable"]
    assert z4["witness"]["order"] == 4


def test_oracle_compare():
    cmp = ngc.oracle_compare(1)
    assert cmp["equal"]
    assert cmp["summary"] == "oracle: sets equal (4 = 4)"


def test_errors_and_cli():
    with pytest.raises(ngc.NgcError):
        ngc.classify(2, "7")
    with pytest.raises(ValueError):
        ngc.verify("{")
    code, out, _ = ngc.run_cli(["example"])
    assert code == 0
    assert "sigma3(1)=z16^1" in out
    assert ngc.run_cli(["classify", "--rank", "9"])[0] == 2
