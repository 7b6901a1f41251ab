"""Smoke tests for the Python layer: the bindings must agree with the
documented behavior of the command-line tool (same documents, same
values), since both render through the same serializer."""

import json

import pytest

import ringlab


def test_ring_construction_and_arithmetic():
    r = ringlab.Ring("Z12")
    assert r.label == "Z12"
    assert r.cardinality == 12
    assert r.zero() == "0"
    assert r.one() == "1"
    assert r.add("7", "8") == "3"
    assert r.sub("3", "7") == "8"
    assert r.neg("5") == "7"
    assert r.mul("4", "6") == "0"
    assert r.pow("5", 2) == "1"
    assert r.elements() == [str(i) for i in range(12)]


def test_matrix_ring_elements_are_canonical_strings():
    r = ringlab.Ring("M2(Z2)")
    assert r.cardinality == 16
    assert r.one() == "[[1,0],[0,1]]"
    assert r.mul("[[0,1],[0,0]]", "[[0,0],[1,0]]") == "[[1,0],[0,0]]"


def test_structural_tables():
    assert ringlab.table("Z12", "sqrtJ") == ["0", "6"]
    assert ringlab.table("Z12", "J") == ["0", "6"]
    assert ringlab.table("Z8", "N") == ["0", "2", "4", "6"]
    assert ringlab.table("Z4 x Z2", "idem") == [
        "(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    units = ringlab.table("Z12", "U")
    assert units == ["1", "5", "7", "11"]


def test_inverse_certificate_dict():
    cert = ringlab.inverse("Z5", "2", "gzhou")
    assert cert["b"] == "3"
    assert cert["n"] == 4
    assert cert["p"] == "1"
    assert all(cert["checks"].values())


def test_inverse_kind_distinctions():
    pd = ringlab.inverse("Z8", "2", "pdrazin")
    assert pd["b"] == "0"
    assert pd["n"] is None  # this kind has no existential exponent
    dz = ringlab.inverse("Z8", "2", "drazin")
    assert dz["b"] == "0"
    assert dz["n"] == 3  # index of the nilpotent 2 in Z8


def test_classify():
    doc = ringlab.classify("Z5")
    assert doc["ring"] == "Z5"
    for row in doc["rows"]:
        a = int(row["a"])
        assert row["gzhou"] == str(a ** 3 % 5)


def test_verify_clean_sweep():
    rep = ringlab.verify("Z6", "cline")
    assert rep["population"] == 515
    assert rep["passes"] == 515
    assert rep["fails"] == 0
    assert rep["counterexamples"] == []
    assert rep["seed"] == ringlab.default_seed


def test_verify_overridden_bound_records_misses():
    rep = ringlab.verify("Z5", "equiv", bound=1)
    assert rep["passes"] == 2
    assert rep["fails"] == 3
    assert "n-search bound overridden: 1" in rep["notes"]


def test_verify_matches_core_document_bytes():
    r = ringlab.Ring("Z4")
    text = r.verify_json("jacobson")
    assert ringlab.verify(r, "jacobson") == json.loads(text)
    assert r.verify_json("jacobson") == text  # byte-stable rerun


def test_matrix_inverse():
    none = ringlab.matrix_inverse("[[2]]")
    assert none["exists"] is False
    assert none["conclusive_bound"] == 2

    rot = ringlab.matrix_inverse("[[0,-1],[1,0]]")
    assert rot["exists"] is True
    assert rot["b"] == "[[0,1],[-1,0]]"
    assert rot["n"] == 4

    jordan = ringlab.matrix_inverse("[[0,1],[0,0]]", "drazin")
    assert jordan["b"] == "[[0,0],[0,0]]"


def test_errors():
    with pytest.raises(ValueError, match="offset 3"):
        ringlab.Ring("Z5 y Z2")
    with pytest.raises(ValueError, match="cap"):
        ringlab.Ring("M9(Z9)")
    with pytest.raises(ValueError, match="not enumerable|expected"):
        ringlab.Ring("Q2")
    with pytest.raises(ValueError):
        ringlab.inverse("Z4", "2", "nope")
    with pytest.raises(ValueError):
        ringlab.table("Z4", "nope")
    with pytest.raises(ValueError):
        ringlab.verify("Z4", "nosuch")
    assert issubclass(ringlab.FalsificationError, Exception)
