import pytest

import symcubic


def test_field_info():
    info = symcubic.field_info("GF(9)")
    assert info["q"] == 9 and info["p"] == 3
    assert info["fourth_root_of_unity"] is not None


def test_singular():
    assert symcubic.singular("fermat", "GF(3)")["nonreduced"]
    pts = symcubic.singular("clebsch", "GF(5)")["points"]
    assert [p["point"] for p in pts] == ["[1:1:1:1]"]


def test_lines_and_galois():
    rep = symcubic.lines("s_1_2", "GF(2)")
    assert len(rep["lines"]) == 27 and rep["tritangent_planes"] == 45
    g = symcubic.galois("s_1_2", "GF(2)")
    assert g["order"] == 2 and g["class"] == "A1"


def test_aut():
    rep = symcubic.aut("clebsch", "GF(3)")
    assert rep["order"] == 120 and rep["matched_name"] == "S5"


def test_isom():
    assert symcubic.isom("clebsch", "s_1_2", "GF(2)")["isomorphic"]
    assert not symcubic.isom("fermat", "s_1_2", "GF(5)")["isomorphic"]


def test_weyl_table():
    t = symcubic.weyl_table()
    assert t["group_order"] == 51840
    assert sum(c["size"] for c in t["classes"]) == 51840


def test_errors():
    with pytest.raises(symcubic.SymcubicError):
        symcubic.aut("fermat", "GF(3)")
    with pytest.raises(symcubic.SymcubicError):
        symcubic.field_info("GF(6)")


def test_verify_table2():
    rep = symcubic.verify("table2")
    assert rep["passed"] and len(rep["suites"][0]["checks"]) == 11
