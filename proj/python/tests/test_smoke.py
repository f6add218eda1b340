import pytest

import roothk


def test_cartan_and_gram():
    assert roothk.cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
    assert roothk.cartan_matrix("G", 2) == [[2, -3], [-1, 2]]
    assert roothk.gram_matrix("E", 6) == roothk.cartan_matrix("E", 6)


def test_group_orders():
    assert roothk.group_order("E", 8) == 696729600
    assert roothk.group_order("B", 3) == 48
    assert roothk.enumerate_group_size("F", 4) == 1152
    with pytest.raises(roothk.RoothkError):
        roothk.enumerate_group_size("E", 8, group_cap=1000)


def test_invariant_dims():
    d = roothk.invariant_dims("D", 5)
    assert (d["sym2"], d["wedge2"], d["wedge2_doubled"]) == (1, 0, 1)
    assert d["irreducible"]


def test_smith_normal_form():
    assert roothk.smith_normal_form([[2, -1], [-1, 2]]) == [1, 3]
    assert roothk.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    big = 10**30
    assert roothk.smith_normal_form([[big]]) == [big]


def test_analyze():
    doc = roothk.analyze("A", 3, lattice="dual")
    assert doc["command"] == "analyze"
    assert doc["summary"]["fail"] == 0
    names = [c["name"] for c in doc["checks"]]
    assert "analyze/A3/freeness" in names
    skipped = roothk.analyze("A", 3, group_cap=10)
    assert skipped["summary"]["skipped"] == 1


def test_sublattices_and_lemma():
    tower = roothk.sublattices("B", 4)
    assert tower["checks"][0]["values"]["labels"] == "D4,Z4,D4*"
    lemma = roothk.lemma_check(3)
    assert all(c["status"] == "pass" for c in lemma["checks"])


def test_bad_specs():
    with pytest.raises(ValueError):
        roothk.cartan_matrix("A", 0)
    with pytest.raises(ValueError):
        roothk.analyze("B", 3, lattice="index:7")
    with pytest.raises(ValueError):
        roothk.report("nonsense")
