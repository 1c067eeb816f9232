import pytest

import _palintiple as pal


def test_parse_and_classify():
    p = pal.parse("8,7,1,2@10*4")
    assert p["value"] == 8712
    assert p["mult"] == 4
    assert p["base"] == 10
    assert p["digits"] == [8, 7, 1, 2]
    assert p["carries"] == [0, 3, 3, 0]
    assert p["class"] == "symmetric"
    assert pal.parse("28,25,108,113,2@139*10")["class"] == "asymmetric"
    with pytest.raises(ValueError):
        pal.parse("8,7,1,3@10*4")


def test_make_and_reconstruct():
    p = pal.make(9, 10, [9, 8, 0, 1])
    assert p["literal"] == "9,8,0,1@10*9"
    assert p["value"] == 9801
    assert pal.digits_from_carries(4, 10, [0, 3, 3, 0]) == [8, 7, 1, 2]


def test_enumerate():
    lits, truncated = pal.enumerate(10, mult=4, min_length=4, max_length=4)
    assert lits == ["8,7,1,2@10*4"]
    assert not truncated
    lits, _ = pal.enumerate(3, min_length=2, max_length=5)
    assert "2,1,2,0,1@3*2" in lits


def test_families():
    f = pal.derive("8,7,1,2@10*4", "single", 10)
    assert f["nhat"] == 10
    assert f["base"] == (40, 99, 1)
    assert f["carries"] == [8, 7, 1, 2, 0]
    assert pal.instantiate("8,7,1,2@10*4", "hoey", 1) == "28,25,108,113,2@139*10"
    with pytest.raises(ValueError):
        pal.instantiate("8,7,1,2@10*4", "hoey", 0)
    assert (
        pal.instantiate("8,7,1,2@10*4", "rho-hoey", 0, allow_zero=True)
        == "42,37,5,14,4@52*10"
    )


def test_polynomials():
    d = pal.palinomial("8,7,1,2@10*4")
    assert d["digit"] == [2, 1, 7, 8]
    assert d["rdigit"] == [8, 7, 1, 2]
    assert sum(c * 10**i for i, c in enumerate(d["pal"])) == 0
    ok, _ = pal.check_identity("linear-factor", "8,7,1,2@10*4")
    assert ok
    assert pal.unit_circle("8,7,1,2@10*4")


def test_young_graph():
    g = pal.young(9, 10)
    assert len(g["nodes"]) == 4
    assert len(g["edges"]) == 6
    assert g["is_1089"]
    assert g["complete"] is None
    assert pal.young(2, 5)["complete"] == 2
    assert pal.young_iso(3, 14, 3, 22)
    assert not pal.young_iso(9, 10, 2, 5)
    assert pal.correspond(2, 3, 3, 14) == (True, True)


def test_permutiples():
    ws = pal.permutiples([2, 1, 0], 4, 4, 2, 3)
    assert {(w["base"], w["mult"]) for w in ws} == {(4, 2)}


def test_corpus():
    passed, failed, skipped = pal.verify_corpus()
    assert failed == 0
    assert passed >= 25
    assert skipped == 1
