import pytest

import permclass


def test_golden_pairs():
    word = permclass.aip_to_word([5, 2, 1, 4, 3, 7, 6, 10, 8, 13, 11, 9, 12])
    assert word == "RLREWEWLWRLW"
    assert permclass.word_to_xperm(word) == [2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1]
    assert permclass.word_to_aip("ELRREREWEW") == [2, 6, 1, 4, 5, 8, 7, 3, 10, 9, 11]


def test_zeta_round_trip():
    path = permclass.word_to_path("WRLWERLRE")
    assert path == "DUDDDUUUUDUUUDDUDD"
    assert permclass.path_to_word(path) == "WRLWERLRE"


def test_membership_and_stats():
    p = [5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11]
    assert permclass.is_almost_increasing(p, 2)
    assert not permclass.is_almost_increasing(p, 1)
    assert permclass.height_profile(p) == [1, 2, 2, 2, 1, 2, 1, 0, 0, 1, 1, 0]
    assert permclass.stats(p) == {"cyc": 5, "fp": 2, "exc": 4, "inv": 17}
    assert not permclass.is_x_class([2, 4, 1, 3])


def test_psi():
    assert permclass.psi([2, 1]) == "U1 D1"
    p = [5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11]
    assert permclass.psi_inverse(permclass.psi(p)) == p
    assert permclass.theta(p) == "UULLDUDDLULD"


def test_series():
    assert permclass.ak_series(1, 6) == [1, 1, 2, 6, 20, 68, 232]
    assert permclass.ak_series(None, 6) == [1, 1, 2, 6, 24, 120, 720]
    assert permclass.xclass_series(6) == [1, 1, 2, 6, 20, 68, 232]
    assert permclass.h_series(1, 2)[2] == "u^2 + v*q"


def test_errors_carry_codes():
    with pytest.raises(permclass.PermclassError) as info:
        permclass.xperm_to_word([2, 4, 1, 3])
    assert info.value.code == "NOT_IN_CLASS"
    with pytest.raises(ValueError):
        permclass.word_to_aip("RW")


def test_verify_small():
    results = permclass.verify("bijections", 5)
    assert results and all(ok for _, ok in results)
