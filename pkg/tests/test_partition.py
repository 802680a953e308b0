import random

import pytest

from conifold.characters import SL2Decomp, sym_char_oracle
from conifold.laurent import Laurent
from conifold.partition import (
    PT,
    Chamber,
    chamber_Z,
    conifold_factors,
    invariant_table,
    nekrasov_r1,
    refined_conifold_Z,
    topstring_Z,
    verify_exterior_identity,
    verify_inverse_identity,
    verify_sl2,
    verify_topstring,
)
from conifold.series import Series6D, geom_factor_power


def test_nekrasov_low_parts():
    z = nekrasov_r1(4)
    lam0 = {e: c for e, c in z.terms.items() if e[2] == 0}
    assert lam0 == {(0, 0, 0): 1}
    lam1 = {(a, b): c for (a, b, c3), c in z.terms.items() if c3 == 1}
    assert lam1 == {(i, j): 1 for i in range(4) for j in range(4) if i + j <= 3}


@pytest.mark.parametrize("n", range(9))
def test_nekrasov_is_sym_character(n):
    assert nekrasov_r1(n) == sym_char_oracle(n)


def test_topstring_columns():
    z = topstring_Z((10, 3))
    assert all(w == 0 for _, _, w in z.terms)
    assert z.coefficient(0, 0) == Laurent({0: 1})
    for m in range(1, 11):
        assert z.coefficient(0, m) == Laurent()
        assert z.coefficient(1, m) == Laurent({0: (-1) ** (m + 1) * m})


def test_topstring_is_s_collapse():
    assert topstring_Z((10, 5)) == refined_conifold_Z((10, 5)).collapse_s()
    assert verify_topstring((10, 5)).ok


def test_refined_examples():
    z = refined_conifold_Z((8, 4))
    assert z.coefficient(2, 4) == Laurent({2: 1, 0: 2, -2: 1})
    assert z.coefficient(1, 3) == Laurent({2: 1, 0: 1, -2: 1})
    for m in range(1, 9):
        assert z.coefficient(0, m) == Laurent()
        expected = Laurent({w: (-1) ** (m - 1) for w in range(-(m - 1), m, 2)})
        assert z.coefficient(1, m) == expected


def test_factor_order_is_irrelevant():
    box = (7, 4)
    factors = conifold_factors(7)
    rng = random.Random(3)
    for _ in range(3):
        rng.shuffle(factors)
        acc = Series6D.unit(box)
        for mono, sign in factors:
            acc = acc * geom_factor_power(mono, sign, 1, box)
        assert acc == refined_conifold_Z(box)


def test_chamber_examples():
    box = (5, 3)
    assert chamber_Z(box, 0) == Series6D.unit(box)
    assert chamber_Z(box, 1) == Series6D({(0, 0, 0): 1, (1, 1, 0): 1}, box)
    assert chamber_Z(box, 5) == refined_conifold_Z(box)
    assert chamber_Z(box, 50) == refined_conifold_Z(box)
    assert chamber_Z(box, PT) == refined_conifold_Z(box)


def test_chamber_parse():
    assert Chamber.parse("pt") == PT
    assert Chamber.parse(" PT ") == PT
    assert Chamber.parse("3") == Chamber(3)
    with pytest.raises(ValueError):
        Chamber.parse("-1")
    with pytest.raises(ValueError):
        Chamber.parse("x")


def test_chamber_stabilization():
    box = (8, 4)
    pt = refined_conifold_Z(box)
    for n in range(9):
        z = chamber_Z(box, n)
        for l in range(5):
            for m in range(min(n, 8) + 1):
                assert z.coefficient(l, m) == pt.coefficient(l, m)


@pytest.mark.parametrize("box", [(1, 1), (3, 2), (8, 4), (10, 5)])
def test_inverse_identity(box):
    assert verify_inverse_identity(box).ok


def test_inverse_identity_negative_control():
    r = verify_inverse_identity((4, 2), sign_flip=(2, 0))
    assert not r.ok
    assert (r.discrepancies[0]["l"], r.discrepancies[0]["m"]) == (1, 2)
    assert r.to_json()["status"] == "fail"


@pytest.mark.parametrize("chamber", [0, 1, 2, 3, 4, 5, 6, PT])
def test_exterior_identity(chamber):
    assert verify_exterior_identity((8, 4), chamber).ok


def test_exterior_small_cases():
    assert verify_exterior_identity((4, 2), 2).ok
    assert verify_exterior_identity((3, 2), 1).ok


def test_sl2_report():
    assert verify_sl2((8, 4)).ok
    bad = verify_sl2((4, 2), sign_flip=(2, 0))
    assert not bad.ok
    assert bad.discrepancies[0]["reason"] == "not palindromic"


def test_invariant_table_rows():
    t = invariant_table((8, 4))
    r = t.row(2, 4)
    assert r.invariant == Laurent({2: 1, 0: 2, -2: 1})
    assert r.numeric == 4
    assert r.sl2 == SL2Decomp({2: 1, 0: 1})
    assert t.row(1, 3).numeric == 3
    assert t.row(0, 0).invariant == Laurent({0: 1}) and t.row(0, 0).numeric == 1
    for m in range(1, 9):
        assert t.numeric[(1, m)] == (-1) ** (m + 1) * m
    for (l, m), p in t.entries.items():
        assert t.numeric[(l, m)] == p.at_one()


def test_invariant_table_numeric_matches_topstring():
    box = (8, 4)
    t = invariant_table(box)
    z = topstring_Z(box)
    for l, m in z.cells():
        assert t.numeric[(l, m)] == z.coefficient(l, m)[0]


def test_table_json_shape():
    j = invariant_table((4, 2)).to_json()
    row = next(r for r in j["rows"] if (r["l"], r["m"]) == (2, 4))
    assert row == {"l": 2, "m": 4, "s_min": -2, "coeffs": ["1", "2", "1"], "P_lm": "4",
                   "sl2": {"2": 1, "0": 1}}
    assert j["chamber"] == "pt"
