"""Plane partitions, complements, and the lozenge bijection."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aztecbridge.engine import enumerate_lozenge_tilings
from aztecbridge.formulas import macmahon_count, macmahon_q
from aztecbridge.planepart import (
    complement,
    enumerate_pp,
    lozenges_to_pp,
    pp_to_lozenges,
    q_genfun_brute,
    volume,
)
from aztecbridge.regions import build_hexagon

boxes = st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))


def test_trivial_boxes():
    assert list(enumerate_pp(1, 1, 1)) == [((1,),), ((0,),)]
    assert len(list(enumerate_pp(0, 2, 2))) == 1
    assert len(list(enumerate_pp(2, 2, 2))) == 20


def test_rows_and_columns_decrease():
    for pp in enumerate_pp(2, 3, 2):
        for row in pp:
            assert all(row[j] >= row[j + 1] for j in range(len(row) - 1))
        for j in range(3):
            assert all(pp[i][j] >= pp[i + 1][j] for i in range(1))


@given(boxes)
def test_complement_is_an_involution(box):
    a, b, c = box
    for pp in itertools.islice(enumerate_pp(a, b, c), 40):
        cc = complement(pp, a, b, c)
        assert complement(cc, a, b, c) == pp
        assert volume(pp) + volume(cc) == a * b * c


def test_complement_volume_sum_is_symmetric():
    # summing q^volume over complements gives the same polynomial
    for a, b, c in [(2, 2, 2), (1, 2, 3)]:
        direct = sorted(volume(pp) for pp in enumerate_pp(a, b, c))
        comp = sorted(volume(complement(pp, a, b, c)) for pp in enumerate_pp(a, b, c))
        assert direct == comp


def test_palindromic_genfun():
    for a, b, c in itertools.product(range(1, 4), repeat=3):
        poly = macmahon_q(a, b, c)
        coeffs = {eq // 2: coef for (_, eq), coef in poly.items()}
        top = a * b * c
        assert all(coeffs.get(v, 0) == coeffs.get(top - v, 0) for v in range(top + 1))


def test_brute_genfun_matches_formula():
    for a, b, c in [(1, 1, 1), (1, 1, 2), (2, 2, 2), (3, 2, 1)]:
        assert q_genfun_brute(a, b, c) == macmahon_q(a, b, c)


def test_bijection_round_trip():
    for a, b, c in [(1, 1, 1), (2, 2, 2), (1, 2, 2)]:
        tilings = set()
        for pp in enumerate_pp(a, b, c):
            t = pp_to_lozenges(pp, a, b, c)
            assert lozenges_to_pp(t, a, b, c) == pp
            tilings.add(t)
        assert len(tilings) == macmahon_count(a, b, c)
        enumerated = set(enumerate_lozenge_tilings(build_hexagon(a, b, c)))
        assert tilings == enumerated


def test_zero_partition_is_the_floor():
    zero = ((0, 0), (0, 0))
    t = pp_to_lozenges(zero, 2, 2, 2)
    assert lozenges_to_pp(t, 2, 2, 2) == zero


def test_foreign_tiling_is_rejected():
    with pytest.raises(ValueError):
        t = pp_to_lozenges(((1,),), 1, 1, 1)
        lozenges_to_pp(t, 1, 1, 2)
