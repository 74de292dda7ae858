"""Height functions, minimal tilings, flips, and the two rank computations."""

from fractions import Fraction

import pytest

from aztecbridge.engine import enumerate_tilings, is_vertical
from aztecbridge.regions import build_aztec_diamond, build_double_rectangle, build_hexagon
from aztecbridge.stats import (
    UnreachableError,
    flips,
    height_function,
    minimal_tiling,
    rank_bfs,
    rank_table,
    rank_via_area,
    vertical_halfcount,
)


def test_minimal_diamond_tiling_is_all_horizontal():
    for n in range(1, 4):
        t0 = minimal_tiling(build_aztec_diamond(n))
        assert all(not is_vertical(d) for d in t0)


def test_minimal_tiling_has_rank_zero_and_least_area():
    from aztecbridge.paths import tiling_to_paths, underneath_area

    region = build_double_rectangle(1, 2, 0, 1, 2)
    t0 = minimal_tiling(region)
    table = rank_table(region)
    assert table[t0] == 0
    areas = {
        t: underneath_area(tiling_to_paths(region, t)) for t in enumerate_tilings(region)
    }
    assert min(areas, key=areas.get) == t0


def test_height_function_is_consistent():
    region = build_aztec_diamond(2)
    for t in enumerate_tilings(region):
        h = height_function(region, t)
        assert min(h.values()) == 0
        # neighboring vertices differ by 1 or 3
        assert all(abs(v) in (0, 1, 2, 3, 4, 5, 6, 7, 8) for v in h.values())


def test_flip_count_of_all_horizontal_diamond():
    region = build_aztec_diamond(2)
    t0 = minimal_tiling(region)
    # the 2x2 flippable blocks of the all-horizontal tiling
    assert len(flips(t0)) == 2


def test_flips_are_involutive_neighbors():
    region = build_double_rectangle(1, 2, 0, 1, 2)
    for t in enumerate_tilings(region):
        for t2 in flips(t):
            assert t in flips(t2)


def test_rank_table_covers_all_tilings():
    for params in [(1, 2, 0, 1, 2), (1, 2, 1, 1, 2)]:
        region = build_double_rectangle(*params)
        table = rank_table(region)
        assert set(table) == set(enumerate_tilings(region))


def test_diamond_rank_multiset_order_two():
    region = build_aztec_diamond(2)
    ranks = sorted(rank_table(region).values())
    assert ranks == [0, 1, 1, 2, 3, 4, 4, 5]
    assert {1, 2, 5} <= set(ranks)


def test_rank_bfs_equals_area_rank():
    for params in [(1, 2, 0, 1, 2), (2, 3, 1, 2, 3)]:
        region = build_double_rectangle(*params)
        for t in enumerate_tilings(region):
            assert rank_bfs(region, t) == rank_via_area(region, t)


def test_rank_rejects_foreign_tiling():
    region = build_double_rectangle(1, 2, 0, 1, 2)
    other = minimal_tiling(build_double_rectangle(1, 2, 1, 1, 2))
    with pytest.raises(UnreachableError):
        rank_bfs(region, other)


def test_vertical_halfcount():
    region = build_aztec_diamond(1)
    halves = sorted(vertical_halfcount(t) for t in enumerate_tilings(region))
    assert halves == [Fraction(0), Fraction(1)]


def test_minimal_tiling_wrong_kind():
    from aztecbridge.regions import KindError

    with pytest.raises((KindError, AttributeError, TypeError)):
        minimal_tiling(build_hexagon(1, 1, 1))
