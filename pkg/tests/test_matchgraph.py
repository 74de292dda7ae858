"""Matching sums, the domino weight scheme, and the rewrite lemmas."""

import random
from fractions import Fraction

import pytest

from aztecbridge.engine import CapacityError, count_tilings
from aztecbridge.matchgraph import (
    RECT_ANCHOR_PARITY,
    WeightScheme,
    WeightedGraph,
    ar_graph,
    ar_reduce,
    connected_sum,
    domino_weight,
    dual_graph,
    half_ar_graph,
    matching_genfun,
    spider_reduce,
    star_scale,
    vertex_split,
)
from aztecbridge.regions import (
    build_aztec_diamond,
    build_aztec_rectangle,
    build_double_rectangle,
)

rng = random.Random(5)


def rq() -> Fraction:
    while True:
        v = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        if v:
            return v


def random_host(marked: int, partners: int) -> WeightedGraph:
    ms = [("m", i) for i in range(marked)]
    ps = [("p", j) for j in range(partners)]
    edges = [
        (u, v, rq()) for u in ms for v in ps if rng.random() < 0.85
    ]
    return WeightedGraph(ms + ps, edges, ms)


def test_order_one_diamond_graph_is_a_four_cycle():
    g = dual_graph(build_aztec_diamond(1))
    assert len(g.vertices) == 4 and len(g.edges) == 4
    assert all(len(g.neighbors(v)) == 2 for v in g.vertices)
    assert matching_genfun(g) == 2


def test_unweighted_matching_sum_counts_tilings():
    for region in [
        build_aztec_diamond(2),
        build_double_rectangle(1, 2, 0, 1, 2),
        build_double_rectangle(1, 2, 1, 1, 2),
    ]:
        assert matching_genfun(dual_graph(region)) == count_tilings(region)


def test_weight_scheme_uses_all_four_classes():
    region = build_double_rectangle(1, 2, 0, 1, 2)
    scheme = WeightScheme(*(Fraction(v) for v in (2, 3, 5, 7, 11)))
    g = dual_graph(region, scheme)
    weights = set(g.edges.values())
    assert Fraction(2) in weights and Fraction(3) in weights  # plain classes
    assert any(w % 5 == 0 for w in weights)  # graded horizontal
    assert any(w % 7 == 0 for w in weights)  # graded vertical


def test_domino_weight_levels():
    region = build_aztec_rectangle(2, 3)
    scheme = WeightScheme(Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(3))
    g = dual_graph(region, scheme, RECT_ANCHOR_PARITY)
    # graded verticals at level L carry q^L; the top graded level must exceed 1
    powers = {w for w in g.edges.values() if w != 1}
    assert powers and all(w.denominator <= 3 for w in powers)


def test_marked_fringe_ordering():
    g = dual_graph(build_aztec_rectangle(2, 4))
    diag = {v.y - v.x for v in g.marked}
    assert len(diag) == 1
    xs = [v.x + v.y for v in g.marked]
    assert xs == sorted(xs)
    assert len(g.marked) == 4


def test_capacity_bound():
    with pytest.raises(CapacityError):
        matching_genfun(dual_graph(build_aztec_diamond(5)))


def test_vertex_split_preserves_matching_sum():
    for _ in range(20):
        side = rng.randint(2, 4)
        g = random_host(side, side)
        v = g.vertices[0]
        part = [u for u in g.neighbors(v) if rng.random() < 0.5]
        assert matching_genfun(vertex_split(g, v, part)) == matching_genfun(g)


def test_star_scale_scales_matching_sum():
    for _ in range(20):
        side = rng.randint(2, 4)
        g = random_host(side, side)
        factor = abs(rq())
        assert matching_genfun(star_scale(g, g.vertices[0], factor)) == factor * matching_genfun(g)


def _spider_wheel():
    inner = [("i", j) for j in range(4)]
    tips = [("t", j) for j in range(4)]
    outer = [("o", j) for j in range(4)]
    edges = [(inner[j], inner[(j + 1) % 4], abs(rq())) for j in range(4)]
    edges += [(inner[j], tips[j], Fraction(1)) for j in range(4)]
    edges += [(tips[j], outer[j], rq()) for j in range(4)]
    edges += [(outer[0], outer[1], rq()), (outer[2], outer[3], rq())]
    return WeightedGraph(inner + tips + outer, edges), tuple(inner)


def test_spider_reduce_factors_out_delta():
    for _ in range(20):
        g, inner = _spider_wheel()
        reduced, delta = spider_reduce(g, inner)
        assert matching_genfun(g) == delta * matching_genfun(reduced)
        assert len(reduced.vertices) == len(g.vertices) - 4


def test_half_graph_shape():
    scheme = WeightScheme(*(Fraction(v) for v in (1, 1, 1, 1, 2)))
    h = half_ar_graph(2, 3, scheme)
    assert len(h.marked) == 3  # one pendant per exposed diagonal vertex
    assert all(len(h.neighbors(p)) == 1 for p in h.marked)


def test_rectangle_reduction_identity():
    for _ in range(12):
        m = rng.randint(1, 2)
        n = rng.randint(m + 1, 3)
        scheme = WeightScheme(*(abs(rq()) for _ in range(5)))
        host = random_host(n, n - m)
        whole = connected_sum(host, ar_graph(m, n, scheme))
        trimmed, factor = ar_reduce(host, m, n, scheme)
        assert factor == (scheme.a * scheme.d + scheme.b * scheme.c) ** m * scheme.q ** (
            m * (n - 1) + m * (m - 1) // 2
        )
        assert matching_genfun(whole) == factor * matching_genfun(trimmed)


def test_connected_sum_marker_mismatch():
    with pytest.raises(ValueError):
        connected_sum(random_host(2, 2), random_host(3, 3))


def test_graph_json_round_trip_fields():
    g = dual_graph(build_aztec_diamond(1))
    obj = g.to_json_obj()
    assert obj["vertices"] == 4
    assert len(obj["edges"]) == 4
    assert all(isinstance(w, str) for _, _, w in obj["edges"])
