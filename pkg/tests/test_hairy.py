from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gcx.gc_lie import GraphVector
from gcx.graph_core import OrientedGraph, complete_graph, loop_graph, single_vertex
from gcx.hairy import BASELINE, HairyComplex, sector

PAIRS = [(1, 3), (2, 4)]


@pytest.fixture(scope="module", params=PAIRS, ids=lambda p: f"m{p[0]}n{p[1]}")
def cx(request):
    return HairyComplex(*request.param)


def vec(cx, g, c=None):
    return GraphVector.from_graph(g, cx.ring.one() if c is None else c)


def test_leading_twist_terms(cx):
    z = cx.zhat0()
    half = Fraction(1, 2)
    e = cx.euler
    assert z.terms == {
        cx.graph("II", [(0, 1)]): cx.ring.const(half),
        cx.graph("IB", [(0, 1)]): cx.ring.one(),
        cx.graph("BB", [(0, 1)]): e * half,
    }
    assert cx.total_degrees(z) == {1}


@pytest.mark.parametrize("m,n", [(3, 3), (2, 3), (0, 2), (4, 2)])
def test_invalid_pairs_rejected(m, n):
    with pytest.raises(ValueError):
        HairyComplex(m, n)


def test_iota_examples(cx):
    p = cx.parity
    assert cx.iota(vec(cx, single_vertex(p))).terms == {
        cx.graph("I", []): cx.ring.one(), cx.graph("B", []): cx.ring.one()}
    assert cx.iota(GraphVector(p)).is_zero()
    k4 = cx.iota(vec(cx, complete_graph(p, 4)))
    e = cx.euler
    # colourings with k baseline vertices carry E^(k-1), times the number of such colourings
    weights = sorted(str(c) for c in k4.terms.values())
    assert weights == sorted(str(x) for x in (cx.ring.one(), 4 * cx.ring.one(), 6 * e, 4 * e ** 2, e ** 3))


def test_p1_examples(cx):
    p = cx.parity
    k4 = complete_graph(p, 4)
    mixed = OrientedGraph(p, ("I", "B", "B", "B"), k4.edges)
    assert cx.p1(vec(cx, mixed)).is_zero()
    all_b = OrientedGraph(p, ("B",) * 4, k4.edges)
    assert cx.p1(vec(cx, all_b)) == vec(cx, k4, cx.euler ** -3)


def test_homotopy_examples(cx):
    tri = vec(cx, loop_graph(cx.parity, 3))
    lhs = cx.delta0(cx.h0_prime(tri)) + cx.h0_prime(cx.delta0(tri))
    assert lhs == tri.scale(cx.euler * 3)
    only_b = vec(cx, OrientedGraph(cx.parity, ("B", "B"), ((0, 1),)))
    assert cx.h0(only_b).is_zero()
    assert cx.h0(GraphVector(cx.parity)).is_zero()


@pytest.mark.parametrize("which", ["iota", "p0", "p1"])
def test_maps_intertwine_structure(cx, which):
    rep = cx.check_morphism(which, vmax=4, emax=5)
    assert rep["graphs"] > 0
    assert rep["differential_violations"] == 0 and rep["bracket_violations"] == 0


def test_homotopy_identity_on_window(cx):
    rep = cx.check_homotopy(vmax=4, emax=5)
    assert rep["h0_prime_violations"] == 0 and rep["h0_violations"] == 0


def test_empty_window_is_trivially_fine(cx):
    rep = cx.check_morphism("iota", vmax=0, emax=0)
    assert rep["graphs"] == 0 and rep["differential_violations"] == 0


def test_sections_on_window(cx):
    for g in cx.plain_window(4, 5):
        x = vec(cx, g)
        y = cx.iota(x)
        assert cx.p0(y) == x
        assert cx.p1(y) == x


def test_degrees_are_preserved(cx):
    for g in cx.plain_window(3, 4):
        x = vec(cx, g)
        assert cx.total_degrees(cx.iota(x)) == cx.total_degrees(x)
        dx = cx.differential(cx.iota(x))
        if dx:
            assert cx.total_degrees(dx) == {d + 1 for d in cx.total_degrees(x)}


def test_graded_part_is_marking_operator(cx):
    for g in cx.colored_window(3, 4):
        x = vec(cx, g)
        assert cx.graded_part(x, cx.differential(x)) == cx.delta0(x)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(PAIRS), st.data())
def test_differential_squares_to_zero(pair, data):
    cx = HairyComplex(*pair)
    g = data.draw(st.sampled_from(cx.colored_window(3, 4)))
    x = vec(cx, g)
    assert cx.differential(cx.differential(x)).is_zero()


def test_unlocalized_ring_variant():
    cx = HairyComplex(1, 3, localized=False)
    assert cx.check_morphism("iota", vmax=3, emax=4)["differential_violations"] == 0
    assert sector(cx.graph("IB", [(0, 1)])) == BASELINE
