import random
from fractions import Fraction

import pytest

from gcx.char_ring import make_ring
from gcx.gc_lie import GraphVector, bracket, graph_parity, window_basis
from gcx.graph_core import edge_graph, is_external, tadpole, theta
from gcx.graphs_cooperad import (
    ArityError, CohenAlgebra, aux_degree, cocompose, cohen_dims, cohen_poincare,
    cohomology_dims, counit, empty_graph, ext_basis, ext_differential, ext_graph, gc_act,
    hopf_product, is_internally_connected, lambda_exponent, nonformality_report, twisted_diff,
)

from oracles import arnold_dims

V = GraphVector.from_graph


def edge12(n, r=2):
    return V(ext_graph(n, r, [(0, 1)]))


def test_hopf_product_examples():
    assert hopf_product(edge12(2), edge12(2)).is_zero()
    prod = hopf_product(edge12(3), edge12(3))
    assert list(prod.terms) == [ext_graph(3, 2, [(0, 1), (0, 1)])]
    for n in (2, 3):
        assert hopf_product(edge12(n), V(empty_graph(n, 2))) == edge12(n)
    with pytest.raises(ArityError):
        hopf_product(edge12(2), V(empty_graph(2, 3)))


@pytest.mark.parametrize("n", [2, 3])
def test_cocomposition_examples(n):
    point = empty_graph(n, 1)
    out = cocompose(edge12(n), [[1], [2]])
    assert out == {(ext_graph(n, 2, [(0, 1)]), point, point): 1}
    assert cocompose(V(empty_graph(n, 2)), [[1], [2]]) == {(empty_graph(n, 2), point, point): 1}
    with pytest.raises(ValueError):
        cocompose(edge12(n), [[1]])


@pytest.mark.parametrize("n", [2, 3])
def test_counit_compatibility(n):
    # collapsing everything into one block leaves the graph itself inside
    pool = [g for i in range(2) for e in range(4) for g in ext_basis(n % 2, 3, i, e, "graphs")]
    for g in pool:
        x = V(g)
        whole = cocompose(x, [[1, 2, 3]])
        inner = GraphVector(n % 2)
        for (outer, h), c in whole.items():
            inner.add_graph(h, c * counit(V(outer)))
        assert inner == x


def test_tadpole_acts_on_tripod():
    tripod = V(ext_graph(2, 3, [(3, 0), (3, 1), (3, 2)], internal=1))
    act = gc_act(V(tadpole(0)), tripod)
    loops_at = set()
    for g in act.terms:
        for a, b in g.edges:
            if a == b:
                loops_at.add(g.kinds[a])
    assert "I" in loops_at
    inner_only = gc_act(V(tadpole(0)), tripod, internal_only=True)
    assert len(inner_only.terms) == 1
    assert gc_act(GraphVector(0), tripod).is_zero()


def test_twisted_differential_squares_to_zero():
    ring = make_ring("SO(4)")
    m = V(tadpole(0), ring.gen("E"))
    checked = 0
    for i in range(3):
        for e in range(5):
            for g in ext_basis(0, 2, i, e, "full"):
                x = V(g, ring.one())
                assert twisted_diff(m, twisted_diff(m, x, imax=4), imax=4).is_zero()
                checked += 1
    assert checked > 20


@pytest.mark.parametrize("n", [2, 3])
def test_action_is_lie(n):
    p = n % 2
    gammas = [g for g in window_basis(p, 3, 3, "fgc")]
    xs = [g for i in range(2) for e in range(3) for g in ext_basis(p, 2, i, e, "full")]
    rnd = random.Random(n)
    for _ in range(30):
        g1, g2 = V(rnd.choice(gammas)), V(rnd.choice(gammas))
        x = V(rnd.choice(xs))
        s = -1 if graph_parity(next(iter(g1.terms))) * graph_parity(next(iter(g2.terms))) else 1
        lhs = gc_act(bracket(g1, g2), x)
        rhs = gc_act(g1, gc_act(g2, x)) - gc_act(g2, gc_act(g1, x)).scale(s)
        assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
def test_differential_squares_to_zero_all_flavours(n):
    for flavor in ("graphs", "graphs2", "full"):
        for i in range(3):
            for e in range(5):
                for g in ext_basis(n % 2, 2, i, e, flavor):
                    dx = ext_differential(V(g), flavor, imax=4)
                    assert ext_differential(dx, flavor, imax=4).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_lambda_weight_shift_is_constant(n):
    shifts = set()
    for i in range(3):
        for e in range(5):
            for g in ext_basis(n % 2, 2, i, e, "graphs2"):
                for h in ext_differential(V(g), "graphs2").terms:
                    shifts.add(lambda_exponent(h) - lambda_exponent(g))
    assert shifts == {0}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cohen_examples(n):
    assert cohen_dims(n, 2) == {0: 1, n - 1: 1}
    assert sum(cohen_dims(n, 3).values()) == 6
    for r in (2, 3, 4):
        assert cohen_dims(n, r) == arnold_dims(n, r) == cohen_poincare(n, r)


@pytest.mark.parametrize("n", [2, 3])
def test_arnold_relation_reduces_to_zero(n):
    alg = CohenAlgebra(n, 4)
    for i, j, k in [(1, 2, 3), (1, 2, 4), (2, 3, 4), (3, 1, 4)]:
        assert alg.arnold(i, j, k) == {}
    assert alg.reduce([(1, 2), (1, 2)]) == {}
    assert alg.reduce([(2, 1)]) == {((1, 2),): (-1) ** n}


def test_gravity_dims_even_only():
    assert CohenAlgebra(2, 3).gravity_dims()
    with pytest.raises(ValueError):
        CohenAlgebra(3, 3).gravity_dims()


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_window_matches_cohen(n, r):
    assert cohomology_dims(n, r, 2, kmax=r)["dims"] == cohen_dims(n, r)


def test_auxiliary_degree_examples():
    assert aux_degree(ext_graph(3, 3, [(3, 0), (3, 1), (3, 2)], internal=1)) == 0
    assert aux_degree(ext_graph(3, 2, [(0, 1)])) == 0
    two = ext_graph(3, 3, [(3, 4), (3, 0), (3, 1), (4, 1), (4, 2)], internal=2)
    assert aux_degree(two) == 0
    with pytest.raises(ValueError):
        aux_degree(ext_graph(3, 3, [(0, 1), (1, 2)]))


@pytest.mark.parametrize("n", [2, 3])
def test_differential_raises_auxiliary_degree(n):
    checked = 0
    for r in (2, 3):
        for i in range(3):
            for e in range(6):
                for g in ext_basis(n % 2, r, i, e, "graphs"):
                    if not is_internally_connected(g):
                        continue
                    for h in ext_differential(V(g), "graphs").terms:
                        if is_internally_connected(h):
                            assert aux_degree(h) == aux_degree(g) + 1
                            checked += 1
    assert checked


def test_nonformality_report():
    rep = nonformality_report(3)
    assert rep["weight3_dims"][1] == 3
    assert rep["arity2_orbits"] == 7
    assert rep["obstruction"] is True and rep["arity3"]["target_in_image"] is False
    assert len(rep["arity3"]["tripod_boundary"]) == 3
    with pytest.raises(ValueError):
        nonformality_report(4)


def test_external_labels_stay_put_under_action():
    for g in gc_act(V(edge_graph(1), Fraction(1, 2)), edge12(3, 3)).terms:
        labels = sorted(k for k in g.kinds if is_external(k))
        assert labels == ["E1", "E2", "E3"]
