"""Acceptance suite: one or more tests per numbered criterion.

The terminal summary prints one PASS/FAIL line per criterion (see conftest).
"""

import random
from fractions import Fraction

import pytest

from gcx.cartan_forms import build_propagator, d_u, euler_term, lemma_value, north_pole, \
    substitute_normalization, EqForm
from gcx.char_ring import make_ring, restrict, restriction_map
from gcx.dk_operad import evaluate, graded_dim, relations, verify
from gcx.gc_lie import (
    GraphVector, differential, jacobi_residue, leibniz_residue, loop_class_report,
    sample_graphs, very_loopy_quotient_window, window_basis,
)
from gcx.graph_core import canonical_form, multi_edge, tadpole, theta
from gcx.graphs_cooperad import (
    aux_degree, cohen_dims, cohomology_dims, ext_basis, ext_differential,
    is_internally_connected, nonformality_report,
)
from gcx.hairy import HairyComplex
from gcx.mc_engine import conjectured_m, mc_report, mc_residue, odd_coeff_cap, z2_check

from oracles import arnold_dims, dk_quotient_dim

V = GraphVector.from_graph
FLAVORS = ("fgc", "gc2", "gc")


@pytest.mark.criterion(1)
def test_sign_convention_triple():
    assert not canonical_form(theta(1)).is_zero
    assert canonical_form(multi_edge(0, 2)).is_zero
    assert canonical_form(tadpole(1)).is_zero
    assert not canonical_form(tadpole(0)).is_zero


@pytest.mark.criterion(2)
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("flavor", FLAVORS)
def test_differential_squares_to_zero(n, flavor):
    pool = window_basis(n % 2, 6, 8, flavor)
    assert pool
    bad = [g.encode() for g in pool
           if not differential(differential(V(g), flavor), flavor).is_zero()]
    assert bad == []


@pytest.mark.criterion(2)
@pytest.mark.parametrize("n", [2, 3])
def test_jacobi_and_leibniz_samples(n):
    p = n % 2
    rnd = random.Random(2024 + n)
    triples = [sample_graphs(p, 3, rnd.randrange(10 ** 9), vmax=3, emax=4) for _ in range(100)]
    for a, b, c in triples:
        assert jacobi_residue(V(a), V(b), V(c)).is_zero(), (a.encode(), b.encode(), c.encode())
        assert leibniz_residue(V(a), V(b)).is_zero(), (a.encode(), b.encode())


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n,r", [(2, 3), (3, 5)])
def test_loop_classes_as_stated(n, r):
    # fails by design: these loops vanish by symmetry, see the decisions ledger
    assert r % 4 == (2 * n - 1) % 4
    rep = loop_class_report(n, r)
    assert rep["degree"] == r - n
    assert rep["nonzero"] and rep["closed"] and not rep["exact"]


@pytest.mark.criterion(4)
def test_maurer_cartan_residues():
    assert mc_residue(conjectured_m(4), 4, "fgc").is_zero()
    m = conjectured_m(3)
    rep = mc_report(m, 4, coeff_cap=odd_coeff_cap(3, 3))
    assert rep["gc"].is_zero()
    assert "raw_fgc_terms" in rep
    assert m.coefficient(theta(1)) == m.ring.gen("p4") * Fraction(1, 48)


@pytest.mark.criterion(5)
@pytest.mark.parametrize("n", [3, 4])
def test_z2_invariance(n):
    assert z2_check(conjectured_m(n))


@pytest.mark.criterion(6)
@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_restriction_images(n):
    src, dst = make_ring(f"SO({n})"), make_ring(f"SO(2)xSO({n - 2})")
    u, e_low = dst.gen("u"), dst.gen("E")
    low = dst.one() if n == 4 else dst.gen(f"p{2 * n - 8}")
    f = restriction_map(n, "2,n-2")
    assert f(src.gen("E")) == u * e_low
    assert f(src.gen(f"p{2 * n - 4}")) == u ** 2 * low + e_low ** 2


@pytest.mark.criterion(6)
@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_restriction_images(n):
    src, dst = make_ring(f"SO({n})"), make_ring(f"SO(2)xSO({n - 2})")
    low = dst.one() if n == 3 else dst.gen(f"p{2 * n - 6}")
    top = src.gen(f"p{2 * n - 2}")
    assert restrict(top, n, "2,n-2") == dst.gen("u") ** 2 * low
    assert restrict(top, n, "n-1") == make_ring(f"SO({n - 1})").gen("E") ** 2


@pytest.mark.criterion(6)
def test_restriction_is_degree_preserving_ring_map():
    rnd = random.Random(6)
    maps = [restriction_map(n, "2,n-2") for n in range(3, 9)] + [restriction_map(n, "n-1") for n in range(3, 9)]

    def mono(ring):
        exps = {g.name: rnd.randint(0, 3) for g in ring.generators}
        return ring.monomial(exps, Fraction(rnd.randint(1, 5), rnd.randint(1, 3)))

    for _ in range(100):
        f = rnd.choice(maps)
        a, b = mono(f.src), mono(f.src)
        assert f(a * b) == f(a) * f(b)
        assert f(a + b) == f(a) + f(b)
        if f(a):
            assert f(a).degrees() == a.degrees()


@pytest.mark.criterion(7)
@pytest.mark.parametrize("m,n", [(1, 3), (2, 4)])
def test_path_object(m, n):
    cx = HairyComplex(m, n)
    for g in cx.plain_window(4, 6):
        x = V(g, cx.ring.one())
        assert cx.p0(cx.iota(x)) == x and cx.p1(cx.iota(x)) == x
    for which in ("iota", "p0", "p1"):
        rep = cx.check_morphism(which, vmax=4, emax=5)
        assert rep["differential_violations"] == 0 and rep["bracket_violations"] == 0
    hom = cx.check_homotopy(vmax=4, emax=5)
    assert hom["h0_prime_violations"] == 0


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_dk_relations_vanish(n):
    for r in range(2, 6):
        for rel in relations(r, framed_n=n):
            assert evaluate(rel, r, n).is_zero()


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n,framed", [(2, False), (3, False), (3, True), (4, True)])
def test_dk_operad_axioms(n, framed):
    rep = verify(n, arity=4, maxlen=3, framed=framed)
    assert rep["ok"]
    assert not rep["relation_failures"] and not rep["well_definedness_failures"]
    assert rep["associativity_failures"] == 0 and rep["equivariance_failures"] == 0


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n", [2, 3])
def test_dk_dimensions_against_quotient(n):
    for r in range(2, 5):
        for length in range(1, 4):
            assert graded_dim(r, n, length) == dk_quotient_dim(r, n, length)


@pytest.mark.criterion(9)
def test_nonformality_obstruction():
    rep = nonformality_report(3)
    assert rep["weight3_dims"][1] == 3
    assert rep["arity2_orbits"] == 7
    assert rep["arity3"]["target_in_image"] is False and rep["obstruction"] is True


@pytest.mark.criterion(10)
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_propagator_identity(n):
    expected = EqForm(n) if n % 2 else euler_term(n)
    assert d_u(build_propagator(n)) == expected


@pytest.mark.criterion(10)
def test_north_pole_value():
    value = north_pole(build_propagator(3))
    assert substitute_normalization(value) == [lemma_value(3)]
    assert str(lemma_value(3)) == "1/4*pi^-1*u1"


@pytest.mark.criterion(11)
def test_very_loopy_quotient():
    rows = very_loopy_quotient_window(3, 5)
    odd = [r for r in rows if r["dim"] and r["degree"] % 2]
    assert [r["dim"] for r in odd] == [1]
    assert odd[0]["reps"][0].terms == {theta(1): 1}


@pytest.mark.criterion(12)
@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 2)])
def test_graphs_window_matches_cohen(n, r):
    expected = cohen_dims(n, r)
    assert expected == arnold_dims(n, r)
    assert cohomology_dims(n, r, 2, kmax=r)["dims"] == expected


@pytest.mark.criterion(12)
@pytest.mark.parametrize("n", [2, 3])
def test_auxiliary_degree_rises_by_one(n):
    checked = 0
    for r in (2, 3):
        for i in range(3):
            for e in range(7):
                for g in ext_basis(n % 2, r, i, e, "graphs"):
                    if not is_internally_connected(g):
                        continue
                    for h in ext_differential(V(g), "graphs").terms:
                        if is_internally_connected(h):
                            assert aux_degree(h) == aux_degree(g) + 1
                            checked += 1
    assert checked
