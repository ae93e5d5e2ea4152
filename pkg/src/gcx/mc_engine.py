"""Maurer-Cartan calculus in graph complexes with characteristic-class coefficients.

Elements are graph vectors whose coefficients live in a characteristic-class
ring.  Everything is truncated by vertex count, and optionally by the
coefficient degree so that odd-dimensional series stay finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .char_ring import CharClassRing, RingElem, RingMap, make_ring, z2_act
from .gc_lie import (GraphVector, bracket, differential, graph_degree, insert, project,
                     vector_parity)
from .graph_core import loop_order, multi_edge, tadpole


class NilpotencyError(RuntimeError):
    pass


@dataclass
class BGCElement:
    vector: GraphVector
    n: int
    ring: CharClassRing
    vmax: int | None = None

    def total_degrees(self) -> set:
        out = set()
        for g, c in self.vector.terms.items():
            for d in c.degrees():
                out.add(graph_degree(g, self.n) + d)
        return out

    def coefficient(self, g) -> RingElem:
        c = self.vector.coefficient(g)
        return c if isinstance(c, RingElem) else self.ring.const(c)

    def __str__(self) -> str:
        return "\n".join(f"{c} :: {g.encode()}" for g, c in self.vector.items()) or "0"


def top_pontryagin(n: int) -> str:
    return f"p{2 * n - 2}"


def conjectured_m(n: int, jmax: int = 3) -> BGCElement:
    """E times the tadpole for even ``n``; the odd-``n`` theta series
    ``sum_j p^j / 4^j / (2 (2j+1)!)`` over two-vertex graphs with ``2j+1``
    edges, for ``1 <= j <= jmax``."""
    ring = make_ring(f"SO({n})")
    parity = n % 2
    if parity == 0:
        vec = GraphVector.from_graph(tadpole(0), ring.gen("E"))
        return BGCElement(vec, n, ring)
    p = ring.gen(top_pontryagin(n))
    vec = GraphVector(1)
    for j in range(1, jmax + 1):
        coeff = p ** j * Fraction(1, 4 ** j * 2 * factorial(2 * j + 1))
        vec.add_graph(multi_edge(1, 2 * j + 1), coeff)
    return BGCElement(vec, n, ring)


def _cap(x: GraphVector, vmax: int | None, coeff_cap: int | None) -> GraphVector:
    out = GraphVector(x.parity)
    for g, c in x.terms.items():
        if vmax is not None and len(g.kinds) > vmax:
            continue
        if coeff_cap is not None and isinstance(c, RingElem):
            c = RingElem(c.ring, {k: v for k, v in c.terms.items()
                                  if c.monomial_degree(k) <= coeff_cap})
        if c:
            out.terms[g] = c
    return out


def half_self_bracket(x: GraphVector) -> GraphVector:
    """``(1/2)[x, x]`` for odd ``x``, which equals the insertion ``x o x``."""
    if vector_parity(x) != 1:
        return bracket(x, x).scale(Fraction(1, 2))
    return insert(x, x)


def mc_residue(x: BGCElement, vmax: int, projection: str = "gc", coeff_cap: int | None = None) -> GraphVector:
    """``dx + (1/2)[x, x]`` truncated to ``vmax`` vertices, then projected."""
    if x.vector.max_vertices() > vmax:
        raise ValueError("input exceeds the vertex bound")
    res = differential(x.vector, "fgc") + half_self_bracket(x.vector)
    return project(_cap(res, vmax, coeff_cap), projection)


def mc_report(x: BGCElement, vmax: int, coeff_cap: int | None = None) -> dict:
    raw = mc_residue(x, vmax, "fgc", coeff_cap)
    gc = mc_residue(x, vmax, "gc", coeff_cap)
    return {"raw_fgc_terms": len(raw), "gc_terms": len(gc), "raw": raw, "gc": gc}


def odd_coeff_cap(n: int, jmax: int) -> int:
    return jmax * (2 * n - 2)


def twisted_differential(m: BGCElement, x: GraphVector, vmax: int, flavor: str = "fgc") -> GraphVector:
    """``D x = dx + [m, x]`` truncated to ``vmax`` vertices."""
    out = differential(x, flavor) + project(bracket(m.vector, x), flavor)
    return _cap(out, vmax, None)


def _ad_series(nu: GraphVector, x: GraphVector, vmax: int, coeff_cap, weights) -> GraphVector:
    out = GraphVector(x.parity)
    term = x
    k = 0
    while term:
        out = out + term.scale(weights(k))
        k += 1
        if k > 4 * (vmax + 1) + (coeff_cap or 0):
            raise NilpotencyError("adjoint series did not terminate under the truncation")
        term = _cap(bracket(nu, term), vmax, coeff_cap)
    return out


def gauge(m: BGCElement, nu: GraphVector, vmax: int, coeff_cap: int | None = None) -> BGCElement:
    """``exp(ad nu)(m) - ((exp(ad nu) - 1)/ad nu)(d nu)`` truncated by vertices."""
    a = _ad_series(nu, m.vector, vmax, coeff_cap, lambda k: Fraction(1, factorial(k)))
    dnu = _cap(differential(nu, "fgc"), vmax, coeff_cap)
    b = _ad_series(nu, dnu, vmax, coeff_cap, lambda k: Fraction(1, factorial(k + 1)))
    return BGCElement(_cap(a - b, vmax, coeff_cap), m.n, m.ring, vmax)


def z2_apply(x: GraphVector) -> GraphVector:
    out = GraphVector(x.parity)
    for g, c in x.terms.items():
        c2 = z2_act(c)
        out._acc(g, c2 if loop_order(g) % 2 == 0 else -c2)
    return out


def z2_check(x) -> bool:
    """True iff the combined graph/coefficient involution fixes ``x``."""
    vec = x.vector if isinstance(x, BGCElement) else x
    return (z2_apply(vec) - vec).is_zero()


def restrict_element(x: BGCElement, ring_map: RingMap) -> BGCElement:
    vec = x.vector.map_coeffs(ring_map)
    return BGCElement(vec, x.n, ring_map.dst, x.vmax)


def restrict_vector(x: GraphVector, ring_map: RingMap) -> GraphVector:
    return x.map_coeffs(ring_map)


def ring_monomials(ring: CharClassRing, degree: int) -> list:
    """Monomials of the given cohomological degree, without inverted generators."""
    gens = [g for g in ring.generators if g.degree > 0]
    out = []

    def rec(i, left, exps):
        if left == 0:
            out.append(ring.monomial(exps))
            return
        if i == len(gens):
            return
        g = gens[i]
        for k in range(left // g.degree + 1):
            rec(i + 1, left - k * g.degree, {**exps, g.name: k} if k else exps)

    if degree >= 0:
        rec(0, degree, {})
    return out


def degree_zero_sample(n: int, vmax: int, emax: int, seed: int, terms: int = 3,
                       coeff_cap: int | None = None, flavor: str = "fgc") -> GraphVector:
    """Seeded combination of graph-times-class terms of total degree 0,
    the infinitesimal gauge parameters."""
    import random

    from .gc_lie import window_basis

    ring = make_ring(f"SO({n})")
    pool = []
    for g in window_basis(n % 2, vmax, emax, flavor):
        if len(g.kinds) < 3:
            continue  # ad would not raise the vertex count enough to terminate
        need = -graph_degree(g, n)
        if coeff_cap is not None and need > coeff_cap:
            continue
        for mono in ring_monomials(ring, need):
            pool.append((g, mono))
    rng = random.Random(seed)
    out = GraphVector(n % 2)
    for g, mono in rng.sample(pool, min(terms, len(pool))):
        out.add_graph(g, mono * Fraction(rng.randint(1, 5), rng.randint(1, 3)))
    return out
