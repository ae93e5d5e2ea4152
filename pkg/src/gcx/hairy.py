"""Two-coloured graphs: ordinary vertices ``I`` plus baseline vertices ``B``.

A colored graph with no ``B`` vertex lives in the plain summand (connected
graphs without valence condition); any ``B`` vertex puts it in the baseline
summand.  Plain graphs act by insertion into ``I`` vertices, baseline graphs
compose by insertion into ``B`` vertices.

Normalisation: the map from plain graphs weights a colouring with ``k >= 1``
baseline vertices by ``E^(k-1)``.  This is what makes it a Lie morphism and
keeps every term homogeneous; the leading twisting element is the image of
the half edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .char_ring import CharClassRing, RingElem, make_ring
from .gc_lie import GraphVector, basis, graph_parity, insert_terms
from .graph_core import OrientedGraph, degree, is_external

PLAIN, BASELINE = "plain", "baseline"


def sector(g: OrientedGraph) -> str:
    return BASELINE if "B" in g.kinds else PLAIN


@dataclass
class HairyComplex:
    """Colored graph complex for a pair ``(m, n)`` with ``n - m`` even and positive."""

    m: int
    n: int
    localized: bool = True
    ring: CharClassRing = field(init=False)

    def __post_init__(self):
        if self.m < 1 or self.n <= self.m or (self.n - self.m) % 2:
            raise ValueError(f"need 1 <= m < n with n - m even, got ({self.m}, {self.n})")
        self.ring = make_ring(f"SO({self.m})xSO({self.n - self.m})",
                              localized=("E",) if self.localized else ())
        self.parity = self.n % 2

    # ------------------------------------------------------------ basics

    @property
    def euler(self) -> RingElem:
        return self.ring.gen("E")

    def graph(self, kinds, edges) -> OrientedGraph:
        return OrientedGraph(self.parity, tuple(kinds), tuple(tuple(e) for e in edges))

    def degree(self, g: OrientedGraph) -> int:
        if sector(g) == PLAIN:
            return degree(g, self.n)
        return degree(g, self.n, "baseline", self.m)

    def total_degrees(self, x: GraphVector) -> set:
        out = set()
        for g, c in x.terms.items():
            cdeg = c.degrees() if isinstance(c, RingElem) else {0}
            out |= {self.degree(g) + d for d in cdeg}
        return out

    def vector(self, pairs=()) -> GraphVector:
        x = GraphVector(self.parity)
        for g, c in pairs:
            x.add_graph(g, c)
        return x

    # ------------------------------------------------------------ Lie structure

    def insert(self, a: GraphVector, b: GraphVector) -> GraphVector:
        out = GraphVector(self.parity)
        for g1, c1 in a.terms.items():
            for g2, c2 in b.terms.items():
                target = "B" if sector(g2) == BASELINE else "I"
                c = c1 * c2
                for v, kind in enumerate(g1.kinds):
                    if kind != target:
                        continue
                    for h, s in insert_terms(g1, v, g2):
                        out.add_graph(h, c if s > 0 else -c)
        return out

    def bracket(self, a: GraphVector, b: GraphVector) -> GraphVector:
        out = GraphVector(self.parity)
        for g1, c1 in a.terms.items():
            for g2, c2 in b.terms.items():
                x = GraphVector.from_graph(g1, c1)
                y = GraphVector.from_graph(g2, c2)
                s = -1 if graph_parity(g1) * graph_parity(g2) else 1
                out = out + self.insert(x, y) - self.insert(y, x).scale(s)
        return out

    def zhat0(self) -> GraphVector:
        """Leading twisting element: half ``I-I``, ``I-B``, ``E/2`` times ``B-B``.

        The coefficients are those of the drawn pictures divided by their
        automorphism counts.
        """
        half = Fraction(1, 2)
        return self.vector([
            (self.graph("II", [(0, 1)]), self.ring.const(half)),
            (self.graph("IB", [(0, 1)]), self.ring.one()),
            (self.graph("BB", [(0, 1)]), self.euler * half),
        ])

    def differential(self, x: GraphVector) -> GraphVector:
        """Twisted differential ``[zhat0, x]``."""
        return self.bracket(self.zhat0(), x)

    # ------------------------------------------------------------ path-object maps

    def iota(self, x: GraphVector) -> GraphVector:
        out = GraphVector(self.parity)
        e = self.euler
        for g, c in x.terms.items():
            verts = [i for i, k in enumerate(g.kinds) if k == "I"]
            for k in range(len(verts) + 1):
                w = c if k == 0 else c * e ** (k - 1)
                for subset in combinations(verts, k):
                    kinds = tuple("B" if i in subset else kd for i, kd in enumerate(g.kinds))
                    out.add_graph(OrientedGraph(g.parity, kinds, g.edges), w)
        return out

    def p0(self, x: GraphVector) -> GraphVector:
        return x.filter(lambda g: sector(g) == PLAIN)

    def p1(self, x: GraphVector) -> GraphVector:
        out = GraphVector(self.parity)
        e = self.euler
        for g, c in x.terms.items():
            if "I" in g.kinds or "B" not in g.kinds:
                continue
            k = g.count_kind("B")
            kinds = tuple("I" if kd == "B" else kd for kd in g.kinds)
            out.add_graph(OrientedGraph(g.parity, kinds, g.edges), c * e ** (1 - k))
        return out

    # ------------------------------------------------------------ associated graded

    def _markings(self, g: OrientedGraph) -> list:
        val = g.valences()
        out = []
        for w, kind in enumerate(g.kinds):
            if kind != "B" or val[w] != 1:
                continue
            i = next(i for i, (a, b) in enumerate(g.edges) if w in (a, b))
            a, b = g.edges[i]
            other = b if a == w else a
            if other != w and g.kinds[other] == "I":
                out.append((w, i))
        return out

    def _add_marking(self, g: OrientedGraph, v: int) -> OrientedGraph:
        nv = len(g.kinds)
        return OrientedGraph(g.parity, g.kinds + ("B",), g.edges + ((v, nv),))

    def _remove_marking(self, g: OrientedGraph, w: int, i: int) -> tuple:
        """Graph without the marking ``w`` (attached by edge ``i``) and the
        sign of first moving it to the end in standard orientation."""
        if g.parity == 1:
            after = sum(1 for u in range(w + 1, len(g.kinds)) if not is_external(g.kinds[u]))
            sign = -1 if after % 2 else 1
            if g.edges[i][0] == w:
                sign = -sign
        else:
            sign = -1 if (len(g.edges) - 1 - i) % 2 else 1
        kinds = g.kinds[:w] + g.kinds[w + 1:]
        shift = lambda u: u if u < w else u - 1
        edges = tuple((shift(a), shift(b)) for j, (a, b) in enumerate(g.edges) if j != i)
        return OrientedGraph(g.parity, kinds, edges), sign

    def delta0(self, x: GraphVector) -> GraphVector:
        """Add one marking at a type ``I`` vertex; weight ``E`` on baseline
        graphs, Koszul sign of the source degree."""
        out = GraphVector(self.parity)
        for g, c in x.terms.items():
            w = c * self.euler if sector(g) == BASELINE else c
            if graph_parity(g):
                w = -w
            for v, kind in enumerate(g.kinds):
                if kind == "I":
                    out.add_graph(self._add_marking(g, v), w)
        return out

    def h0_prime(self, x: GraphVector) -> GraphVector:
        """Remove one marking; weight ``E`` when the result is plain."""
        out = GraphVector(self.parity)
        for g, c in x.terms.items():
            for w, i in self._markings(g):
                h, s = self._remove_marking(g, w, i)
                coeff = c if sector(h) == BASELINE else c * self.euler
                if graph_parity(h):
                    s = -s
                out.add_graph(h, coeff if s > 0 else -coeff)
        return out

    def h0(self, x: GraphVector) -> GraphVector:
        out = GraphVector(self.parity)
        for g, c in x.terms.items():
            k = g.count_kind("I")
            if k == 0:
                continue
            y = self.h0_prime(GraphVector.from_graph(g, c))
            out = out + y.scale(self.euler.inverse() * Fraction(1, k))
        return out

    def pi(self, x: GraphVector) -> GraphVector:
        """Projection onto graphs without type ``I`` vertices."""
        return x.filter(lambda g: "I" not in g.kinds)

    def filtration_count(self, g: OrientedGraph) -> int:
        """Edges plus vertices, not counting markings and their edges.

        Doubled and shifted by the number of type ``I`` vertices, so that
        turning a baseline vertex into a marked ``I`` vertex raises it too.
        """
        count = len(g.kinds) + len(g.edges) - 2 * len(self._markings(g))
        return 2 * count + g.count_kind("I")

    def graded_part(self, x: GraphVector, dx: GraphVector) -> GraphVector:
        """Terms of ``dx`` that keep the filtration count of the homogeneous ``x``."""
        counts = {self.filtration_count(g) for g in x.terms}
        if len(counts) > 1:
            raise ValueError("input is not homogeneous for the filtration")
        level = counts.pop() if counts else 0
        return dx.filter(lambda g: self.filtration_count(g) == level)

    # ------------------------------------------------------------ windows and checks

    def plain_window(self, vmax: int, emax: int) -> list:
        return [g for v in range(1, vmax + 1) for e in range(emax + 1)
                for g in basis(self.parity, v, e, "fgc")]

    def colored_window(self, vmax: int, emax: int) -> list:
        seen = set()
        for g in self.plain_window(vmax, emax):
            seen.update(self.iota(GraphVector.from_graph(g, 1)).terms)
        return sorted(seen, key=lambda g: (len(g.kinds), len(g.edges), g.kinds, g.edges))

    def check_morphism(self, which: str, vmax: int = 4, emax: int = 5, pairs: int | None = None) -> dict:
        """Exact check that ``which`` intertwines differentials and brackets."""
        from .gc_lie import bracket as plain_bracket, differential as plain_diff

        dplain = lambda x: plain_diff(x, "fgc")
        if which == "iota":
            src = self.plain_window(vmax, emax)
            fmap, dsrc, dtgt = self.iota, dplain, self.differential
            bsrc, btgt = plain_bracket, self.bracket
        elif which in ("p0", "p1"):
            src = self.colored_window(vmax, emax)
            fmap = self.p0 if which == "p0" else self.p1
            dsrc, dtgt = self.differential, dplain
            bsrc, btgt = self.bracket, plain_bracket
        else:
            raise ValueError(f"unknown map {which!r}")
        diff_fail = []
        for g in src:
            x = GraphVector.from_graph(g, 1)
            lhs = fmap(dsrc(x))
            rhs = dtgt(fmap(x))
            if lhs != rhs:
                diff_fail.append(g.encode())
        small = [g for g in src if len(g.kinds) <= max(1, vmax // 2)]
        if pairs is not None:
            small = small[:pairs]
        br_fail = []
        for g1 in small:
            for g2 in small:
                x = GraphVector.from_graph(g1, 1)
                y = GraphVector.from_graph(g2, 1)
                if fmap(bsrc(x, y)) != btgt(fmap(x), fmap(y)):
                    br_fail.append((g1.encode(), g2.encode()))
        return {"map": which, "m": self.m, "n": self.n, "graphs": len(src),
                "pairs": len(small) ** 2, "differential_violations": len(diff_fail),
                "bracket_violations": len(br_fail), "examples": (diff_fail + br_fail)[:5]}

    def check_homotopy(self, vmax: int = 4, emax: int = 5) -> dict:
        """``delta0 h0' + h0' delta0 = (#I) E`` and ``delta0 h0 + h0 delta0 = id - pi``."""
        bad_prime, bad_h = [], []
        for g in self.colored_window(vmax, emax):
            x = GraphVector.from_graph(g, self.ring.one())
            lhs = self.delta0(self.h0_prime(x)) + self.h0_prime(self.delta0(x))
            if lhs != x.scale(self.euler * g.count_kind("I")):
                bad_prime.append(g.encode())
            lhs = self.delta0(self.h0(x)) + self.h0(self.delta0(x))
            if lhs != x - self.pi(x):
                bad_h.append(g.encode())
        return {"h0_prime_violations": len(bad_prime), "h0_violations": len(bad_h),
                "examples": (bad_prime + bad_h)[:5]}
