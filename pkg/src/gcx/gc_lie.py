"""Graph complexes as dg Lie algebras: insertion, bracket, differential.

Elements are :class:`GraphVector` values, finite sums of canonical graphs
with rational or ring coefficients.  The bracket is the graded commutator of
the pre-Lie insertion product and the differential is the bracket with half
the single edge, projected to the chosen flavour.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .graph_core import (OrientedGraph, canonical_form, edge_graph, iso_key, is_connected,
                         is_external, loop_graph, loop_order, min_internal_valence)
from .linalg_exact import SparseMatrix, rank, solve_in_image

FLAVORS = ("fgc", "gc2", "gc")


class WindowOverflow(RuntimeError):
    """Raised when a requested enumeration window is too large."""


def _is_zero(c) -> bool:
    return not c


class GraphVector:
    """Finite formal sum ``{canonical graph: coefficient}``."""

    __slots__ = ("parity", "terms")

    def __init__(self, parity: int, terms=None):
        self.parity = parity % 2
        self.terms = {}
        if terms:
            for g, c in terms.items():
                self.add_graph(g, c)

    @classmethod
    def from_graph(cls, g: OrientedGraph, coeff=1) -> "GraphVector":
        v = cls(g.parity)
        v.add_graph(g, coeff)
        return v

    def add_graph(self, g: OrientedGraph, coeff) -> None:
        """Accumulate ``coeff * g`` after canonicalisation."""
        if _is_zero(coeff):
            return
        cf = canonical_form(g)
        if cf.is_zero:
            return
        self._acc(cf.graph, coeff * cf.sign if cf.sign < 0 else coeff)

    def _acc(self, key: OrientedGraph, coeff) -> None:
        old = self.terms.get(key)
        new = coeff if old is None else old + coeff
        if _is_zero(new):
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def copy(self) -> "GraphVector":
        v = GraphVector(self.parity)
        v.terms = dict(self.terms)
        return v

    def __add__(self, other: "GraphVector") -> "GraphVector":
        _same_parity(self, other)
        out = self.copy()
        for g, c in other.terms.items():
            out._acc(g, c)
        return out

    def __sub__(self, other: "GraphVector") -> "GraphVector":
        return self + other.scale(-1)

    def __neg__(self) -> "GraphVector":
        return self.scale(-1)

    def scale(self, c) -> "GraphVector":
        out = GraphVector(self.parity)
        for g, x in self.terms.items():
            y = x * c
            if not _is_zero(y):
                out.terms[g] = y
        return out

    __mul__ = scale

    def __rmul__(self, c) -> "GraphVector":
        out = GraphVector(self.parity)
        for g, x in self.terms.items():
            y = c * x
            if not _is_zero(y):
                out.terms[g] = y
        return out

    def map_coeffs(self, fn) -> "GraphVector":
        out = GraphVector(self.parity)
        for g, x in self.terms.items():
            out._acc(g, fn(x))
        return out

    def filter(self, pred) -> "GraphVector":
        out = GraphVector(self.parity)
        out.terms = {g: c for g, c in self.terms.items() if pred(g)}
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, GraphVector):
            return NotImplemented
        return self.parity == other.parity and (self - other).is_zero()

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: graph_sort_key(kv[0]))

    def coefficient(self, g: OrientedGraph):
        cf = canonical_form(g)
        if cf.is_zero:
            return 0
        return self.terms.get(cf.graph, 0) * cf.sign

    def max_vertices(self) -> int:
        return max((len(g.kinds) for g in self.terms), default=0)

    def truncate(self, vmax: int) -> "GraphVector":
        return self.filter(lambda g: len(g.kinds) <= vmax)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*[{g.encode()}]" for g, c in self.items())
        return f"GraphVector(p={self.parity}: {body or '0'})"


def graph_sort_key(g: OrientedGraph):
    return (len(g.kinds), len(g.edges), g.kinds, g.edges)


def _same_parity(a: GraphVector, b: GraphVector) -> None:
    if a.parity != b.parity:
        raise ValueError("parity mismatch")


# ---------------------------------------------------------------- degrees

def graph_parity(g: OrientedGraph) -> int:
    """Degree mod 2 of a graph in the deformation-complex grading."""
    if g.parity == 0:
        return len(g.edges) % 2
    ordered = sum(1 for k in g.kinds if not is_external(k))
    return (ordered - 1) % 2


def vector_parity(x: GraphVector) -> int:
    ps = {graph_parity(g) for g in x.terms}
    if len(ps) > 1:
        raise ValueError("vector has mixed parity")
    return ps.pop() if ps else 0


# ---------------------------------------------------------------- insertion

def insert_terms(g1: OrientedGraph, v: int, g2: OrientedGraph, attach=None, kinds2=None):
    """Raw terms of inserting ``g2`` at vertex ``v`` of ``g1``.

    Every half-edge at ``v`` is reconnected to a vertex of ``g2`` drawn from
    ``attach`` (default: all).  ``kinds2`` overrides the kinds of the
    inserted vertices.  Yields ``(graph, sign)``; the roster is ``g1`` minus
    ``v`` followed by ``g2``.
    """
    n1 = len(g1.kinds)
    kinds = g1.kinds[:v] + g1.kinds[v + 1:] + (tuple(kinds2) if kinds2 else g2.kinds)
    off = n1 - 1
    shift = lambda w: w if w < v else w - 1
    targets = list(range(len(g2.kinds))) if attach is None else list(attach)
    slots = []
    for i, (a, b) in enumerate(g1.edges):
        if a == v:
            slots.append((i, 0))
        if b == v:
            slots.append((i, 1))
    g2_edges = [(a + off, b + off) for a, b in g2.edges]
    sign = 1
    if g1.parity == 1 and not is_external(g1.kinds[v]):
        after = sum(1 for w in range(v + 1, n1) if not is_external(g1.kinds[w]))
        sign = -1 if after % 2 else 1
    for choice in product(targets, repeat=len(slots)):
        ends = [[shift(a) if a != v else None, shift(b) if b != v else None] for a, b in g1.edges]
        for (i, side), t in zip(slots, choice):
            ends[i][side] = t + off
        edges = tuple(tuple(e) for e in ends) + tuple(g2_edges)
        yield OrientedGraph(g1.parity, kinds, edges), sign


def insert(a: GraphVector, b: GraphVector, at=None) -> GraphVector:
    """Pre-Lie product: insert ``b`` into the vertices of ``a``.

    ``at`` restricts the receiving vertices by kind (default: internal).
    """
    _same_parity(a, b)
    out = GraphVector(a.parity)
    at = ("I",) if at is None else at
    for g1, c1 in a.terms.items():
        for g2, c2 in b.terms.items():
            c = c1 * c2
            for v, kind in enumerate(g1.kinds):
                if kind not in at:
                    continue
                for h, s in insert_terms(g1, v, g2):
                    out.add_graph(h, c if s > 0 else -c)
    return out


def bracket(a: GraphVector, b: GraphVector) -> GraphVector:
    _same_parity(a, b)
    out = GraphVector(a.parity)
    for g1, c1 in a.terms.items():
        for g2, c2 in b.terms.items():
            x = GraphVector.from_graph(g1, c1)
            y = GraphVector.from_graph(g2, c2)
            s = -1 if graph_parity(g1) * graph_parity(g2) else 1
            out = out + insert(x, y) - insert(y, x).scale(s)
    return out


# ---------------------------------------------------------------- flavours

def in_flavor(g: OrientedGraph, flavor: str) -> bool:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if not is_connected(g):
        return False
    if flavor == "fgc":
        return True
    mv = min_internal_valence(g)
    if mv is None:
        return True
    return mv >= (2 if flavor == "gc2" else 3)


def project(x: GraphVector, flavor: str) -> GraphVector:
    return x.filter(lambda g: in_flavor(g, flavor))


_HALF = Fraction(1, 2)


def splitting_generator(parity: int) -> GraphVector:
    """Half the single edge: its adjoint action splits each vertex once per
    unordered splitting."""
    return GraphVector.from_graph(edge_graph(parity), _HALF)


_DELTA_CACHE = {}


def _delta_graph(g: OrientedGraph) -> dict:
    hit = _DELTA_CACHE.get(g)
    if hit is None:
        x = GraphVector(g.parity)
        x.terms[g] = Fraction(1)
        hit = bracket(splitting_generator(g.parity), x).terms
        _DELTA_CACHE[g] = hit
    return hit


def differential(x: GraphVector, flavor: str = "fgc") -> GraphVector:
    """Vertex-splitting differential, projected to ``flavor``."""
    out = GraphVector(x.parity)
    for g, c in x.terms.items():
        for h, d in _delta_graph(g).items():
            if in_flavor(h, flavor):
                out._acc(h, c * d)
    return out


def z2_graph_act(x: GraphVector) -> GraphVector:
    """Multiply each graph by ``(-1)^(loop order)``."""
    out = GraphVector(x.parity)
    out.terms = {g: (c if loop_order(g) % 2 == 0 else -c) for g, c in x.terms.items()}
    return out


# ---------------------------------------------------------------- enumeration

_CLASSES = {}


def _extend(g: OrientedGraph, a: int, b: int) -> OrientedGraph:
    return OrientedGraph(g.parity, g.kinds, g.edges + ((a, b),))


def _admissible(g: OrientedGraph) -> bool:
    # intermediates never need shapes that vanish by a single edge or loop
    if g.parity == 1:
        return all(a != b for a, b in g.edges)
    seen = set()
    for a, b in g.edges:
        key = (min(a, b), max(a, b))
        if key in seen:
            return False
        seen.add(key)
    return True


def connected_classes(parity: int, v: int, e: int) -> list:
    """Isomorphism classes of connected plain graphs (including those zero by
    symmetry), sorted by encoding."""
    key = (parity, v, e)
    if key in _CLASSES:
        return _CLASSES[key]
    if v < 1 or e < v - 1:
        out = []
    elif v == 1 and e == 0:
        out = [OrientedGraph.plain(parity, 1, [])]
    else:
        found = set()
        for g in connected_classes(parity, v, e - 1):
            for a in range(v):
                for b in range(a, v):
                    h = _extend(g, a, b)
                    if _admissible(h):
                        found.add(iso_key(h))
        for g in connected_classes(parity, v - 1, e - 1):
            for a in range(v - 1):
                h = OrientedGraph(parity, g.kinds + ("I",), g.edges + ((a, v - 1),))
                found.add(iso_key(h))
        out = sorted(found, key=graph_sort_key)
    _CLASSES[key] = out
    return out


_BASES = {}


def preload_basis(parity: int, v: int, e: int, flavor: str, graphs: list) -> None:
    """Install a basis read from an external cache."""
    _BASES[(parity, v, e, flavor)] = sorted(graphs, key=graph_sort_key)


def basis(parity: int, v: int, e: int, flavor: str = "fgc") -> list:
    """Nonzero canonical graphs of the flavour with ``v`` vertices and ``e`` edges."""
    key = (parity, v, e, flavor)
    if key in _BASES:
        return list(_BASES[key])
    out = []
    for g in connected_classes(parity, v, e):
        if not in_flavor(g, flavor):
            continue
        cf = canonical_form(g)
        if not cf.is_zero:
            out.append(cf.graph)
    out.sort(key=graph_sort_key)
    _BASES[key] = out
    return list(out)


def window_basis(parity: int, vmax: int, emax: int, flavor: str) -> list:
    out = []
    for v in range(1, vmax + 1):
        for e in range(0, emax + 1):
            out.extend(basis(parity, v, e, flavor))
    return out


# ---------------------------------------------------------------- cohomology

def graph_degree(g: OrientedGraph, n: int) -> int:
    return n * (len(g.kinds) - 1) + (1 - n) * len(g.edges)


def differential_matrix(src: list, diff, tgt: list | None = None) -> tuple:
    """Matrix of ``diff`` (graph -> {graph: coeff}) on ``src``.

    Rows are indexed by ``tgt`` when given, otherwise by the graphs that occur.
    """
    images = [diff(g) for g in src]
    if tgt is None:
        seen = set()
        for img in images:
            seen.update(img)
        tgt = sorted(seen, key=graph_sort_key)
    index = {g: i for i, g in enumerate(tgt)}
    m = SparseMatrix(len(tgt), len(src))
    for j, img in enumerate(images):
        for h, c in img.items():
            if h not in index:
                raise KeyError(f"image graph outside target basis: {h.encode()}")
            m.add(index[h], j, c)
    return m, tgt


def cell_cohomology(prev: list, cur: list, diff, parity: int) -> dict:
    """Cohomology at ``cur`` of ``prev -> cur -> (images)``."""
    from .linalg_exact import kernel_basis, in_span

    d_out, _ = differential_matrix(cur, diff)
    d_in, _ = differential_matrix(prev, diff, cur) if prev else (SparseMatrix(len(cur), 0), cur)
    r_out = rank(d_out, certified=True)
    r_in = rank(d_in, certified=True)
    dim = len(cur) - r_out - r_in
    reps = []
    if dim > 0:
        image_cols = []
        for j in range(d_in.ncols):
            col = {i: row[j] for i, row in d_in.rows.items() if j in row}
            if col:
                image_cols.append(col)
        span = list(image_cols)
        for vec in kernel_basis(d_out):
            sparse = {i: x for i, x in enumerate(vec) if x}
            if not in_span(span, sparse):
                span.append(sparse)
                reps.append(GraphVector(parity, {cur[i]: x for i, x in sparse.items()}))
            if len(reps) == dim:
                break
    return {"dim_chain": len(cur), "rank_out": r_out, "rank_in": r_in, "dim": dim, "reps": reps}


def cohomology_window(n: int, vmax: int, emax: int, degree_range=None, flavor: str = "gc",
                      max_cell: int = 5000) -> list:
    """Per-cell cohomology of the graph complex in a vertex/edge window.

    Cells are indexed by (vertices, edges); the differential preserves loop
    order, so each cell's neighbours are (v-1, e-1) and (v+1, e+1).  Image
    graphs beyond the window are kept as matrix rows, so every listed cell
    is exact.
    """
    parity = n % 2
    diff = lambda g: differential(GraphVector.from_graph(g), flavor).terms
    rows = []
    for v in range(1, vmax + 1):
        for e in range(0, emax + 1):
            d = n * (v - 1) + (1 - n) * e
            if degree_range is not None and d not in degree_range:
                continue
            cur = basis(parity, v, e, flavor)
            if not cur:
                continue
            if len(cur) > max_cell:
                raise WindowOverflow(f"cell ({v},{e}) has {len(cur)} graphs")
            prev = basis(parity, v - 1, e - 1, flavor) if v > 1 and e > 0 else []
            res = cell_cohomology(prev, cur, diff, parity)
            rows.append({"vertices": v, "edges": e, "loop_order": e - v + 1, "degree": d,
                         "provisional": False, **res})
    return rows


def dimension_table(rows: list) -> dict:
    table = {}
    for r in rows:
        table[r["degree"]] = table.get(r["degree"], 0) + r["dim"]
    return {d: k for d, k in sorted(table.items()) if k}


def loop_class_report(n: int, r: int, flavor: str = "gc2") -> dict:
    """Closedness, nonvanishing and non-exactness of the r-gon loop graph."""
    parity = n % 2
    g = loop_graph(parity, r)
    cf = canonical_form(g)
    out = {"r": r, "degree": r - n, "nonzero": not cf.is_zero}
    if cf.is_zero:
        out.update(closed=True, exact=True)
        return out
    x = GraphVector.from_graph(g)
    out["closed"] = differential(x, flavor).is_zero()
    prev = basis(parity, r - 1, r - 1, flavor) if r > 1 else []
    if not prev:
        out["exact"] = False
        return out
    m, tgt = differential_matrix(prev, lambda h: differential(GraphVector.from_graph(h), flavor).terms)
    if cf.graph not in tgt:
        out["exact"] = False
        return out
    b = [Fraction(0)] * len(tgt)
    b[tgt.index(cf.graph)] = Fraction(cf.sign)
    out["exact"] = solve_in_image(m, b) is not None
    return out


# ---------------------------------------------------------------- very loopy quotient

def very_loopy_quotient_window(n: int, vmax: int) -> list:
    """Cohomology of GC_n modulo very loopy graphs.

    Loop orders up to ``vmax`` are covered completely: a graph that is not
    very loopy with loop order L has at most L vertices.
    """
    from .graph_core import is_very_loopy

    if n % 2 == 0:
        raise ValueError("the very loopy quotient is defined for odd n")
    parity = 1
    keep = lambda g: not is_very_loopy(g)

    def diff(g):
        return {h: c for h, c in differential(GraphVector.from_graph(g), "gc").terms.items()
                if keep(h)}

    def cell(v, e):
        return [g for g in basis(parity, v, e, "gc") if keep(g)] if v >= 1 else []

    rows = []
    for loop in range(1, vmax + 1):
        for v in range(1, vmax + 1):
            e = v - 1 + loop
            cur = cell(v, e)
            if not cur:
                continue
            res = cell_cohomology(cell(v - 1, e - 1), cur, diff, parity)
            rows.append({"vertices": v, "edges": e, "loop_order": loop,
                         "degree": n * (v - 1) + (1 - n) * e, **res})
    return rows


# ---------------------------------------------------------------- samples

def sample_graphs(parity: int, k: int, seed: int, vmax: int = 4, emax: int = 5,
                  flavor: str = "fgc") -> list:
    """``k`` seed-fixed basis graphs drawn from a small window."""
    pool = window_basis(parity, vmax, emax, flavor)
    rnd = random.Random(seed)
    return [rnd.choice(pool) for _ in range(k)]


def jacobi_residue(a: GraphVector, b: GraphVector, c: GraphVector) -> GraphVector:
    pa, pb, pc = vector_parity(a), vector_parity(b), vector_parity(c)
    s = lambda k: -1 if k % 2 else 1
    return (bracket(a, bracket(b, c)).scale(s(pa * pc))
            + bracket(b, bracket(c, a)).scale(s(pb * pa))
            + bracket(c, bracket(a, b)).scale(s(pc * pb)))


def leibniz_residue(a: GraphVector, b: GraphVector, flavor: str = "fgc") -> GraphVector:
    pa = vector_parity(a)
    lhs = differential(bracket(a, b), flavor)
    rhs = bracket(differential(a, flavor), b) + bracket(a, differential(b, flavor)).scale(-1 if pa else 1)
    return lhs - project(rhs, flavor)
