"""Graphs with labelled external vertices, the Cohen algebra, and the
weight-truncated non-formality computation.

External vertices are the kinds ``E1 .. Er``; everything else is internal
(``I``).  The grading is ``n * internal - (n - 1) * edges``, so splitting a
vertex raises degree by one.  Cohomology tables are reported in the
cohomological degree ``(n - 1) * edges - n * internal`` to line up with the
Cohen algebra, whose generators sit in degree ``n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .gc_lie import GraphVector, cell_cohomology, differential_matrix, graph_parity, insert_terms
from .graph_core import (OrientedGraph, canonical_form, components, edge_graph, is_external,
                         iso_key, perm_sign)
from .linalg_exact import SparseMatrix, rank, solve_in_image

GRAPHS_FLAVORS = ("graphs", "graphs2", "full")


class ArityError(ValueError):
    pass


# ---------------------------------------------------------------- construction

def ext_kinds(r: int) -> tuple:
    return tuple(f"E{k}" for k in range(1, r + 1))


def ext_graph(n: int, r: int, edges, internal: int = 0) -> OrientedGraph:
    """Graph on externals ``0..r-1`` (labels 1..r) then ``internal`` internal vertices."""
    return OrientedGraph(n % 2, ext_kinds(r) + ("I",) * internal, tuple(tuple(e) for e in edges))


def empty_graph(n: int, r: int) -> OrientedGraph:
    return ext_graph(n, r, ())


def arity(g: OrientedGraph) -> int:
    return sum(1 for k in g.kinds if is_external(k))


def num_internal(g: OrientedGraph) -> int:
    return sum(1 for k in g.kinds if not is_external(k))


def ext_degree(g: OrientedGraph, n: int) -> int:
    return n * num_internal(g) - (n - 1) * len(g.edges)


def ext_parity(g: OrientedGraph) -> int:
    """Degree mod 2; only the parity of ``n`` matters."""
    return num_internal(g) % 2 if g.parity else len(g.edges) % 2


def coh_degree(g: OrientedGraph, n: int) -> int:
    return -ext_degree(g, n)


def _external_index(g: OrientedGraph) -> dict:
    return {k: i for i, k in enumerate(g.kinds) if is_external(k)}


def admissible(g: OrientedGraph, flavor: str = "graphs") -> bool:
    """Valence and component conditions of the chosen flavour."""
    if flavor not in GRAPHS_FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor != "full" and any(a == b for a, b in g.edges):
        return False
    for comp in components(g):
        if all(not is_external(g.kinds[v]) for v in comp):
            return False
    if flavor == "full":
        return True
    need = 3 if flavor == "graphs" else 2
    val = g.valences()
    return all(val[v] >= need for v, k in enumerate(g.kinds) if not is_external(k))


def project_graphs(x: GraphVector, flavor: str) -> GraphVector:
    return x.filter(lambda g: admissible(g, flavor))


# ---------------------------------------------------------------- Hopf product

def hopf_product(a: GraphVector, b: GraphVector) -> GraphVector:
    """Superpose along the external vertices; internal vertices of ``a`` come first."""
    if a.parity != b.parity:
        raise ValueError("parity mismatch")
    out = GraphVector(a.parity)
    for g1, c1 in a.terms.items():
        idx1 = _external_index(g1)
        for g2, c2 in b.terms.items():
            idx2 = _external_index(g2)
            if set(idx1) != set(idx2):
                raise ArityError(f"arity mismatch: {sorted(idx1)} vs {sorted(idx2)}")
            base = len(g1.kinds)
            where = {}
            extra = []
            for v, k in enumerate(g2.kinds):
                if is_external(k):
                    where[v] = idx1[k]
                else:
                    where[v] = base + len(extra)
                    extra.append(k)
            edges = g1.edges + tuple((where[x], where[y]) for x, y in g2.edges)
            out.add_graph(OrientedGraph(g1.parity, g1.kinds + tuple(extra), edges), c1 * c2)
    return out


# ---------------------------------------------------------------- GC action and differential

def _insert_everywhere(g: OrientedGraph, gamma: OrientedGraph, internal_only: bool):
    """Insert ``gamma`` at each vertex of ``g``.  At an external vertex one
    vertex ``u`` of ``gamma`` inherits the label, with sign ``(-1)^u`` for odd
    parity (moving it to the front of ``gamma``'s vertex order)."""
    for v, kind in enumerate(g.kinds):
        if not is_external(kind):
            yield from insert_terms(g, v, gamma)
        elif not internal_only:
            for u in range(len(gamma.kinds)):
                kinds2 = tuple(kind if w == u else "I" for w in range(len(gamma.kinds)))
                s0 = -1 if (gamma.parity == 1 and u % 2) else 1
                for h, s in insert_terms(g, v, gamma, kinds2=kinds2):
                    yield h, s * s0


def gc_act(gamma: GraphVector, x: GraphVector, internal_only: bool = False,
           flavor: str = "full", imax: int | None = None) -> GraphVector:
    """Action of a graph-complex element by insertion at vertices.

    The Koszul factor ``-(-1)^(|gamma||x|)`` turns the right insertion into a
    left Lie action.
    """
    out = GraphVector(x.parity)
    for g, c in x.terms.items():
        dx = ext_parity(g)
        for gm, cg in gamma.terms.items():
            sign = 1 if dx * graph_parity(gm) else -1
            coeff = cg * c
            for h, s in _insert_everywhere(g, gm, internal_only):
                if imax is not None and num_internal(h) > imax:
                    continue
                if not admissible(h, flavor):
                    continue
                out.add_graph(h, coeff if s * sign > 0 else -coeff)
    return out


def splitting_element(parity: int) -> GraphVector:
    return GraphVector.from_graph(edge_graph(parity), Fraction(1, 2))


def ext_differential(x: GraphVector, flavor: str = "graphs", imax: int | None = None) -> GraphVector:
    """Vertex splitting at internal and external vertices."""
    return gc_act(splitting_element(x.parity), x, flavor=flavor, imax=imax)


def twisted_diff(m, x: GraphVector, flavor: str = "full", imax: int | None = None) -> GraphVector:
    """``dx + m . x`` for a Maurer-Cartan element ``m`` (vector or element with ``.vector``)."""
    mv = getattr(m, "vector", m)
    return ext_differential(x, flavor, imax) + gc_act(mv, x, flavor=flavor, imax=imax)


def lambda_exponent(g: OrientedGraph) -> int:
    """Exponent of the rescaling weight ``lambda^(internal - edges)``."""
    return num_internal(g) - len(g.edges)


# ---------------------------------------------------------------- cocomposition

def cocompose(x: GraphVector, partition) -> dict:
    """Cocomposition along a partition of the external labels.

    Returns ``{(outer, inner_1, ..., inner_k): coeff}``.  The outer graph has
    one external per block (in block order); inner graph ``b`` has the block's
    labels renumbered ``1..|b|``.  Every internal vertex goes to the outer
    graph or to exactly one block; edges inside a block go with it, the rest
    go to the outer graph with block vertices collapsed.
    """
    blocks = [sorted(b) for b in partition]
    out = {}
    for g, c in x.terms.items():
        labels = sorted(int(k[1:]) for k in g.kinds if is_external(k))
        flat = sorted(l for b in blocks for l in b)
        if flat != labels:
            raise ValueError(f"{partition!r} is not a partition of {labels}")
        _cocompose_graph(g, c, blocks, out)
    return {k: v for k, v in out.items() if v}


def _cocompose_graph(g: OrientedGraph, c, blocks, out: dict) -> None:
    ext = {int(k[1:]): v for v, k in enumerate(g.kinds) if is_external(k)}
    internal = [v for v, k in enumerate(g.kinds) if not is_external(k)]
    block_of_label = {l: bi for bi, b in enumerate(blocks) for l in b}
    k = len(blocks)
    for assign in product(range(k + 1), repeat=len(internal)):
        owner = {}
        for l, v in ext.items():
            owner[v] = block_of_label[l] + 1
        for v, a in zip(internal, assign):
            owner[v] = a
        # vertex rosters: outer = one external per block then outer internals
        outer_int = [v for v, a in zip(internal, assign) if a == 0]
        outer_pos = {v: k + i for i, v in enumerate(outer_int)}
        inner_pos = []
        for bi, b in enumerate(blocks):
            pos = {ext[l]: j for j, l in enumerate(b)}
            ints = [v for v, a in zip(internal, assign) if a == bi + 1]
            for i, v in enumerate(ints):
                pos[v] = len(b) + i
            inner_pos.append((pos, ints))
        outer_edges, inner_edges = [], [[] for _ in blocks]
        order = []
        for idx, (a, b) in enumerate(g.edges):
            oa, ob = owner[a], owner[b]
            if oa == ob and oa > 0:
                pos = inner_pos[oa - 1][0]
                inner_edges[oa - 1].append((pos[a], pos[b]))
                order.append((oa, len(inner_edges[oa - 1]) - 1, idx))
            else:
                pa = outer_pos[a] if oa == 0 else oa - 1
                pb = outer_pos[b] if ob == 0 else ob - 1
                outer_edges.append((pa, pb))
                order.append((0, len(outer_edges) - 1, idx))
        if g.parity == 0:
            sign = perm_sign([(o, i) for o, i, _ in order])
        else:
            new_order = list(outer_int) + [v for _, ints in inner_pos for v in ints]
            sign = perm_sign([new_order.index(v) for v in internal])
        parity = g.parity
        outer = OrientedGraph(parity, ext_kinds(k) + ("I",) * len(outer_int), tuple(outer_edges))
        inners = []
        for bi, b in enumerate(blocks):
            ints = inner_pos[bi][1]
            inners.append(OrientedGraph(parity, ext_kinds(len(b)) + ("I",) * len(ints),
                                        tuple(inner_edges[bi])))
        key, s = [], sign
        zero = False
        for h in [outer] + inners:
            cf = canonical_form(h)
            if cf.is_zero:
                zero = True
                break
            key.append(cf.graph)
            s *= cf.sign
        if zero:
            continue
        key = tuple(key)
        out[key] = out.get(key, 0) + (c if s > 0 else -c)


def counit(x: GraphVector) -> Fraction:
    """Coefficient of the arity-one graph with no edges."""
    return sum((c for g, c in x.terms.items() if len(g.kinds) == 1 and not g.edges), Fraction(0))


# ---------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def ext_basis(parity: int, r: int, i: int, e: int, flavor: str = "graphs") -> tuple:
    """Nonzero canonical graphs with ``r`` externals, ``i`` internal vertices, ``e`` edges."""
    need = {"graphs": 3, "graphs2": 2, "full": 0}[flavor]
    loops = flavor == "full"
    start = OrientedGraph(parity, ext_kinds(r) + ("I",) * i, ())
    level = {iso_key(start)}
    nv = r + i
    pairs = [(a, b) for a in range(nv) for b in range(a if loops else a + 1, nv)]
    for done in range(e):
        nxt = set()
        left = e - done - 1
        for g in level:
            for a, b in pairs:
                h = OrientedGraph(parity, g.kinds, g.edges + ((a, b),))
                if _deficiency(h, need) > 2 * left:
                    continue
                if canonical_form(h).is_zero and _stays_zero(h):
                    continue
                nxt.add(iso_key(h))
        level = nxt
    out = []
    for g in level:
        if not admissible(g, flavor):
            continue
        cf = canonical_form(g)
        if not cf.is_zero:
            out.append(cf.graph)
    return tuple(sorted(out, key=lambda g: (g.kinds, g.edges)))


def _deficiency(g: OrientedGraph, need: int) -> int:
    val = g.valences()
    return sum(max(0, need - val[v]) for v, k in enumerate(g.kinds) if not is_external(k))


def _stays_zero(g: OrientedGraph) -> bool:
    # a repeated edge (even parity) or a self-loop (odd parity) never goes away
    if g.parity == 0:
        keys = [tuple(sorted(e)) for e in g.edges]
        return len(keys) != len(set(keys))
    return any(a == b for a, b in g.edges)


# ---------------------------------------------------------------- cohomology windows

def cohomology_dims(n: int, r: int, internal_max: int, degree_range=None,
                    flavor: str = "graphs", kmax: int | None = None) -> dict:
    """Window cohomology of the external-vertex complex.

    The differential preserves ``k = edges - internal``, and for the
    trivalent flavour each ``k``-piece has at most ``2k`` internal vertices,
    so a piece is complete once ``internal_max >= 2k``.  Returns
    ``{"dims": {coh_degree: dim}, "complete_k": [...], "cells": [...]}``.
    """
    parity = n % 2
    if kmax is None:
        kmax = internal_max // 2 if flavor == "graphs" else internal_max
    diff = lambda g: ext_differential(GraphVector.from_graph(g), flavor).terms
    dims, cells, complete = {}, [], []
    for k in range(0, kmax + 1):
        if flavor == "graphs" and 2 * k <= internal_max:
            complete.append(k)
        for i in range(0, internal_max + 1):
            e = k + i
            d = (n - 1) * e - n * i
            if degree_range is not None and d not in degree_range:
                continue
            cur = list(ext_basis(parity, r, i, e, flavor))
            if not cur:
                continue
            prev = list(ext_basis(parity, r, i - 1, e - 1, flavor)) if i > 0 else []
            res = cell_cohomology(prev, cur, diff, parity)
            cells.append({"k": k, "internal": i, "edges": e, "coh_degree": d,
                          "dim_chain": res["dim_chain"], "dim": res["dim"]})
            if res["dim"]:
                dims[d] = dims.get(d, 0) + res["dim"]
    return {"dims": dict(sorted(dims.items())), "complete_k": complete, "cells": cells}


# ---------------------------------------------------------------- Cohen algebra

class CohenAlgebra:
    """Graded-commutative algebra on ``a_ij`` (degree ``n - 1``) modulo the
    symmetry, square-zero and three-term relations.

    Basis: products ``a_{i1 j1} ... a_{ik jk}`` with ``i_s < j_s`` and
    ``j_1 < ... < j_k``.
    """

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self._swap = -1 if (n - 1) % 2 else 1

    def gens(self) -> list:
        return [(i, j) for j in range(2, self.r + 1) for i in range(1, j)]

    def basis(self, k: int | None = None) -> list:
        choices = [[None] + [(i, j) for i in range(1, j)] for j in range(2, self.r + 1)]
        out = []
        for pick in product(*choices):
            mono = tuple(p for p in pick if p is not None)
            if k is None or len(mono) == k:
                out.append(mono)
        return sorted(out, key=lambda m: (len(m), m))

    def dims(self) -> dict:
        out = {}
        for mono in self.basis():
            d = len(mono) * (self.n - 1)
            out[d] = out.get(d, 0) + 1
        return out

    def _orient(self, word) -> tuple:
        sign = 1
        norm = []
        for i, j in word:
            if not (1 <= i <= self.r and 1 <= j <= self.r) or i == j:
                raise ValueError(f"bad generator a_{i}{j}")
            if i > j:
                i, j = j, i
                if self.n % 2:
                    sign = -sign
            norm.append((i, j))
        return tuple(norm), sign

    def _sort(self, word: tuple) -> tuple:
        key = lambda p: (p[1], p[0])
        w = list(word)
        sign = 1
        for a in range(len(w)):
            for b in range(len(w) - 1 - a):
                if key(w[b]) > key(w[b + 1]):
                    w[b], w[b + 1] = w[b + 1], w[b]
                    sign *= self._swap
        return tuple(w), sign

    def reduce(self, word) -> dict:
        """Normal form of a product of generators as ``{basis monomial: coeff}``."""
        word, s = self._orient(word)
        res = self._reduce(word)
        return {m: c * s for m, c in res.items() if c}

    @lru_cache(maxsize=None)
    def _reduce(self, word: tuple) -> dict:
        w, sign = self._sort(word)
        if len(set(w)) != len(w):
            return {}
        for p in range(len(w) - 1):
            (a, j), (b, j2) = w[p], w[p + 1]
            if j == j2:
                # a_aj a_bj = -(-1)^n s [a_ab a_bj + (-1)^n a_aj a_ab],  a < b < j
                s = self._swap
                f = -(-1) ** self.n * s
                rest_l, rest_r = w[:p], w[p + 2:]
                out = {}
                for coeff, pair in ((f, ((a, b), (b, j))), (f * (-1) ** self.n, ((a, j), (a, b)))):
                    for m, c in self._reduce(rest_l + pair + rest_r).items():
                        out[m] = out.get(m, 0) + sign * coeff * c
                return {m: c for m, c in out.items() if c}
        return {w: sign}

    def multiply(self, x: dict, y: dict) -> dict:
        out = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in self.reduce(m1 + m2).items():
                    out[m] = out.get(m, 0) + c1 * c2 * c
        return {m: c for m, c in out.items() if c}

    def arnold(self, i: int, j: int, k: int) -> dict:
        out = {}
        for w in (((i, j), (j, k)), ((j, k), (k, i)), ((k, i), (i, j))):
            for m, c in self.reduce(w).items():
                out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}

    def t_operator(self, x: dict) -> dict:
        """``sum d/d a_ij``, a derivation of degree ``1 - n``; defined for even ``n``."""
        if self.n % 2:
            raise ValueError("the contraction operator is only defined for even n")
        out = {}
        for m, c in x.items():
            for s in range(len(m)):
                sign = self._swap ** s
                rest = m[:s] + m[s + 1:]
                for mm, cc in self.reduce(rest).items():
                    out[mm] = out.get(mm, 0) + sign * c * cc
        return {m: c for m, c in out.items() if c}

    def gravity_dims(self) -> dict:
        """Dimensions of ``ker T`` by degree."""
        out = {}
        for k in range(self.r):
            src = self.basis(k)
            if not src:
                continue
            tgt = self.basis(k - 1) if k else []
            index = {m: i for i, m in enumerate(tgt)}
            mat = SparseMatrix(max(len(tgt), 1), len(src))
            for jdx, m in enumerate(src):
                for mm, c in self.t_operator({m: 1}).items():
                    mat.add(index[mm], jdx, c)
            dim = len(src) - rank(mat, certified=True)
            if dim:
                out[k * (self.n - 1)] = dim
        return out


def cohen_dims(n: int, r: int) -> dict:
    return CohenAlgebra(n, r).dims()


def cohen_poincare(n: int, r: int) -> dict:
    """Coefficients of ``prod_{j<r} (1 + j t^(n-1))``."""
    poly = {0: 1}
    for j in range(1, r):
        new = {}
        for d, c in poly.items():
            new[d] = new.get(d, 0) + c
            new[d + n - 1] = new.get(d + n - 1, 0) + c * j
        poly = new
    return poly


# ---------------------------------------------------------------- auxiliary grading

def is_internally_connected(g: OrientedGraph) -> bool:
    """A single edge between externals, or internal vertices forming one
    component (through internal edges) with no edge between externals."""
    internal = [v for v, k in enumerate(g.kinds) if not is_external(k)]
    ext_edges = [(a, b) for a, b in g.edges if is_external(g.kinds[a]) and is_external(g.kinds[b])]
    if not internal:
        return len(g.edges) == 1
    if ext_edges:
        return False
    return len(components(g, internal)) == 1


def aux_degree(g: OrientedGraph) -> int:
    """``2 * internal - edges + 1`` on internally connected generators."""
    if not is_internally_connected(g):
        raise ValueError("auxiliary degree is defined on internally connected generators")
    return 2 * num_internal(g) - len(g.edges) + 1


# ---------------------------------------------------------------- non-formality

LOWER_CLASS_WEIGHT = 4


@dataclass(frozen=True)
class Decorated:
    """Empty arity-``r`` graph with the top-class symbol at one external."""

    r: int
    slot: int

    def encode(self) -> str:
        return f"P1@{self.slot}/arity{self.r}"


def weight_basis(n: int, r: int, wmax: int = 3) -> dict:
    """Weight-``<= wmax`` elements: graphs by edge count plus ``P1`` decorations
    (weight 3) on the empty graph.  Lower classes have weight 4 and drop out."""
    parity = n % 2
    graphs = []
    for e in range(wmax + 1):
        for i in range(0, 2 * e // 3 + 1):
            graphs.extend(ext_basis(parity, r, i, e, "graphs"))
    decorated = [Decorated(r, s) for s in range(1, r + 1)] if wmax >= 3 else []
    return {"graphs": graphs, "decorated": decorated}


def _swap_labels(g: OrientedGraph, perm: dict) -> OrientedGraph:
    kinds = tuple(f"E{perm[int(k[1:])]}" if is_external(k) else k for k in g.kinds)
    return iso_key(OrientedGraph(g.parity, kinds, g.edges))


def symmetric_orbits(items: list, r: int) -> int:
    from itertools import permutations

    seen, orbits = set(), 0
    for x in items:
        key = iso_key(x) if isinstance(x, OrientedGraph) else x
        if key in seen:
            continue
        orbits += 1
        for p in permutations(range(1, r + 1)):
            perm = dict(zip(range(1, r + 1), p))
            if isinstance(x, OrientedGraph):
                seen.add(_swap_labels(x, perm))
            else:
                seen.add(Decorated(x.r, perm[x.slot]))
    return orbits


def contraction_matrix(src: list, tgt: list, n: int) -> SparseMatrix:
    """Edge contraction ``src -> tgt``, taken as the transpose of splitting."""
    split, _ = differential_matrix(tgt, lambda g: ext_differential(GraphVector.from_graph(g),
                                                                   "graphs").terms, src)
    return split.transpose()


def nonformality_report(n: int) -> dict:
    if n < 3 or n % 2 == 0:
        raise ValueError("the obstruction computation is for odd n >= 3")
    parity = n % 2
    report = {"n": n, "lower_class_weight": LOWER_CLASS_WEIGHT,
              "note": "lower Pontryagin cogenerators are given weight 4 and drop out below weight 4"}
    dims = {}
    for r in (1, 2, 3):
        wb = weight_basis(n, r)
        dims[r] = len(wb["graphs"]) + len(wb["decorated"])
    report["weight3_dims"] = dims
    wb2 = weight_basis(n, 2)
    report["arity2_orbits"] = symmetric_orbits(wb2["graphs"] + wb2["decorated"], 2)

    # arity one: closed elements in the degree of the top-class symbol
    top_deg = 3 - 2 * n
    wb1 = weight_basis(n, 1)
    closed = [g.encode() for g in wb1["graphs"] if ext_degree(g, n) == top_deg
              and not ext_differential_contract(g, n)]
    report["arity1"] = {"top_class_degree": top_deg, "decorated": "P1@1",
                        "closed_graphs_same_degree": closed}

    # arity two: the classes paired with p*prod and p*bracket have no internal vertices
    triple = ext_graph(n, 2, [(0, 1)] * 3)
    double = ext_graph(n, 2, [(0, 1)] * 2)
    report["arity2"] = {
        "p_times_product": canonical_form(triple).encoding,
        "p_times_bracket": canonical_form(double).encoding,
        "degrees": [ext_degree(triple, n), ext_degree(double, n)],
        "closed": [not ext_differential_contract(triple, n), not ext_differential_contract(double, n)],
    }

    # arity three: the graph with edges 1-2 and 1-3 against the image of contraction
    cherry = canonical_form(ext_graph(n, 3, [(0, 1), (0, 2)])).graph
    src = [g for g in weight_basis(n, 3)["graphs"] if len(g.edges) == 3 and num_internal(g) > 0]
    tgt = list(ext_basis(parity, 3, 0, 2, "graphs"))
    mat = contraction_matrix(src, tgt, n)
    b = [Fraction(int(g == cherry)) for g in tgt]
    sol = solve_in_image(mat, b)
    tripod = canonical_form(ext_graph(n, 3, [(3, 0), (3, 1), (3, 2)], internal=1)).graph
    j = src.index(tripod)
    report["arity3"] = {
        "target": cherry.encode(),
        "preimage_candidates": len(src),
        "image_rank": rank(mat, certified=True),
        "tripod_boundary": {tgt[i].encode(): str(row[j]) for i, row in mat.rows.items() if j in row},
        "target_in_image": sol is not None,
    }
    report["obstruction"] = sol is None
    return report


def ext_differential_contract(g: OrientedGraph, n: int) -> bool:
    """Whether edge contraction of ``g`` is nonzero (graphs flavour)."""
    parity = n % 2
    r = arity(g)
    i = num_internal(g)
    if i == 0:
        return False
    tgt = list(ext_basis(parity, r, i - 1, len(g.edges) - 1, "graphs"))
    if not tgt:
        return False
    return not contraction_matrix([g], tgt, n).is_zero()
