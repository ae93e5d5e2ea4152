"""Oriented graphs with parity-dependent orientation data.

A graph carries a roster of vertex kinds and a tuple of edges.  Kinds are
``"I"`` (internal), ``"B"`` (baseline, a second internal colour) and
``"E<k>"`` (external vertex with label ``k``).

Orientation conventions:

* even parity: the edge tuple order is the orientation; swapping two edges
  costs a sign.  Edges are undirected and vertices unordered.
* odd parity: the non-external vertices, in roster order, are the
  orientation; swapping two costs a sign.  Each edge is directed and
  reversing one costs a sign.  Edge order is irrelevant.

External vertices never enter the orderings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class GraphError(ValueError):
    """Raised for malformed graphs."""


def _kind_rank(kind: str) -> tuple:
    if kind == "I":
        return (0, 0)
    if kind == "B":
        return (1, 0)
    if kind.startswith("E"):
        return (2, int(kind[1:]))
    raise GraphError(f"unknown vertex kind {kind!r}")


def is_external(kind: str) -> bool:
    return kind.startswith("E")


@dataclass(frozen=True)
class OrientedGraph:
    parity: int
    kinds: tuple
    edges: tuple

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise GraphError("parity must be 0 or 1")
        nv = len(self.kinds)
        for kind in self.kinds:
            _kind_rank(kind)
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            a, b = e
            if not (0 <= a < nv and 0 <= b < nv):
                raise GraphError(f"edge {e!r} has an endpoint out of range")

    @classmethod
    def plain(cls, parity: int, nvert: int, edges) -> "OrientedGraph":
        return cls(parity % 2, ("I",) * nvert, tuple(tuple(e) for e in edges))

    @property
    def num_vertices(self) -> int:
        return len(self.kinds)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def count_kind(self, kind: str) -> int:
        return sum(1 for k in self.kinds if k == kind)

    @property
    def num_internal(self) -> int:
        return sum(1 for k in self.kinds if not is_external(k))

    def valences(self) -> list:
        val = [0] * len(self.kinds)
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        return val

    def encode(self) -> str:
        return encode_gcx1(self)

    def __str__(self) -> str:
        return self.encode()


@dataclass(frozen=True)
class CanonicalForm:
    graph: OrientedGraph | None
    sign: int
    is_zero: bool

    @property
    def encoding(self) -> str | None:
        return None if self.graph is None else encode_gcx1(self.graph)


# ---------------------------------------------------------------- encoding

_GCX_RE = re.compile(r"^GCX1 p=([01]) v=(\d+) kinds=([^ ]*) edges=(.*)$")


def encode_gcx1(g: OrientedGraph) -> str:
    kinds = ",".join(g.kinds)
    edges = ";".join(f"({a + 1},{b + 1})" for a, b in g.edges)
    return f"GCX1 p={g.parity} v={len(g.kinds)} kinds={kinds} edges={edges}"


def decode_gcx1(text: str) -> OrientedGraph:
    m = _GCX_RE.match(text.strip())
    if not m:
        raise GraphError(f"not a GCX1 line: {text!r}")
    parity, nv = int(m.group(1)), int(m.group(2))
    kinds = tuple(m.group(3).split(",")) if m.group(3) else ()
    if len(kinds) != nv:
        raise GraphError("vertex count does not match kinds")
    edges = []
    body = m.group(4)
    if body:
        for item in body.split(";"):
            a, b = item.strip("()").split(",")
            edges.append((int(a) - 1, int(b) - 1))
    return OrientedGraph(parity, kinds, tuple(edges))


# ---------------------------------------------------------------- signs

def perm_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    pos = [0] * len(seq)
    for rank, i in enumerate(order):
        pos[i] = rank
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = pos[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def relabel(g: OrientedGraph, perm) -> tuple:
    """Apply ``perm`` (old index -> new index) and return (graph, sign).

    The returned graph lists edges in the normal order for its parity, and
    the sign is the orientation sign relating it to ``g``.
    """
    nv = len(g.kinds)
    kinds = [None] * nv
    for old, new in enumerate(perm):
        kinds[new] = g.kinds[old]
    if g.parity == 0:
        mapped = []
        for a, b in g.edges:
            x, y = perm[a], perm[b]
            mapped.append((x, y) if x <= y else (y, x))
        order = sorted(range(len(mapped)), key=lambda i: mapped[i])
        sign = perm_sign(mapped) if len(set(mapped)) == len(mapped) else 1
        edges = tuple(mapped[i] for i in order)
        return OrientedGraph(0, tuple(kinds), edges), sign
    sign = 1
    mapped = []
    for a, b in g.edges:
        x, y = perm[a], perm[b]
        if x > y:
            x, y = y, x
            sign = -sign
        mapped.append((x, y))
    ordered_old = [v for v in range(nv) if not is_external(g.kinds[v])]
    sign *= perm_sign([perm[v] for v in ordered_old])
    return OrientedGraph(1, tuple(kinds), tuple(sorted(mapped))), sign


# ---------------------------------------------------------------- canonical labelling

def _adjacency(g: OrientedGraph) -> list:
    nv = len(g.kinds)
    adj = [dict() for _ in range(nv)]
    for a, b in g.edges:
        adj[a][b] = adj[a].get(b, 0) + 1
        if a != b:
            adj[b][a] = adj[b].get(a, 0) + 1
    return adj


def _refine(colors: list, adj: list) -> list:
    """Iterated colour refinement; returns colours as ranks 0..k-1."""
    nv = len(colors)
    while True:
        sigs = []
        for v in range(nv):
            nb = sorted((colors[w], m) for w, m in adj[v].items())
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _leaves(colors: list, adj: list):
    """Yield discrete colourings reachable by individualisation-refinement."""
    colors = _refine(colors, adj)
    nv = len(colors)
    if len(set(colors)) == nv:
        yield colors
        return
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = min((c for c in cells if len(cells[c]) > 1),
                 key=lambda c: (len(cells[c]), c))
    for v in cells[target]:
        nxt = [2 * c + (1 if c >= target else 0) for c in colors]
        nxt[v] = 2 * target
        yield from _leaves(nxt, adj)


def _check_zero_shortcuts(g: OrientedGraph) -> bool:
    if g.parity == 0:
        seen = set()
        for a, b in g.edges:
            key = (a, b) if a <= b else (b, a)
            if key in seen:
                return True
            seen.add(key)
        return False
    return any(a == b for a, b in g.edges)


def _search(g: OrientedGraph) -> tuple:
    """Minimal relabelled graph, its sign, and whether an odd automorphism exists."""
    nv = len(g.kinds)
    if nv == 0:
        return g, 1, False
    adj = _adjacency(g)
    init = [(_kind_rank(g.kinds[v]), sum(adj[v].values()) + adj[v].get(v, 0), adj[v].get(v, 0))
            for v in range(nv)]
    ranks = {s: i for i, s in enumerate(sorted(set(init)))}
    colors = [ranks[s] for s in init]
    best = None
    best_sign = 0
    zero = False
    for leaf in _leaves(colors, adj):
        h, s = relabel(g, leaf)
        key = (h.kinds, h.edges)
        if best is None or key < best[0]:
            best, best_sign, zero = (key, h), s, False
        elif key == best[0] and s != best_sign:
            zero = True
    return best[1], best_sign, zero


@lru_cache(maxsize=1 << 18)
def canonical_form(g: OrientedGraph) -> CanonicalForm:
    """Canonical representative, orientation sign, and zero-by-symmetry flag."""
    if _check_zero_shortcuts(g):
        return CanonicalForm(None, 0, True)
    h, sign, zero = _search(g)
    if zero:
        return CanonicalForm(None, 0, True)
    return CanonicalForm(h, sign, False)


@lru_cache(maxsize=1 << 18)
def iso_key(g: OrientedGraph) -> OrientedGraph:
    """Canonical representative of the isomorphism class, ignoring orientation."""
    return _search(g)[0]


# ---------------------------------------------------------------- gradings and predicates

def degree(g: OrientedGraph, n: int, sector: str = "plain", m: int | None = None) -> int:
    """Cohomological degree of a graph.

    plain: ``n(v-1) + (1-n)e``.  baseline: ``n*#I + m*(#B - 1) + (1-n)e``.
    """
    e = len(g.edges)
    if sector == "plain":
        return n * (len(g.kinds) - 1) + (1 - n) * e
    if sector == "baseline":
        nb = g.count_kind("B")
        if m is None or nb == 0:
            raise GraphError("baseline sector needs m and a baseline vertex")
        return n * g.count_kind("I") + m * (nb - 1) + (1 - n) * e
    raise GraphError(f"unknown sector {sector!r}")


def components(g: OrientedGraph, keep=None) -> list:
    """Connected components, optionally restricted to vertices in ``keep``."""
    nv = len(g.kinds)
    verts = set(range(nv)) if keep is None else set(keep)
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        if a in verts and b in verts:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    comps = {}
    for v in verts:
        comps.setdefault(find(v), []).append(v)
    return sorted(sorted(c) for c in comps.values())


def is_connected(g: OrientedGraph) -> bool:
    return len(g.kinds) > 0 and len(components(g)) == 1


def loop_order(g: OrientedGraph) -> int:
    return len(g.edges) - len(g.kinds) + len(components(g))


def min_internal_valence(g: OrientedGraph) -> int | None:
    val = g.valences()
    inner = [val[v] for v in range(len(g.kinds)) if not is_external(g.kinds[v])]
    return min(inner) if inner else None


def _has_cycle(g: OrientedGraph, keep) -> bool:
    keep = set(keep)
    sub_edges = [(a, b) for a, b in g.edges if a in keep and b in keep]
    return len(sub_edges) - len(keep) + len(components(g, keep)) > 0


def is_very_loopy(g: OrientedGraph) -> bool:
    """True when deleting any single vertex leaves a graph with a cycle."""
    nv = len(g.kinds)
    if nv == 0:
        return False
    return all(_has_cycle(g, [w for w in range(nv) if w != v]) for v in range(nv))


# ---------------------------------------------------------------- standard graphs

def single_vertex(parity: int) -> OrientedGraph:
    return OrientedGraph.plain(parity, 1, [])


def edge_graph(parity: int) -> OrientedGraph:
    return OrientedGraph.plain(parity, 2, [(0, 1)])


def tadpole(parity: int) -> OrientedGraph:
    return OrientedGraph.plain(parity, 1, [(0, 0)])


def multi_edge(parity: int, k: int) -> OrientedGraph:
    """Two vertices joined by ``k`` parallel edges (theta for k = 3)."""
    return OrientedGraph.plain(parity, 2, [(0, 1)] * k)


def theta(parity: int) -> OrientedGraph:
    return multi_edge(parity, 3)


def loop_graph(parity: int, r: int) -> OrientedGraph:
    """Cycle on ``r`` vertices."""
    if r == 1:
        return tadpole(parity)
    return OrientedGraph.plain(parity, r, [(i, (i + 1) % r) for i in range(r)])


def complete_graph(parity: int, k: int) -> OrientedGraph:
    return OrientedGraph.plain(parity, k, list(combinations(range(k), 2)))
