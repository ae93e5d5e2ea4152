"""Brute-force reference computations, written without touching production code paths."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product


# ---------------------------------------------------------------- linear algebra

def dense_rank(rows) -> int:
    """Rank by plain Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def vectors_rank(vectors: list) -> int:
    """Rank of sparse dict vectors."""
    keys = sorted({k for v in vectors for k in v}, key=repr)
    return dense_rank([[v.get(k, 0) for k in keys] for v in vectors])


# ---------------------------------------------------------------- graphs

def _perm_parity(seq) -> int:
    seq = list(seq)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv % 2


def _standard(kinds, edges, parity):
    """Standard orientation representative: ``(sign, edge tuple)`` or ``(0, None)``.

    Even parity: edges are undirected; sorting the ordered edge list costs the
    sign of the sorting permutation, and a repeated edge means zero.
    Odd parity: each edge is turned to point upward at cost -1 per flip; a
    self-loop means zero; edge order is free.
    """
    if parity == 0:
        normalized = [tuple(sorted(e)) for e in edges]
        if len(set(normalized)) != len(normalized):
            return 0, None
        order = sorted(range(len(normalized)), key=lambda i: normalized[i])
        sign = -1 if _perm_parity(order) else 1
        return sign, tuple(normalized[i] for i in order)
    sign = 1
    out = []
    for a, b in edges:
        if a == b:
            return 0, None
        if a > b:
            sign = -sign
            a, b = b, a
        out.append((a, b))
    return sign, tuple(sorted(out))


def _kind_order(kind: str) -> tuple:
    if kind.startswith("E"):
        return (2, int(kind[1:]))
    return (0 if kind == "I" else 1, 0)


def brute_canonical(kinds, edges, parity):
    """``(is_zero, key, sign)`` by enumerating every relabelling onto the
    sorted kind roster (internal, baseline, then externals by label).

    Vertex ``i`` goes to position ``pi[i]``.  For odd parity this costs the
    sign of ``pi`` on the ordered (non-external) vertices.  The input equals
    ``sign`` times the graph ``key``.
    """
    n = len(kinds)
    target = sorted(kinds, key=_kind_order)
    ordered = [i for i in range(n) if not kinds[i].startswith("E")]
    best = None
    seen = {}
    for perm in permutations(range(n)):
        if any(target[perm[i]] != kinds[i] for i in range(n)):
            continue
        new_edges = [(perm[a], perm[b]) for a, b in edges]
        s, key = _standard(kinds, new_edges, parity)
        if s == 0:
            return True, None, 0
        if parity == 1 and _perm_parity([perm[i] for i in ordered]):
            s = -s
        key = (tuple(target), key)
        if key in seen and seen[key] != s:
            return True, None, 0
        seen[key] = s
        if best is None or key < best[0]:
            best = (key, s)
    return False, best[0], best[1]


def all_multigraphs(v: int, e: int, loops: bool = True):
    """Every multiset of ``e`` edges on ``v`` vertices (as ordered lists)."""
    slots = [(a, b) for a in range(v) for b in range(a, v) if loops or a != b]
    for combo in combinations_with_replacement(slots, e):
        yield list(combo)


def connected(v: int, edges) -> bool:
    parent = list(range(v))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(v)}) == 1


def has_cycle(vertices, edges) -> bool:
    """Cycle test by counting: a forest has ``edges = vertices - components``."""
    vs = list(vertices)
    idx = {x: i for i, x in enumerate(vs)}
    parent = list(range(len(vs)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(idx[a]), find(idx[b])
        if ra == rb:
            return True
        parent[ra] = rb
    return False


def very_loopy(v: int, edges) -> bool:
    for x in range(v):
        rest = [(a, b) for a, b in edges if x not in (a, b)]
        if not has_cycle([y for y in range(v) if y != x], rest):
            return False
    return True


def count_nonzero_classes(parity: int, v: int, e: int, min_valence: int = 0) -> int:
    """Nonzero isomorphism classes of connected graphs, by brute force."""
    kinds = ("I",) * v
    keys = set()
    for edges in all_multigraphs(v, e):
        if not connected(v, edges):
            continue
        if min_valence:
            val = [0] * v
            for a, b in edges:
                val[a] += 1
                val[b] += 1
            if min(val) < min_valence:
                continue
        zero, key, _ = brute_canonical(kinds, edges, parity)
        if not zero:
            keys.add(key)
    return len(keys)


# ---------------------------------------------------------------- Drinfeld-Kohno quotient

def _tensor_commutator(u: dict, v: dict, parity_of) -> dict:
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            p1 = sum(parity_of(x) for x in w1) % 2
            p2 = sum(parity_of(x) for x in w2) % 2
            out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
            s = -1 if p1 * p2 else 1
            out[w2 + w1] = out.get(w2 + w1, 0) - s * c1 * c2
    return {k: c for k, c in out.items() if c}


def dk_quotient_dim(r: int, n: int, length: int) -> int:
    """Dimension of the bracket-length part of the Lie algebra on all ``t_ij``
    modulo the infinitesimal braid ideal, computed inside the tensor algebra
    on the pairs.  Uses ``t_ji = (-1)^n t_ij``."""
    pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    par = lambda x: n % 2

    def gen(i, j):
        if i < j:
            return {((i, j),): Fraction(1)}
        return {((j, i),): Fraction((-1) ** n)}

    def add(*vs):
        out = {}
        for v in vs:
            for k, c in v.items():
                out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    br = lambda a, b: _tensor_commutator(a, b, par)
    gens = [gen(i, j) for i, j in pairs]

    # free Lie part: all left-normed brackets of generators
    free = list(gens)
    for _ in range(length - 1):
        free = [br(g, x) for g in gens for x in free]
    rels = []
    for (i, j), (k, l) in product(pairs, pairs):
        if len({i, j, k, l}) == 4:
            rels.append(br(gen(i, j), gen(k, l)))
    for i, j in pairs:
        for k in range(1, r + 1):
            if k not in (i, j):
                rels.append(br(gen(i, j), add(gen(i, k), gen(j, k))))
    ideal = [x for x in rels if x]
    if length == 1:
        ideal = []
    for _ in range(length - 2):
        ideal = [br(g, x) for g in gens for x in ideal]
    free = [x for x in free if x]
    ideal = [x for x in ideal if x]
    return vectors_rank(free) - vectors_rank(ideal) if free else 0


# ---------------------------------------------------------------- Arnold algebra

def arnold_dims(n: int, r: int) -> dict:
    """Graded dimensions of the graded-commutative algebra on ``a_ij`` (degree
    ``n - 1``) modulo ``a_ij^2`` and the three-term relations, by linear algebra
    over square-free monomials."""
    pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    odd = (n - 1) % 2 == 1

    def mono_mul(a: tuple, b: tuple):
        if set(a) & set(b):
            return 0, None
        seq = list(a) + list(b)
        sign = -1 if (odd and _perm_parity([pairs.index(x) for x in seq])) else 1
        return sign, tuple(sorted(seq, key=pairs.index))

    def gen(i, j):
        if i < j:
            return {((i, j),): 1}
        return {((j, i),): (-1) ** n}

    def mul(x, y):
        out = {}
        for a, c1 in x.items():
            for b, c2 in y.items():
                s, m = mono_mul(a, b)
                if s:
                    out[m] = out.get(m, 0) + s * c1 * c2
        return {k: c for k, c in out.items() if c}

    rels = []
    for i, j, k in combinations(range(1, r + 1), 3):
        x = {}
        for a, b in ((gen(i, j), gen(j, k)), (gen(j, k), gen(k, i)), (gen(k, i), gen(i, j))):
            for m, c in mul(a, b).items():
                x[m] = x.get(m, 0) + c
        rels.append({m: c for m, c in x.items() if c})
    dims = {}
    for deg in range(len(pairs) + 1):
        monos = [tuple(c) for c in combinations(pairs, deg)]
        lower = [tuple(c) for c in combinations(pairs, deg - 2)] if deg >= 2 else []
        ideal = [mul(rel, {m: 1}) for rel in rels for m in lower]
        ideal = [x for x in ideal if x]
        d = len(monos) - (vectors_rank(ideal) if ideal else 0)
        if d:
            dims[deg * (n - 1)] = d
    return dims


# ---------------------------------------------------------------- misc

def gamma_half_integer(twice_x: int) -> Fraction:
    """``Gamma(x + 1) / sqrt(pi)`` for half-integer ``x = twice_x / 2 >= -1/2``."""
    assert twice_x % 2
    val = Fraction(1)  # (-1/2)! = sqrt(pi)
    x = Fraction(-1, 2)
    while x < Fraction(twice_x, 2):
        x += 1
        val *= x
    return val


def mobius(k: int) -> int:
    if k == 1:
        return 1
    primes = [p for p in range(2, k + 1) if k % p == 0 and all(p % q for q in range(2, p))]
    for p in primes:
        if k % (p * p) == 0:
            return 0
    return (-1) ** len(primes)
