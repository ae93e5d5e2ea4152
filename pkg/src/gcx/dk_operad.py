"""Drinfeld-Kohno Lie algebras, their operad structure and the framed variant.

An element of the arity-``r`` algebra is stored layer by layer.  Layer ``s``
is the free Lie (super)algebra on ``t_{1s} .. t_{(s-1)s}``, kept inside its
tensor algebra (letter ``i`` stands for ``t_{is}``); lower layers act on
higher ones by derivations.  Tensor coordinates make the normal form
canonical.  ``lyndon_terms`` re-expands a layer in a Lyndon-type bracket
basis for display and for applying operad maps.

Generators ``t_ij`` have degree ``n - 2`` and ``t_ji = (-1)^n t_ij``; for odd
``n`` they are odd, so ``[t, t]`` need not vanish.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .char_ring import make_ring
from .linalg_exact import SparseMatrix, rank, solve_in_image


class IndexError_(IndexError):
    pass


def _acc(d: dict, k, c) -> None:
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


# ---------------------------------------------------------------- tensor layer arithmetic

def _commutator(u: dict, v: dict, p: int) -> dict:
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            _acc(out, w1 + w2, c1 * c2)
            s = -1 if (p * len(w1) * len(w2)) % 2 else 1
            _acc(out, w2 + w1, -s * c1 * c2)
    return out


def _apply_derivation(on_letter, x: dict, p: int) -> dict:
    """Graded derivation of parity ``p`` given on letters."""
    out = {}
    for w, c in x.items():
        for q, letter in enumerate(w):
            img = on_letter(letter)
            if not img:
                continue
            s = -1 if (p * q) % 2 else 1
            for mid, cm in img.items():
                _acc(out, w[:q] + mid + w[q + 1:], s * c * cm)
    return out


# ---------------------------------------------------------------- elements

class LieElem:
    """Element of the arity-``r`` algebra, optionally framed."""

    __slots__ = ("r", "n", "layers", "central")

    def __init__(self, r: int, n: int, layers=None, central=None):
        self.r, self.n = r, n
        self.layers = {s: dict(c) for s, c in (layers or {}).items() if c}
        self.central = {k: v for k, v in (central or {}).items() if v}

    @property
    def p(self) -> int:
        return self.n % 2

    def _check(self, other: "LieElem") -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "LieElem") -> "LieElem":
        self._check(other)
        layers = {s: dict(c) for s, c in self.layers.items()}
        for s, comp in other.layers.items():
            tgt = layers.setdefault(s, {})
            for w, c in comp.items():
                _acc(tgt, w, c)
        central = dict(self.central)
        for k, c in other.central.items():
            _acc(central, k, c)
        return LieElem(self.r, self.n, layers, central)

    def scale(self, c) -> "LieElem":
        c = Fraction(c)
        if not c:
            return LieElem(self.r, self.n)
        return LieElem(self.r, self.n, {s: {w: x * c for w, x in comp.items()}
                                        for s, comp in self.layers.items()},
                       {k: x * c for k, x in self.central.items()})

    def __neg__(self) -> "LieElem":
        return self.scale(-1)

    def __sub__(self, other: "LieElem") -> "LieElem":
        return self + (-other)

    def __rmul__(self, c) -> "LieElem":
        return self.scale(c)

    def is_zero(self) -> bool:
        return not self.layers and not self.central

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieElem) and (self.r, self.n) == (other.r, other.n)
                and self.layers == other.layers and self.central == other.central)

    def lengths(self) -> set:
        return {len(w) for comp in self.layers.values() for w in comp}

    def __str__(self) -> str:
        return format_elem(self)

    def __repr__(self) -> str:
        return f"LieElem(r={self.r}, n={self.n}: {format_elem(self)})"


def zero(r: int, n: int) -> LieElem:
    return LieElem(r, n)


def t(i: int, j: int, r: int, n: int) -> LieElem:
    """Generator ``t_ij``; ``t_ji = (-1)^n t_ij``."""
    if not (1 <= i <= r and 1 <= j <= r) or i == j:
        raise IndexError_(f"t_{i}{j} is not a generator in arity {r}")
    c = Fraction(1)
    if i > j:
        i, j = j, i
        if n % 2:
            c = -c
    return LieElem(r, n, {j: {(i,): c}})


def framed_names(n: int) -> tuple:
    return make_ring(f"SO({n})").names


def central(name: str, slot: int, r: int, n: int) -> LieElem:
    if name not in framed_names(n):
        raise ValueError(f"{name!r} is not a class of SO({n})")
    if not 1 <= slot <= r:
        raise IndexError_(f"slot {slot} out of range 1..{r}")
    return LieElem(r, n, central={(name, slot): Fraction(1)})


def top_class(n: int) -> str:
    return "E" if n % 2 == 0 else f"p{2 * n - 2}"


def _rho_letter(i: int, j: int, p: int):
    """Action of ``t_ij`` (``i < j``) on the letters of a higher layer."""
    def on_letter(k):
        if k == i:
            return _commutator({(i,): 1}, {(j,): 1}, p)
        if k == j:
            return {w: -c for w, c in _commutator({(i,): 1}, {(j,): 1}, p).items()}
        return None
    return on_letter


def _act(low_layer: int, a: dict, b: dict, p: int) -> dict:
    """``[a, b]`` with ``a`` in layer ``low_layer`` and ``b`` in a higher layer."""
    out = {}
    for w, c in a.items():
        y = dict(b)
        for letter in reversed(w):
            y = _apply_derivation(_rho_letter(letter, low_layer, p), y, p)
            if not y:
                break
        for word, x in y.items():
            _acc(out, word, c * x)
    return out


def _parity_of(comp: dict, p: int) -> int:
    ps = {(len(w) * p) % 2 for w in comp}
    if len(ps) > 1:
        raise ValueError("component has mixed parity")
    return ps.pop() if ps else 0


def bracket(a: LieElem, b: LieElem) -> LieElem:
    a._check(b)
    p = a.p
    layers = {}
    for s1, c1 in a.layers.items():
        for s2, c2 in b.layers.items():
            if s1 == s2:
                res, s = _commutator(c1, c2, p), s1
            elif s1 < s2:
                res, s = _act(s1, c1, c2, p), s2
            else:
                res, s = _act(s2, c2, c1, p), s1
                sign = -1 if (_parity_of(c1, p) * _parity_of(c2, p)) else 1
                res = {w: -sign * c for w, c in res.items()}
            tgt = layers.setdefault(s, {})
            for w, c in res.items():
                _acc(tgt, w, c)
    return LieElem(a.r, a.n, layers)


# ---------------------------------------------------------------- expression trees and parsing

def evaluate(tree, r: int, n: int, gen=None) -> LieElem:
    """Evaluate a tree: ``("t", i, j)``, ``("c", name, slot)``, ``("br", x, y)``,
    ``("sum", [(coeff, x), ...])``.  ``gen`` overrides generator evaluation."""
    kind = tree[0]
    if kind == "t":
        return gen(tree) if gen else t(tree[1], tree[2], r, n)
    if kind == "c":
        return gen(tree) if gen else central(tree[1], tree[2], r, n)
    if kind == "br":
        return bracket(evaluate(tree[1], r, n, gen), evaluate(tree[2], r, n, gen))
    if kind == "sum":
        out = zero(r, n)
        for c, sub in tree[1]:
            out = out + evaluate(sub, r, n, gen).scale(c)
        return out
    raise ValueError(f"bad tree node {kind!r}")


_TOKEN = re.compile(r"\s*(\[|\]|,|\+|-|\*|t\(\d+,\d+\)|t\d\d|[A-Za-z]\w*@\d+|\d+(?:/\d+)?)")


def parse(text: str):
    """Parse ``[t12,[t13,t23]] + 2*p4@1`` into an expression tree."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
    toks.append(None)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        i += 1
        return toks[i - 1]

    def atom():
        tok = take()
        if tok == "[":
            x = expr()
            if take() != ",":
                raise ValueError("expected ','")
            y = expr()
            if take() != "]":
                raise ValueError("expected ']'")
            return ("br", x, y)
        if tok and tok.startswith("t("):
            a, b = tok[2:-1].split(",")
            return ("t", int(a), int(b))
        if tok and tok.startswith("t") and tok[1:].isdigit():
            return ("t", int(tok[1]), int(tok[2]))
        if tok and "@" in tok:
            name, slot = tok.split("@")
            return ("c", name, int(slot))
        raise ValueError(f"unexpected token {tok!r}")

    def term():
        c = Fraction(1)
        if peek() and re.fullmatch(r"\d+(?:/\d+)?", peek()):
            c = Fraction(take())
            if take() != "*":
                raise ValueError("expected '*' after coefficient")
        return c, atom()

    def expr():
        terms = []
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        while True:
            c, a = term()
            terms.append((sign * c, a))
            if peek() in ("+", "-"):
                sign = -1 if take() == "-" else 1
                continue
            break
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else ("sum", terms)

    tree = expr()
    if peek() is not None:
        raise ValueError(f"trailing input at {peek()!r}")
    return tree


def normal_form(expr, r: int, n: int) -> LieElem:
    """Normal form of an expression tree or string; indices must lie in ``1..r``."""
    if isinstance(expr, str):
        expr = parse(expr)
    return evaluate(expr, r, n)


# ---------------------------------------------------------------- bracket bases

def lyndon_words(k: int, length: int) -> list:
    """Lyndon words of the given length over ``1..k`` (Duval)."""
    out = []
    if k < 1 or length < 1:
        return out
    w = [0]
    while w:
        if len(w) == length:
            out.append(tuple(x + 1 for x in w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def _std_bracket(w: tuple):
    if len(w) == 1:
        return ("l", w[0])
    for cut in range(1, len(w)):
        v = w[cut:]
        if v in _lyndon_set(len(v), max(w)):
            return ("br", _std_bracket(w[:cut]), _std_bracket(v))
    raise AssertionError("not a Lyndon word")


@lru_cache(maxsize=None)
def _lyndon_set(length: int, k: int) -> frozenset:
    return frozenset(lyndon_words(k, length))


def _tensor_of(tree, p: int) -> dict:
    if tree[0] == "l":
        return {(tree[1],): Fraction(1)}
    return _commutator(_tensor_of(tree[1], p), _tensor_of(tree[2], p), p)


def _right_normed(w: tuple):
    tree = ("l", w[-1])
    for x in reversed(w[:-1]):
        tree = ("br", ("l", x), tree)
    return tree


@lru_cache(maxsize=None)
def layer_basis(k: int, length: int, p: int) -> tuple:
    """Bracket trees forming a basis of the length-``length`` part of the free
    Lie (super)algebra on ``k`` letters of parity ``p``.  Lyndon standard
    bracketings come first, then squares of odd Lyndon elements, then
    right-normed brackets fill any gap."""
    if k < 1 or length < 1:
        return ()
    cands = [_std_bracket(w) for w in lyndon_words(k, length)]
    if p and length % 2 == 0:
        for w in lyndon_words(k, length // 2):
            if (len(w) * p) % 2:
                b = _std_bracket(w)
                cands.append(("br", b, b))
    cands += [_right_normed(w) for w in product(range(1, k + 1), repeat=length)]
    chosen, rows = [], []
    for tree in cands:
        vec = _tensor_of(tree, p)
        if not vec:
            continue
        trial = rows + [vec]
        if _rank_of(trial) == len(trial):
            rows.append(vec)
            chosen.append(tree)
    return tuple(chosen)


def _rank_of(vectors: list) -> int:
    keys = sorted({w for v in vectors for w in v})
    idx = {w: i for i, w in enumerate(keys)}
    m = SparseMatrix(max(len(keys), 1), len(vectors))
    for j, v in enumerate(vectors):
        for w, c in v.items():
            m.add(idx[w], j, c)
    return rank(m)


def lyndon_terms(x: LieElem) -> list:
    """``[(layer, coeff, tree)]`` expressing each layer in :func:`layer_basis`."""
    out = []
    for s in sorted(x.layers):
        comp = x.layers[s]
        for length in sorted({len(w) for w in comp}):
            part = {w: c for w, c in comp.items() if len(w) == length}
            basis = layer_basis(s - 1, length, x.p)
            vecs = [_tensor_of(b, x.p) for b in basis]
            keys = sorted({w for v in vecs for w in v} | set(part))
            idx = {w: i for i, w in enumerate(keys)}
            m = SparseMatrix(len(keys), len(vecs))
            for j, v in enumerate(vecs):
                for w, c in v.items():
                    m.add(idx[w], j, c)
            rhs = [Fraction(0)] * len(keys)
            for w, c in part.items():
                rhs[idx[w]] = c
            sol = solve_in_image(m, rhs)
            if sol is None:
                raise ArithmeticError("layer component is not a Lie element")
            out.extend((s, c, basis[j]) for j, c in enumerate(sol) if c)
    return out


def _layer_tree_to_expr(tree, s: int):
    if tree[0] == "l":
        return ("t", tree[1], s)
    return ("br", _layer_tree_to_expr(tree[1], s), _layer_tree_to_expr(tree[2], s))


def to_trees(x: LieElem) -> list:
    """``[(coeff, expression tree)]`` spanning ``x``, central part included."""
    out = [(c, _layer_tree_to_expr(tree, s)) for s, c, tree in lyndon_terms(x)]
    out += [(c, ("c", name, slot)) for (name, slot), c in sorted(x.central.items())]
    return out


def _expr_str(tree) -> str:
    if tree[0] == "t":
        a, b = tree[1], tree[2]
        return f"t{a}{b}" if a < 10 and b < 10 else f"t({a},{b})"
    if tree[0] == "c":
        return f"{tree[1]}@{tree[2]}"
    return f"[{_expr_str(tree[1])},{_expr_str(tree[2])}]"


def format_elem(x: LieElem) -> str:
    parts = []
    for c, tree in to_trees(x):
        body = _expr_str(tree)
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        parts.append(("-" if c < 0 else "+", coef + body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------- operad structure

def _check_slot(slot: int, r: int) -> None:
    if not 1 <= slot <= r:
        raise IndexError_(f"slot {slot} out of range 1..{r}")


def _outer_index(a: int, slot: int, r2: int):
    if a < slot:
        return [a]
    if a > slot:
        return [a + r2 - 1]
    return list(range(slot, slot + r2))


def outer_map(slot: int, r1: int, r2: int, n: int, framed: bool = False):
    """Generator assignment for the outer factor of ``o_slot``."""
    _check_slot(slot, r1)
    R = r1 + r2 - 1

    def gen(tree):
        if tree[0] == "t":
            out = zero(R, n)
            for a in _outer_index(tree[1], slot, r2):
                for b in _outer_index(tree[2], slot, r2):
                    out = out + t(a, b, R, n)
            return out
        name, a = tree[1], tree[2]
        if a != slot:
            return central(name, _outer_index(a, slot, r2)[0], R, n)
        if not framed:
            return central(name, slot, R, n)
        return _framed_slot_image(name, slot, r2, R, n)
    return gen


def inner_map(slot: int, r1: int, r2: int, n: int):
    """Generator assignment for the inner factor: shift indices into the block."""
    _check_slot(slot, r1)
    R = r1 + r2 - 1

    def gen(tree):
        if tree[0] == "t":
            return t(tree[1] + slot - 1, tree[2] + slot - 1, R, n)
        return central(tree[1], tree[2] + slot - 1, R, n)
    return gen


def _apply_map(x: LieElem, gen, R: int) -> LieElem:
    out = zero(R, x.n)
    for c, tree in to_trees(x):
        out = out + evaluate(tree, R, x.n, gen).scale(c)
    return out


def compose(x: LieElem, slot: int, y: LieElem, framed: bool = False) -> LieElem:
    """``x o_slot y``: the Lie map from the direct sum, applied to ``(x, y)``."""
    if x.n != y.n:
        raise ValueError("dimension mismatch")
    r1, r2, n = x.r, y.r, x.n
    R = r1 + r2 - 1
    return (_apply_map(x, outer_map(slot, r1, r2, n, framed), R)
            + _apply_map(y, inner_map(slot, r1, r2, n), R))


def _framed_slot_image(name: str, slot: int, r2: int, R: int, n: int) -> LieElem:
    """A class at the substituted slot spreads over the block.  The top class
    picks up the block total ``T`` of the ``t_ij`` (even ``n``) or ``[T, T]``
    (odd ``n``), which is what keeps it central in the composite."""
    block = range(slot, slot + r2)
    out = zero(R, n)
    for j in block:
        out = out + central(name, j, R, n)
    if name != top_class(n):
        return out
    total = zero(R, n)
    for i in block:
        for j in block:
            if i < j:
                total = total + t(i, j, R, n)
    return out + (total if n % 2 == 0 else bracket(total, total))


def compose_framed(x: LieElem, slot: int, y: LieElem, n: int | None = None) -> LieElem:
    if n is not None and n != x.n:
        raise ValueError("dimension mismatch")
    return compose(x, slot, y, framed=True)


def act_permutation(x: LieElem, sigma: dict) -> LieElem:
    """Relabel indices by ``sigma`` (a bijection of ``1..r``)."""
    def gen(tree):
        if tree[0] == "t":
            return t(sigma[tree[1]], sigma[tree[2]], x.r, x.n)
        return central(tree[1], sigma[tree[2]], x.r, x.n)

    return _apply_map(x, gen, x.r)


# ---------------------------------------------------------------- relations and dimensions

def relations(r: int, framed_n: int | None = None) -> list:
    """Defining relations as expression trees (central ones when framed)."""
    rels = []
    idx = range(1, r + 1)
    pairs = [(i, j) for i in idx for j in idx if i < j]
    for (i, j), (k, l) in product(pairs, pairs):
        if len({i, j, k, l}) == 4:
            rels.append(("br", ("t", i, j), ("t", k, l)))
    for i, j in pairs:
        for k in idx:
            if k not in (i, j):
                rels.append(("br", ("t", i, j), ("sum", [(1, ("t", i, k)), (1, ("t", j, k))])))
    if framed_n is not None:
        for name in framed_names(framed_n):
            for a in idx:
                for i, j in pairs:
                    rels.append(("br", ("c", name, a), ("t", i, j)))
                for b in idx:
                    for other in framed_names(framed_n):
                        rels.append(("br", ("c", name, a), ("c", other, b)))
    return rels


def _mobius(k: int) -> int:
    res, d = 1, 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            res = -res
        d += 1
    return -res if k > 1 else res


def free_lie_dim(k: int, length: int, p: int = 0) -> int:
    """Witt formula; for odd letters the super version."""
    if k < 1 or length < 1:
        return 0
    total = 0
    for d in range(1, length + 1):
        if length % d:
            continue
        term = _mobius(d) * k ** (length // d)
        if p:
            term *= (-1) ** (length + length // d)
        total += term
    return total // length


def graded_dim(r: int, n: int, length: int) -> int:
    """Dimension of the bracket-length ``length`` part of the arity-``r`` algebra."""
    if length < 1:
        raise ValueError("bracket length must be at least 1")
    return sum(free_lie_dim(j, length, n % 2) for j in range(1, r))


# ---------------------------------------------------------------- verification

def sample_elements(r: int, n: int, maxlen: int, framed: bool = False) -> list:
    """Every bracket-basis element of length ``<= maxlen``, plus the framed generators."""
    out = []
    for s in range(2, r + 1):
        for length in range(1, maxlen + 1):
            for tree in layer_basis(s - 1, length, n % 2):
                out.append(LieElem(r, n, {s: _tensor_of(tree, n % 2)}))
    if framed:
        out += [central(name, a, r, n) for name in framed_names(n) for a in range(1, r + 1)]
    return out


def _block_permutation(sigma: dict, slot: int, r2: int, tau: dict | None = None) -> dict:
    """Permutation of ``1..r1+r2-1`` induced by ``sigma`` on the outer labels and
    ``tau`` inside the block at ``slot``."""
    tau = tau or {b: b for b in range(1, r2 + 1)}
    new_slot = sigma[slot]
    out = {}
    for a in sigma:
        if a == slot:
            for b in range(1, r2 + 1):
                out[slot + b - 1] = new_slot + tau[b] - 1
        else:
            out[_outer_index(a, slot, r2)[0]] = _outer_index(sigma[a], new_slot, r2)[0]
    return out


def _permutations(r: int):
    from itertools import permutations
    for perm in permutations(range(1, r + 1)):
        yield {i + 1: p for i, p in enumerate(perm)}


def verify(n: int, arity: int = 4, maxlen: int = 3, framed: bool = False) -> dict:
    """Exact checks of relations, well-definedness and the operad axioms."""
    fr = n if framed else None
    bad_rel = [(r, _expr_str(rel)) for r in range(2, arity + 2)
               for rel in relations(r, fr) if not evaluate(rel, r, n).is_zero()]

    bad_wd = []
    bad_assoc = 0
    bad_equiv = 0
    checked = 0
    for r1 in range(1, arity + 1):
        for r2 in range(1, arity + 2 - r1):
            R = r1 + r2 - 1
            if R > arity:
                continue
            for slot in range(1, r1 + 1):
                phi = outer_map(slot, r1, r2, n, framed)
                psi = inner_map(slot, r1, r2, n)
                for rel in relations(r1, fr):
                    if not evaluate(rel, R, n, phi).is_zero():
                        bad_wd.append(("outer", r1, r2, slot, _expr_str(rel)))
                for rel in relations(r2, fr):
                    if not evaluate(rel, R, n, psi).is_zero():
                        bad_wd.append(("inner", r1, r2, slot, _expr_str(rel)))
                gens1 = [tr for _, tr in _generator_trees(r1, n, framed)]
                gens2 = [tr for _, tr in _generator_trees(r2, n, framed)]
                for g1 in gens1:
                    for g2 in gens2:
                        if not bracket(evaluate(g1, R, n, phi), evaluate(g2, R, n, psi)).is_zero():
                            bad_wd.append(("cross", r1, r2, slot, _expr_str(g1), _expr_str(g2)))

    # associativity and equivariance over all arity triples with total arity <= the bound
    for r1 in range(1, arity + 1):
        for r2 in range(1, arity + 1):
            for r3 in range(1, arity + 1):
                if r1 + r2 + r3 - 2 > arity:
                    continue
                xs = sample_elements(r1, n, maxlen, framed)
                ys = sample_elements(r2, n, maxlen, framed)
                zs = sample_elements(r3, n, maxlen, framed)
                triples = ([(x, zero(r2, n), zero(r3, n)) for x in xs]
                           + [(zero(r1, n), y, zero(r3, n)) for y in ys]
                           + [(zero(r1, n), zero(r2, n), z) for z in zs])
                for x, y, z in triples:
                    for i in range(1, r1 + 1):
                        for k in range(1, r2 + 1):
                            lhs = compose(compose(x, i, y, framed), i + k - 1, z, framed)
                            rhs = compose(x, i, compose(y, k, z, framed), framed)
                            checked += 1
                            bad_assoc += lhs != rhs
                        for j in range(i + 1, r1 + 1):
                            lhs = compose(compose(x, i, y, framed), j + r2 - 1, z, framed)
                            rhs = compose(compose(x, j, z, framed), i, y, framed)
                            checked += 1
                            bad_assoc += lhs != rhs
    for r1 in range(1, arity + 1):
        for r2 in range(1, arity + 2 - r1):
            xs = sample_elements(r1, n, maxlen, framed)
            ys = sample_elements(r2, n, maxlen, framed)
            pairs = [(x, zero(r2, n)) for x in xs] + [(zero(r1, n), y) for y in ys]
            for sigma in _permutations(r1):
                for tau in _permutations(r2):
                    for slot in range(1, r1 + 1):
                        big = _block_permutation(sigma, slot, r2, tau)
                        for x, y in pairs:
                            lhs = compose(act_permutation(x, sigma), sigma[slot],
                                          act_permutation(y, tau), framed)
                            rhs = act_permutation(compose(x, slot, y, framed), big)
                            checked += 1
                            bad_equiv += lhs != rhs

    dims = {}
    dim_bad = []
    for r in range(2, arity + 1):
        for length in range(1, maxlen + 1):
            formula = graded_dim(r, n, length)
            layered = sum(len(layer_basis(s - 1, length, n % 2)) for s in range(2, r + 1))
            dims[f"{r},{length}"] = formula
            if formula != layered:
                dim_bad.append((r, length, formula, layered))

    return {"n": n, "arity": arity, "maxlen": maxlen, "framed": framed,
            "relation_failures": bad_rel, "well_definedness_failures": bad_wd,
            "associativity_failures": bad_assoc, "equivariance_failures": bad_equiv,
            "axiom_checks": checked, "graded_dims": dims, "dimension_mismatches": dim_bad,
            "ok": not (bad_rel or bad_wd or bad_assoc or bad_equiv or dim_bad)}


def _generator_trees(r: int, n: int, framed: bool) -> list:
    out = [(1, ("t", i, j)) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    if framed:
        out += [(1, ("c", name, a)) for name in framed_names(n) for a in range(1, r + 1)]
    return out
