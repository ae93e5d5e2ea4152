"""Torus-equivariant forms on the sphere in simplex/angle coordinates.

Points of the sphere are written with squared radii ``sig_j`` (summing to 1)
and angles ``phi_j``.  For odd ``n`` there is an extra real coordinate whose
square is ``sig_0``; it is called ``s`` and ``sig_0`` is always rewritten as
``s^2``.  Coefficients are polynomials in these coordinates, the equivariant
parameters ``u_j``, the symbol ``g`` (standing for the Gamma value at 1/2) and
the normalisation symbol ``C``.

Forms built on the cone over the simplex are restricted to the simplex with
:meth:`EqForm.on_simplex`, which eliminates the last squared radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

Mono = tuple   # sorted ((var, exp), ...)
Word = tuple   # sorted exterior generators


def _var_key(v: str):
    order = {"g": 0, "C": 1, "s": 2}
    if v in order:
        return (order[v], 0)
    prefix = v.rstrip("0123456789")
    rank = {"sig": 3, "u": 4}[prefix]
    return (rank, int(v[len(prefix):]))


def _dgen_key(d: str):
    if d == "ds":
        return (0, 0)
    prefix = d.rstrip("0123456789")
    return ({"dsig": 1, "dphi": 2}[prefix], int(d[len(prefix):]))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in out.items() if e), key=lambda t: _var_key(t[0])))


def _word_mul(a: Word, b: Word):
    """Concatenate and sort; returns ``(sign, word)`` or ``(0, None)``."""
    if set(a) & set(b):
        return 0, None
    seq = list(a) + list(b)
    sign = 1
    keys = [_dgen_key(x) for x in seq]
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                sign = -sign
    return sign, tuple(sorted(seq, key=_dgen_key))


@dataclass(frozen=True)
class Coordinates:
    """Index ranges for a given sphere dimension."""

    n: int

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def k(self) -> int:
        return (self.n - 1) // 2 if self.odd else self.n // 2

    @property
    def sigmas(self) -> range:
        """Indices of squared radii: ``0..k`` (odd) or ``0..k-1`` (even)."""
        return range(self.k + 1) if self.odd else range(self.k)

    @property
    def angles(self) -> range:
        return range(1, self.k + 1) if self.odd else range(self.k)

    @property
    def last(self) -> int:
        return self.sigmas[-1]


class EqForm:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict = {}
        for (mono, word), c in (terms or {}).items():
            self._acc(mono, word, Fraction(c))

    # -- construction
    @classmethod
    def const(cls, n: int, c=1) -> "EqForm":
        return cls(n, {((), ()): c})

    @classmethod
    def var(cls, n: int, name: str, power: int = 1) -> "EqForm":
        if name == "sig0" and n % 2:
            return cls(n, {((("s", 2 * power),), ()): 1})
        return cls(n, {(((name, power),), ()): 1})

    @classmethod
    def dgen(cls, n: int, name: str) -> "EqForm":
        if name == "dsig0" and n % 2:
            return cls(n, {((("s", 1),), ("ds",)): 2})
        return cls(n, {((), (name,)): 1})

    def _acc(self, mono, word, c) -> None:
        key = (mono, word)
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    # -- arithmetic
    def __add__(self, other: "EqForm") -> "EqForm":
        out = EqForm(self.n, self.terms)
        for (m, w), c in other.terms.items():
            out._acc(m, w, c)
        return out

    def __neg__(self) -> "EqForm":
        return self.scale(-1)

    def __sub__(self, other: "EqForm") -> "EqForm":
        return self + (-other)

    def scale(self, c) -> "EqForm":
        return EqForm(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "EqForm":
        if not isinstance(other, EqForm):
            return self.scale(other)
        out = EqForm(self.n)
        for (m1, w1), c1 in self.terms.items():
            for (m2, w2), c2 in other.terms.items():
                sign, w = _word_mul(w1, w2)
                if sign:
                    out._acc(_mono_mul(m1, m2), w, sign * c1 * c2)
        return out

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, EqForm) and self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        """Total degrees, counting ``u`` with weight 2."""
        out = set()
        for (m, w) in self.terms:
            out.add(len(w) + 2 * sum(e for v, e in m if v.startswith("u")))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (m, w), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0])):
            factors = [f"{v}^{e}" if e != 1 else v for v, e in m] + list(w)
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    # -- restriction to the simplex
    def on_simplex(self) -> "EqForm":
        """Substitute the last squared radius and its differential."""
        co = Coordinates(self.n)
        j = co.last
        others = [i for i in co.sigmas if i != j]
        rest = EqForm.const(self.n)
        drest = EqForm(self.n)
        for i in others:
            rest = rest - EqForm.var(self.n, f"sig{i}")
            drest = drest - EqForm.dgen(self.n, f"dsig{i}")
        name, dname = f"sig{j}", f"dsig{j}"
        out = EqForm(self.n)
        for (m, w), c in self.terms.items():
            term = EqForm.const(self.n, c)
            for v, e in m:
                term = term * (rest ** e if v == name else EqForm.var(self.n, v, e))
            for d in w:
                term = term * (drest if d == dname else EqForm.dgen(self.n, d))
            out = out + term
        return out

    def __pow__(self, e: int) -> "EqForm":
        out = EqForm.const(self.n)
        for _ in range(e):
            out = out * self
        return out

    # -- derivations
    def _derivation(self, on_gen) -> "EqForm":
        """Apply the degree -1 derivation given on exterior generators."""
        out = EqForm(self.n)
        for (m, w), c in self.terms.items():
            for pos, d in enumerate(w):
                img = on_gen(d)
                if img is None or img.is_zero():
                    continue
                sign = -1 if pos % 2 else 1
                left = EqForm(self.n, {(m, w[:pos]): c * sign})
                right = EqForm(self.n, {((), w[pos + 1:]): 1})
                out = out + left * img * right
        return out

    def d(self) -> "EqForm":
        out = EqForm(self.n)
        for (m, w), c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                if v not in ("s",) and not v.startswith("sig"):
                    continue
                rest = m[:idx] + ((v, e - 1),) + m[idx + 1:]
                rest = tuple((x, y) for x, y in rest if y)
                dv = EqForm.dgen(self.n, "ds" if v == "s" else "d" + v)
                out = out + EqForm(self.n, {(rest, ()): c * e}) * dv * EqForm(self.n, {((), w): 1})
        return out


def half_factorial(twice_x: int) -> tuple:
    """``x!`` for ``x = twice_x / 2`` as ``(rational, power of g)``."""
    if twice_x % 2 == 0:
        val = Fraction(1)
        for i in range(2, twice_x // 2 + 1):
            val *= i
        return val, 0
    val = Fraction(1)
    x = Fraction(twice_x, 2)
    while x > Fraction(-1, 2):
        val *= x
        x -= 1
    return val, 1


def contract_euler(w: EqForm) -> EqForm:
    """Contraction with the radial field on the cone over the simplex."""
    n = w.n

    def on_gen(d):
        if d == "ds":
            return EqForm(n, {((("s", 1),), ()): Fraction(1, 2)})
        if d.startswith("dsig"):
            return EqForm.var(n, d[1:])
        return None
    return w._derivation(on_gen)


def contract_angle(w: EqForm, j: int) -> EqForm:
    name = f"dphi{j}"
    return w._derivation(lambda d: EqForm.const(w.n) if d == name else None)


def d_u(w: EqForm) -> EqForm:
    """Equivariant differential ``d + sum_j u_j i_j``, restricted to the simplex."""
    out = w.d()
    for j in Coordinates(w.n).angles:
        out = out + EqForm.var(w.n, f"u{j}") * contract_angle(w, j)
    return out.on_simplex()


def build_propagator(n: int) -> EqForm:
    """The equivariant volume form with ``C`` kept symbolic, on the simplex."""
    if n < 2:
        raise ValueError("need n >= 2")
    co = Coordinates(n)
    idx = list(co.angles)
    C = EqForm.var(n, "C")
    total = EqForm(n)
    for size in range(len(idx) + 1):
        for K in combinations(idx, size):
            comp = [j for j in idx if j not in K]
            if not co.odd and not comp:
                continue
            twice = 2 * len(comp) - 1 if co.odd else 2 * (len(comp) - 1)
            val, gpow = half_factorial(twice)
            term = EqForm.const(n, val)
            if gpow:
                term = term * EqForm.var(n, "g")
            for j in K:
                term = term * EqForm.var(n, f"u{j}")
            for j in comp:
                term = term * EqForm.dgen(n, f"dphi{j}") * EqForm.dgen(n, f"dsig{j}")
            total = total + term
    if co.odd:
        total = EqForm.dgen(n, "ds") * total
    return (C * contract_euler(total)).on_simplex()


def euler_term(n: int) -> EqForm:
    """``-C u_0 ... u_(k-1)``, the expected even-dimensional defect."""
    out = EqForm.const(n, -1) * EqForm.var(n, "C")
    for j in Coordinates(n).angles:
        out = out * EqForm.var(n, f"u{j}")
    return out


def north_pole(w: EqForm) -> EqForm:
    """Value at ``sig_0 = 1``: set ``s = 1``, the other radii to 0, drop differentials."""
    if w.n % 2 == 0:
        raise ValueError("the north-pole evaluation is defined for odd n")
    out = EqForm(w.n)
    for (m, word), c in w.terms.items():
        if word or any(v.startswith("sig") for v, _ in m):
            continue
        out._acc(tuple((v, e) for v, e in m if v != "s"), (), c)
    return out


@dataclass(frozen=True)
class Transcendental:
    """``coeff * pi^pi_power * g^g_power * u-monomial`` with ``g^2 = pi``."""

    coeff: Fraction
    pi_power: int
    g_power: int
    u: tuple

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.pi_power:
            parts.append(f"pi^{self.pi_power}")
        if self.g_power:
            parts.append("sqrt(pi)")
        parts += [f"{v}^{e}" if e != 1 else v for v, e in self.u]
        return "*".join(parts)


def substitute_normalization(value: EqForm) -> list:
    """Replace ``C`` by its value, then reduce ``g^2`` to ``pi``."""
    co = Coordinates(value.n)
    out = []
    for (m, _), c in sorted(value.terms.items()):
        exps = dict(m)
        cpow = exps.pop("C", 0)
        gpow = exps.pop("g", 0)
        coeff = Fraction(c) / Fraction(2 ** co.k) ** cpow
        pi_power = -co.k * cpow
        if co.odd:
            gpow -= cpow
        pi_power += gpow // 2
        gpow %= 2
        u = tuple((v, e) for v, e in m if v.startswith("u"))
        out.append(Transcendental(coeff, pi_power, gpow, u))
    return out


def lemma_value(n: int) -> Transcendental:
    """``u_1...u_k / (2 (2 pi)^k)``."""
    co = Coordinates(n)
    return Transcendental(Fraction(1, 2 * 2 ** co.k), -co.k, 0,
                          tuple((f"u{j}", 1) for j in co.angles))


def check(n: int) -> dict:
    """Equivariant-closedness report for the propagator."""
    omega = build_propagator(n)
    du = d_u(omega)
    expected = EqForm(n) if n % 2 else euler_term(n)
    residual = du - expected
    report = {"n": n, "identity": "closed" if n % 2 else "euler",
              "propagator_terms": len(omega.terms),
              "residual_terms": len(residual.terms), "d_u": str(du)}
    if n % 2:
        np_val = north_pole(omega)
        report["north_pole"] = str(np_val)
        subst = substitute_normalization(np_val)
        report["north_pole_substituted"] = " + ".join(map(str, subst))
        report["north_pole_matches"] = subst == [lemma_value(n)]
    return report
