"""Characteristic-class coefficient rings and their restriction maps.

Rings are polynomial rings in even-degree generators: Pontryagin classes
``p4, p8, ...``, an Euler class ``E`` and the circle Euler class ``u``.
Generators listed as localized may carry negative exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    z2_sign: int = 1


@dataclass(frozen=True)
class CharClassRing:
    label: str
    generators: tuple
    localized: frozenset = field(default_factory=frozenset)

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingError(f"{name!r} is not a generator of {self.label}") from None

    def gen(self, name: str) -> "RingElem":
        exp = [0] * len(self.generators)
        exp[self.index(name)] = 1
        return RingElem(self, {tuple(exp): Fraction(1)})

    def one(self) -> "RingElem":
        return RingElem(self, {(0,) * len(self.generators): Fraction(1)})

    def zero(self) -> "RingElem":
        return RingElem(self, {})

    def const(self, c) -> "RingElem":
        return self.one() * Fraction(c)

    def monomial(self, exps: dict, coeff=1) -> "RingElem":
        exp = [0] * len(self.generators)
        for name, k in exps.items():
            exp[self.index(name)] += k
        return RingElem(self, {tuple(exp): Fraction(coeff)})

    def localize(self, *names) -> "CharClassRing":
        for nm in names:
            self.index(nm)
        return CharClassRing(self.label + "".join(f"[{nm}^-1]" for nm in names),
                             self.generators, self.localized | frozenset(names))

    def parse(self, text: str) -> "RingElem":
        return parse_elem(self, text)


def _pont(k_top: int) -> list:
    return [Generator(f"p{4 * j}", 4 * j) for j in range(1, k_top + 1)]


def _so_gens(n: int, suffix: str = "") -> list:
    if n < 1:
        raise RingError("n must be positive")
    if n == 1:
        return []
    if n % 2:
        gens = _pont((n - 1) // 2)
    else:
        gens = _pont(n // 2 - 1) + [Generator("E", n, -1)]
    return [Generator(g.name + suffix, g.degree, g.z2_sign) for g in gens]


_DESC = re.compile(r"^(SO|O)\((\d+)\)(?:x(SO)\((\d+)\))?$")


@lru_cache(maxsize=None)
def make_ring(descriptor: str, localized: tuple = ()) -> CharClassRing:
    """Ring for ``SO(n)``, ``O(n)`` or ``SO(k)xSO(l)``.

    In a product the first factor's classes carry suffix ``_1``, except that a
    first factor ``SO(2)`` contributes its Euler class as ``u``.
    """
    d = descriptor.replace(" ", "").replace("×", "x")
    m = _DESC.match(d)
    if not m:
        raise RingError(f"unsupported descriptor {descriptor!r}")
    group, a, _, b = m.groups()
    a = int(a)
    if b is None:
        if a < 2:
            raise RingError("n must be at least 2")
        if group == "SO":
            gens = _so_gens(a)
        elif a % 2:
            gens = _so_gens(a)
        else:
            gens = _pont(a // 2)
    else:
        if group != "SO":
            raise RingError(f"unsupported descriptor {descriptor!r}")
        b = int(b)
        first = [Generator("u", 2, -1)] if a == 2 else _so_gens(a, "_1")
        gens = first + _so_gens(b)
    ring = CharClassRing(d, tuple(gens))
    if localized:
        ring = ring.localize(*localized)
    return ring


def o_ring_inclusion(n: int):
    """Map H(BO(n)) -> H(BSO(n)); the top class goes to E^2 for even n."""
    src, dst = make_ring(f"O({n})"), make_ring(f"SO({n})")
    images = {}
    for g in src.generators:
        if n % 2 == 0 and g.degree == 2 * n:
            images[g.name] = dst.gen("E") ** 2
        else:
            images[g.name] = dst.gen(g.name)
    return RingMap(src, dst, images)


class RingElem:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: CharClassRing, terms: dict):
        self.ring = ring
        self.terms = {k: Fraction(v) for k, v in terms.items() if v}
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e < 0 and ring.generators[i].name not in ring.localized:
                    raise RingError(f"negative power of non-localized {ring.generators[i].name}")

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring.generators != self.ring.generators:
                raise RingError("elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def _wider(self, other: "RingElem") -> CharClassRing:
        return self.ring if len(self.ring.localized) >= len(other.ring.localized) else other.ring

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return RingElem(self._wider(other), terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElem(self.ring, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                terms[k] = terms.get(k, 0) + v1 * v2
        return RingElem(self._wider(other), terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "RingElem":
        if len(self.terms) != 1:
            raise RingError("only monomials are invertible")
        (exp, c), = self.terms.items()
        return RingElem(self.ring, {tuple(-e for e in exp): 1 / c})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring.generators == other.ring.generators and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.generators, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # structure ------------------------------------------------------------
    def monomial_degree(self, exp) -> int:
        return sum(e * g.degree for e, g in zip(exp, self.ring.generators))

    def degrees(self) -> set:
        return {self.monomial_degree(k) for k in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise RingError("inhomogeneous element")
        return degs.pop() if degs else 0

    def homogeneous_part(self, deg: int) -> "RingElem":
        return RingElem(self.ring, {k: v for k, v in self.terms.items()
                                    if self.monomial_degree(k) == deg})

    def power_of(self, name: str) -> set:
        i = self.ring.index(name)
        return {k[i] for k in self.terms}

    def coefficient(self, exps: dict) -> Fraction:
        exp = [0] * len(self.ring.generators)
        for name, k in exps.items():
            exp[self.ring.index(name)] = k
        return self.terms.get(tuple(exp), Fraction(0))

    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"RingElem({format_elem(self)!r})"


# ---------------------------------------------------------------- text format

def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_elem(x: RingElem) -> str:
    if not x.terms:
        return "0"
    parts = []
    for exp in sorted(x.terms, reverse=True):
        c = x.terms[exp]
        factors = []
        for g, e in zip(x.ring.generators, exp):
            if e == 1:
                factors.append(g.name)
            elif e:
                factors.append(f"{g.name}^{e}")
        mono = "*".join(factors)
        body = _frac(abs(c)) + ("*" + mono if mono else "")
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


def parse_elem(ring: CharClassRing, text: str) -> RingElem:
    text = text.strip()
    out = ring.zero()
    if text == "0":
        return out
    tokens = re.findall(r"[^\s+\-]+|[+-]", text.replace("^-", "^~"))
    sign = 1
    for tok in tokens:
        if tok == "+":
            continue
        if tok == "-":
            sign = -sign
            continue
        term = ring.const(sign)
        sign = 1
        for factor in tok.replace("^~", "^-").split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                term = term * Fraction(factor)
            else:
                name, _, power = factor.partition("^")
                term = term * ring.monomial({name: int(power) if power else 1})
        out = out + term
    return out


# ---------------------------------------------------------------- morphisms

class RingMap:
    """Ring morphism determined by generator images."""

    def __init__(self, src: CharClassRing, dst: CharClassRing, images: dict):
        self.src, self.dst = src, dst
        self.images = [images[g.name] for g in src.generators]

    def __call__(self, x) -> RingElem:
        if isinstance(x, (int, Fraction)):
            return self.dst.const(x)
        out = self.dst.zero()
        for exp, c in x.terms.items():
            term = self.dst.const(c)
            for img, e in zip(self.images, exp):
                if e:
                    term = term * (img ** e)
            out = out + term
        return out


def restriction_map(n: int, target: str, localized: bool = False) -> RingMap:
    """Restriction from H(BSO(n)).

    ``target`` is ``"2,n-2"`` for SO(2) x SO(n-2) or ``"n-1"`` for SO(n-1).
    With ``localized`` the circle class is inverted and the top generator of
    the target is exchanged for the image of the top source class.
    """
    src = make_ring(f"SO({n})")
    P = lambda ring, j: ring.one() if j == 0 else ring.gen(f"p{j}")
    if target == "n-1":
        if n < 3:
            raise RingError("map undefined for this ring")
        dst = make_ring(f"SO({n - 1})")
        images = {}
        for g in src.generators:
            if g.name == "E":
                images["E"] = dst.zero()
            elif n % 2 and g.degree == 2 * n - 2:
                images[g.name] = dst.gen("E") ** 2
            else:
                images[g.name] = dst.gen(g.name)
        return RingMap(src, dst, images)
    if target != "2,n-2":
        raise RingError(f"unsupported restriction target {target!r}")
    if n < 3:
        raise RingError("map undefined for this ring")
    base = make_ring(f"SO(2)xSO({n - 2})")
    u = base.gen("u")
    images = {}
    if not localized:
        dst = base
        for g in src.generators:
            j = g.degree
            if g.name == "E":
                images["E"] = u * (dst.gen("E") if n - 2 >= 2 else dst.one())
            elif n % 2 == 0 and j == 2 * n - 4:
                e_low = dst.gen("E") if n - 2 >= 2 else dst.zero()
                images[g.name] = u ** 2 * P(dst, 2 * n - 8) + e_low ** 2
            elif n % 2 and j == 2 * n - 2:
                images[g.name] = u ** 2 * P(dst, 2 * n - 6)
            else:
                images[g.name] = u ** 2 * P(dst, j - 4) + P(dst, j)
        return RingMap(src, dst, images)
    return _localized_restriction(n, src, base)


def _localized_restriction(n: int, src: CharClassRing, base: CharClassRing) -> RingMap:
    gens = []
    for g in base.generators:
        if n % 2 == 0 and g.name == "E":
            gens.append(Generator("E", n, -1))
        elif n % 2 and n >= 5 and g.name == f"p{2 * n - 6}":
            gens.append(Generator(f"p{2 * n - 2}", 2 * n - 2))
        else:
            gens.append(g)
    dst = CharClassRing(f"SO(2)xSO({n - 2})[u^-1]*", tuple(gens), frozenset({"u"}))
    u = dst.gen("u")
    P = lambda j: dst.one() if j == 0 else dst.gen(f"p{j}")
    images = {}
    for g in src.generators:
        j = g.degree
        if g.name == "E":
            images["E"] = dst.gen("E")
        elif n % 2 == 0 and j == 2 * n - 4:
            images[g.name] = u ** 2 * P(2 * n - 8) + u ** -2 * dst.gen("E") ** 2
        elif n % 2 and j == 2 * n - 2:
            images[g.name] = dst.gen(g.name) if n >= 5 else u ** 2
        elif n % 2 and n >= 5 and j == 2 * n - 6:
            images[g.name] = u ** 2 * P(2 * n - 10) + u ** -2 * dst.gen(f"p{2 * n - 2}")
        else:
            images[g.name] = u ** 2 * P(j - 4) + P(j)
    return RingMap(src, dst, images)


def restrict(x: RingElem, n: int, target: str, localized: bool = False) -> RingElem:
    return restriction_map(n, target, localized)(x)


def z2_act(x):
    """Negate generators with odd sign (Euler classes); fix the rest."""
    if isinstance(x, (int, Fraction)):
        return x
    terms = {}
    for exp, c in x.terms.items():
        s = 1
        for g, e in zip(x.ring.generators, exp):
            if g.z2_sign < 0 and e % 2:
                s = -s
        terms[exp] = c * s
    return RingElem(x.ring, terms)


def localize_at(x: RingElem, generator: str) -> RingElem:
    """Image of ``x`` in the ring with ``generator`` inverted."""
    ring = x.ring.localize(generator) if generator not in x.ring.localized else x.ring
    return RingElem(ring, x.terms)
