"""Dense univariate polynomials over a GaloisField, plus cyclotomic cosets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import ExtensionField, FieldElement, FieldError, GaloisField, TowerContext


def _strip(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Polynomial with integer-encoded coefficients, constant term first.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GaloisField, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < field.q:
                raise FieldError(f"coefficient {c} not in GF({field.q})")
        self.field = field
        self.coeffs = _strip(cs)

    @classmethod
    def monomial(cls, field: GaloisField, deg: int, c: int = 1) -> Poly:
        return cls(field, [0] * deg + [c])

    @classmethod
    def one(cls, field: GaloisField) -> Poly:
        return cls(field, [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def _check(self, other: Poly) -> None:
        if not (other.field is self.field or other.field == self.field):
            raise FieldError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> Poly:
        return Poly(self.field, [self.field.mul(c, x) for x in self.coeffs])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    def reciprocal(self) -> Poly:
        """x^deg f(1/x)."""
        return Poly(self.field, list(reversed(self.coeffs)))


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division f = q*g + r with deg r < deg g."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = f.field
    r = list(f.coeffs)
    dg = g.degree
    inv = F.inv(g.lead)
    quo = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = F.mul(r[-1], inv)
        s = len(r) - 1 - dg
        quo[s] = c
        for i, gi in enumerate(g.coeffs):
            if gi:
                r[s + i] = F.sub(r[s + i], F.mul(c, gi))
        while r and r[-1] == 0:
            r.pop()
    return Poly(F, quo), Poly(F, r)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly(f.field, [])
    return (f * g // poly_gcd(f, g)).monic()


def poly_product(field: GaloisField, polys: Iterable[Poly]) -> Poly:
    out = Poly.one(field)
    for p in polys:
        out = out * p
    return out


def _embeds(small: GaloisField, big: GaloisField) -> bool:
    if small is big or small == big:
        return True
    return isinstance(big, ExtensionField) and (big.base is small or big.base == small)


def evaluate(f: Poly, x) -> FieldElement:
    """Horner evaluation; x may lie in a quadratic extension of f's field."""
    if isinstance(x, FieldElement):
        K, v = x.field, x.value
    else:
        K, v = f.field, f.field.from_int(int(x))
    if not _embeds(f.field, K):
        raise FieldError("evaluation point is not in an extension of the coefficient field")
    acc = 0
    for c in reversed(f.coeffs):
        acc = K.add(K.mul(acc, v), c)
    return FieldElement(K, acc)


@dataclass(frozen=True)
class CyclotomicCoset:
    """The q-cyclotomic coset {s q^j mod n}; leader is its smallest member."""

    leader: int
    members: tuple[int, ...]
    n: int
    q: int

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i % self.n in self.members


def cyclotomic_coset(s: int, n: int, q: int) -> CyclotomicCoset:
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    s %= n
    seen, x = [], s
    while x not in seen:
        seen.append(x)
        x = x * q % n
    return CyclotomicCoset(min(seen), tuple(sorted(seen)), n, q)


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    out, covered = [], set()
    for s in range(n):
        if s not in covered:
            c = cyclotomic_coset(s, n, q)
            covered.update(c.members)
            out.append(c)
    return out


def minimal_polynomial(tower: TowerContext, s: int) -> Poly:
    """Minimal polynomial of beta^s over GF(q), as a polynomial over GF(q)."""
    q = tower.q
    coset = cyclotomic_coset(s, q + 1, q)
    top = tower.top
    acc = [1]
    for i in coset.members:
        root = top.neg(tower.beta_pow(i))
        nxt = [0] * (len(acc) + 1)
        for j, a in enumerate(acc):
            nxt[j + 1] = top.add(nxt[j + 1], a)
            nxt[j] = top.add(nxt[j], top.mul(a, root))
        acc = nxt
    for c in acc:
        if not top.is_base(c):
            raise FieldError("minimal polynomial has coefficients outside GF(q)")
    return Poly(tower.base, acc)


def roots_in(f: Poly, tower: TowerContext, candidates: Sequence[int]) -> list[int]:
    """Exponents i among candidates with f(beta^i) = 0."""
    top = tower.top
    out = []
    for i in candidates:
        if evaluate(f, FieldElement(top, tower.beta_pow(i))).value == 0:
            out.append(i)
    return out
