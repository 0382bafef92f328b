"""Finite fields GF(p^m) and the quadratic tower GF(q) < GF(q^2).

Elements are plain integers. In GF(p^m) the base-p digits of an integer are
the coefficients of a polynomial in the generator x (constant term in the
least significant digit). In GF(q^2) = GF(q)[y]/(f) the element a + b*y is
stored as a + b*q, so every element of GF(q) keeps its own integer inside
the larger field.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Sequence

import numpy as np

MAX_FIELD_ORDER = 1 << 16
MAX_TOP_ORDER = 1 << 22


class FieldError(ValueError):
    """Invalid field parameters."""


class FieldMismatchError(TypeError):
    """Arithmetic between elements of unrelated fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m, or None when q is not a prime power."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    m = round(math.log(q, p[0]))
    for mm in (m - 1, m, m + 1):
        if mm >= 1 and p[0] ** mm == q:
            return p[0], mm
    return None


# -- polynomials over GF(p) as coefficient lists, low degree first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result, base = [1], _pmod(list(a), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin test for a polynomial over GF(p), coefficients low degree first."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p ** m, f, p) != _pmod(x, f, p):
        return False
    for r in prime_factors(m):
        h = _ppowmod(x, p ** (m // r), f, p)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else h
        h[1] = (h[1] - 1) % p
        g = _pgcd(f, _trim(h), p)
        if len(g) != 1:
            return False
    return True


def conway_free_modulus(p: int, m: int) -> tuple[int, ...]:
    """First irreducible monic degree-m polynomial in ascending encoding order."""
    if m == 1:
        return (0, 1)
    for code in range(p ** m):
        coeffs = [(code // p ** i) % p for i in range(m)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# -- field element wrapper ---------------------------------------------------

class FieldElement:
    """An integer-encoded element bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: GaloisField, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise FieldError(f"{value} is not an element of GF({field.q})")
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.value
            raise FieldMismatchError(
                f"cannot combine GF({self.field.q}) with GF({other.field.q})")
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field.from_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


# -- shared field machinery -------------------------------------------------

class GaloisField:
    """Log/exp arithmetic on integer encodings; subclasses supply the rest."""

    p: int
    q: int

    def _init_tables(self) -> None:
        order = self.q - 1
        g = self._find_primitive()
        exp = [0] * (2 * order)
        x = 1
        for i in range(order):
            exp[i] = x
            x = self._raw_mul(x, g)
        if x != 1:
            raise FieldError("primitive element search failed")
        exp[order:] = exp[:order]
        log = [0] * self.q
        for i in range(order):
            log[exp[i]] = i
        if len(set(exp[:order])) != order:
            raise FieldError("exp table is not a permutation")
        self.primitive = g
        self._exp = exp
        self._log = log

    def _find_primitive(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        factors = prime_factors(order)
        for g in range(2, self.q):
            if all(self._raw_pow(g, order // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element found")

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    # arithmetic on encodings
    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def log(self, a: int) -> int:
        """Discrete log to the base of the primitive element."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        return (self.q - 1) // math.gcd(self.log(a), self.q - 1)

    def from_int(self, t: int) -> int:
        """The image of an integer t under Z -> GF(p)."""
        return t % self.p

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def sum(self, values: Iterable[int]) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    # numpy tables for vectorised linear algebra
    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        lg = np.asarray(self._log, dtype=np.int64)
        ex = np.asarray(self._exp, dtype=np.int32)
        t = ex[lg[:, None] + lg[None, :]]
        t[0, :] = 0
        t[:, 0] = 0
        t.setflags(write=False)
        return t

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        t = self._build_add_table()
        t.setflags(write=False)
        return t

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        t = np.asarray([self.neg(a) for a in range(self.q)], dtype=np.int32)
        t.setflags(write=False)
        return t

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int32)
        for a in range(1, self.q):
            t[a] = self.inv(a)
        t.setflags(write=False)
        return t

    @functools.cached_property
    def add_rows(self) -> list[list[int]]:
        """Addition table as nested lists, for fast scalar loops."""
        return self.add_table.tolist()

    @functools.cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul_table.tolist()


class FieldContext(GaloisField):
    """GF(p^m) in a polynomial basis over GF(p)."""

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("degree must be at least 1")
        if p ** m > MAX_FIELD_ORDER:
            raise FieldError(f"GF({p}^{m}) exceeds the supported order")
        self.p, self.m, self.q = p, m, p ** m
        if modulus is None:
            modulus = conway_free_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if m > 1 and not is_irreducible_mod_p(modulus, p):
            raise FieldError("modulus is reducible")
        self.modulus = modulus
        self.characteristic = p
        self._init_tables()

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.m)]

    def _undigits(self, d: Sequence[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def _raw_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        r = _pmulmod(self._digits(a), self._digits(b), list(self.modulus), self.p)
        return self._undigits(r)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self.q <= 2048:
            return self.add_rows[a][b]
        return self._undigits([(x + y) % self.p for x, y in
                               zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        return self._undigits([-x % self.p for x in self._digits(a)])

    def _build_add_table(self) -> np.ndarray:
        idx = np.arange(self.q, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.outer(idx, idx).astype(np.int32)
        pw = self.p ** np.arange(self.m, dtype=np.int64)
        dig = (idx[:, None] // pw[None, :]) % self.p
        s = (dig[:, None, :] + dig[None, :, :]) % self.p
        return (s * pw).sum(axis=2).astype(np.int32)

    def __eq__(self, other):
        return (type(other) is FieldContext and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldContext(p={self.p}, m={self.m}, modulus={self.modulus})"


class ExtensionField(GaloisField):
    """GF(Q^2) built as GF(Q)[y]/(y^2 + c1*y + c0); a + b*y is a + b*Q."""

    def __init__(self, base: GaloisField, f: tuple[int, int, int]):
        self.base = base
        self.p = base.p
        self.Q = base.q
        self.q = base.q ** 2
        if self.q > MAX_TOP_ORDER:
            raise FieldError(f"GF({self.q}) exceeds the supported order")
        self.f = tuple(f)
        self.characteristic = base.p
        self._nc0 = base.neg(f[0])
        self._nc1 = base.neg(f[1])
        self._init_tables()

    def _raw_mul(self, x: int, y: int) -> int:
        B, Q = self.base, self.Q
        a1, b1 = x % Q, x // Q
        a2, b2 = y % Q, y // Q
        lo = B.mul(a1, a2)
        mid = B.add(B.mul(a1, b2), B.mul(a2, b1))
        hi = B.mul(b1, b2)
        # y^2 = -c0 - c1*y
        lo = B.add(lo, B.mul(hi, self._nc0))
        mid = B.add(mid, B.mul(hi, self._nc1))
        return lo + Q * mid

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        B, Q = self.base, self.Q
        return B.add(x % Q, y % Q) + Q * B.add(x // Q, y // Q)

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        B, Q = self.base, self.Q
        return B.neg(x % Q) + Q * B.neg(x // Q)

    def _build_add_table(self) -> np.ndarray:
        idx = np.arange(self.q, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.outer(idx, idx).astype(np.int32)
        bt = self.base.add_table.astype(np.int64)
        lo, hi = idx % self.Q, idx // self.Q
        return (bt[lo[:, None], lo[None, :]]
                + self.Q * bt[hi[:, None], hi[None, :]]).astype(np.int32)

    def is_base(self, x: int) -> bool:
        return x < self.Q

    def __eq__(self, other):
        return (type(other) is ExtensionField and self.base == other.base
                and self.f == other.f)

    def __hash__(self):
        return hash(("GF2", hash(self.base), self.f))

    def __repr__(self):
        return f"ExtensionField(GF({self.Q})^2, f={self.f})"


class TowerContext:
    """GF(q) inside GF(q^2) with a primitive alpha and beta = alpha^(q-1)."""

    def __init__(self, base: GaloisField):
        self.base = base
        self.q = base.q
        self.f = _first_irreducible_quadratic(base)
        self.top = ExtensionField(base, self.f)
        self.alpha = self.top.primitive
        self.beta = self.top.pow(self.alpha, self.q - 1)
        self._beta_pows = [self.top.pow(self.beta, i) for i in range(self.q + 1)]

    def beta_pow(self, i: int) -> int:
        return self._beta_pows[i % (self.q + 1)]

    def frobenius(self, x: int) -> int:
        return self.top.pow(x, self.q)

    def trace(self, x: int) -> int:
        """x + x^q, returned as an element of the base field."""
        t = self.top.add(x, self.frobenius(x))
        if not self.top.is_base(t):
            raise FieldError("trace left the base field")
        return t

    def norm(self, x: int) -> int:
        return self.top.mul(x, self.frobenius(x))

    def embed(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not in GF({self.q})")
        return a

    def __repr__(self):
        return f"TowerContext(GF({self.q}) < GF({self.q ** 2}), f={self.f})"


def _first_irreducible_quadratic(base: GaloisField) -> tuple[int, int, int]:
    """First y^2 + c1*y + c0 with no root in the base field, scanning c0 + c1*q."""
    q = base.q
    for code in range(q, q * q):
        c0, c1 = code % q, code // q
        if c0 == 0:
            continue
        roots = False
        for t in range(q):
            v = base.add(base.add(base.mul(t, t), base.mul(c1, t)), c0)
            if v == 0:
                roots = True
                break
        if not roots:
            return (c0, c1, 1)
    raise FieldError("no irreducible quadratic found")


@functools.lru_cache(maxsize=None)
def build_field(p: int, m: int) -> FieldContext:
    """GF(p^m) with the first irreducible monic modulus; cached per (p, m)."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError("degree must be a positive integer")
    if p ** m > MAX_FIELD_ORDER:
        raise FieldError(f"GF({p}^{m}) exceeds the supported order")
    return FieldContext(p, m)


def field_of_order(q: int) -> FieldContext:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"{q} is not a prime power")
    return build_field(*pm)


def build_tower(base: GaloisField | int) -> TowerContext:
    """GF(q) < GF(q^2) with alpha primitive in GF(q^2); base is a field or its order."""
    q = base.q if isinstance(base, GaloisField) else int(base)
    if q <= 2:
        raise FieldError("the tower needs q > 2")
    if isinstance(base, FieldContext) and base != field_of_order(q):
        return TowerContext(base)
    return _tower_of_order(q)


@functools.lru_cache(maxsize=None)
def _tower_of_order(q: int) -> TowerContext:
    return TowerContext(field_of_order(q))


def trace_to_base(x: FieldElement) -> FieldElement:
    """Tr(x) = x + x^q for x in GF(q^2), as an element of GF(q)."""
    top = x.field
    if not isinstance(top, ExtensionField):
        raise FieldError("trace_to_base expects an element of a quadratic extension")
    t = top.add(x.value, top.pow(x.value, top.Q))
    if t >= top.Q:
        raise FieldError("trace left the base field")
    return FieldElement(top.base, t)


def unit_circle(tower: TowerContext) -> list[FieldElement]:
    """The q+1 elements of norm one, [beta^0, ..., beta^q]."""
    return [FieldElement(tower.top, tower.beta_pow(i)) for i in range(tower.q + 1)]
