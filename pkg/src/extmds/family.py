"""The codes C_u, their duals and extensions, and the narrow-sense BCH codes of length q+1.

With beta a primitive (q+1)-th root of unity in GF(q^2) and M_i the minimal
polynomial of beta^i over GF(q):

* C_u is cyclic with generator g_u = M_u M_{u+1} ... M_{floor((q+1)/2)};
* the BCH code of designed distance delta has generator lcm(M_1, ..., M_{delta-1});
* C(u) is cyclic with generator (x - 1) g_u and is the dual of the BCH code.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import CodeError, LinearCode
from .field import GaloisField, TowerContext, build_tower, prime_power
from .poly import Poly, cyclotomic_coset, minimal_polynomial, poly_divmod, poly_product


def x_n_minus_1(F: GaloisField, n: int) -> Poly:
    return Poly(F, [F.neg(1)] + [0] * (n - 1) + [1])


class CyclicCode(LinearCode):
    """A cyclic code with its generator polynomial g (monic, g | x^n - 1)."""

    def __init__(self, g: Poly, n: int, name: str | None = None):
        F = g.field
        if g.is_zero() or not g.is_monic():
            raise CodeError("generator polynomial must be monic and nonzero")
        if math.gcd(n, F.q) != 1:
            raise CodeError(f"length {n} is not coprime to q = {F.q}")
        if not poly_divmod(x_n_minus_1(F, n), g)[1].is_zero():
            raise CodeError("generator does not divide x^n - 1")
        deg = g.degree
        k = n - deg
        if k > 0:
            G = np.zeros((k, n), dtype=np.int64)
            for i in range(k):
                G[i, i:i + deg + 1] = g.coeffs
        else:
            G = np.zeros((0, n), dtype=np.int64)
        super().__init__(F, G, n=n, name=name)
        self.g = g

    @property
    def h(self) -> Poly:
        """Check polynomial (x^n - 1) / g."""
        return poly_divmod(x_n_minus_1(self.field, self.n), self.g)[0]

    def shift(self, v) -> np.ndarray:
        return np.roll(np.asarray(v, dtype=np.int64), 1)


def cyclic_from_generator(n: int, g: Poly) -> CyclicCode:
    return CyclicCode(g, n)


def max_u(q: int) -> int:
    return (q + 1) // 2


def _check_q(q: int) -> None:
    if prime_power(q) is None or q <= 2:
        raise CodeError(f"q = {q} must be a prime power greater than 2")


def _check_u(q: int, u: int, lo: int = 1) -> None:
    _check_q(q)
    if not lo <= u <= max_u(q):
        raise CodeError(f"u = {u} outside [{lo}, {max_u(q)}] for q = {q}")


def g_u(tower: TowerContext, u: int) -> Poly:
    q = tower.q
    return poly_product(tower.base, (minimal_polynomial(tower, i)
                                     for i in range(u, max_u(q) + 1)))


def code_Cu(q: int, u: int) -> CyclicCode:
    """C_u, an MDS [q+1, 2u-1, q-2u+3] code."""
    _check_u(q, u)
    return CyclicCode(g_u(build_tower(q), u), q + 1, name="C_u")


def bch_generator(tower: TowerContext, delta: int) -> Poly:
    q = tower.q
    leaders = sorted({cyclotomic_coset(i, q + 1, q).leader for i in range(1, delta)})
    return poly_product(tower.base, (minimal_polynomial(tower, s) for s in leaders))


def bch_narrow(q: int, delta: int) -> CyclicCode:
    """Narrow-sense BCH code of length q+1 and designed distance delta."""
    _check_q(q)
    if not 2 <= delta <= q + 1:
        raise CodeError(f"designed distance {delta} outside [2, {q + 1}]")
    return CyclicCode(bch_generator(build_tower(q), delta), q + 1, name="BCH")


def code_C_of_u(q: int, u: int) -> CyclicCode:
    """C(u): generator (x - 1) g_u, the dual of the BCH code of designed distance u."""
    _check_u(q, u, lo=2)
    tower = build_tower(q)
    F = tower.base
    g = Poly(F, [F.neg(1), 1]) * g_u(tower, u)
    return CyclicCode(g, q + 1, name="C(u)")


def is_reversible(C: LinearCode) -> bool:
    """True when C and its dual intersect trivially."""
    return C.is_reversible()


def delsarte_bch(q: int) -> LinearCode:
    """Trace description of the BCH code for q = 2^m and u = 2^(m-1) - 1.

    Codewords are (a + Tr(b beta^(u i) + c beta^((u+1) i)))_{i=0..q} with
    a in GF(q) and b, c in GF(q^2); this builds it from the five GF(q)-basis
    choices of (a, b, c).
    """
    pm = prime_power(q)
    if pm is None or pm[0] != 2 or pm[1] < 3:
        raise CodeError("the trace form is used only for q = 2^m with m >= 3")
    m = pm[1]
    u = 2 ** (m - 1) - 1
    tower = build_tower(q)
    top = tower.top
    y = q  # the element y in GF(q^2) = GF(q)[y]
    rows = []
    for a, b, c in [(1, 0, 0), (0, 1, 0), (0, y, 0), (0, 0, 1), (0, 0, y)]:
        rows.append(trace_codeword(tower, u, a, b, c))
    return LinearCode(tower.base, rows, n=q + 1, name="BCH (trace form)")


def trace_codeword(tower: TowerContext, u: int, a: int, b: int, c: int) -> list[int]:
    top, base = tower.top, tower.base
    out = []
    for i in range(tower.q + 1):
        inner = top.add(top.mul(b, tower.beta_pow(u * i)),
                        top.mul(c, tower.beta_pow((u + 1) * i)))
        out.append(base.add(a, tower.trace(inner)))
    return out


@dataclass
class FamilyInstance:
    """The six codes attached to one (q, u)."""

    q: int
    u: int
    tower: TowerContext
    c_u: CyclicCode
    c_u_dual: LinearCode
    ext: LinearCode
    ext_dual: LinearCode
    bch: CyclicCode | None
    c_of_u: CyclicCode | None
    diagram: dict[str, bool] = dc_field(default_factory=dict)

    @property
    def field(self) -> GaloisField:
        return self.tower.base

    def codes(self) -> dict[str, LinearCode]:
        out = {"C_u": self.c_u, "C_u_dual": self.c_u_dual, "ext": self.ext,
               "ext_dual": self.ext_dual}
        if self.bch is not None:
            out["bch"] = self.bch
            out["C(u)"] = self.c_of_u
        return out


def diagram_checks(inst: FamilyInstance) -> dict[str, bool]:
    """Inclusions and dualities tying the six codes together."""
    q, u, tower = inst.q, inst.u, inst.tower
    F = tower.base
    checks = {
        "dual_of_dual": inst.c_u_dual.dual() == inst.c_u,
        "ext_dual_pair": inst.ext.dual() == inst.ext_dual,
        "ext_length": inst.ext.n == q + 2 and inst.ext.k == inst.c_u.k,
    }
    lower = poly_product(F, (minimal_polynomial(tower, i) for i in range(1, u)))
    whole = inst.c_u.g * Poly(F, [F.neg(1), 1]) * lower
    checks["generator_complement"] = whole == x_n_minus_1(F, q + 1)
    if inst.bch is not None:
        checks["C(u)_in_C_u"] = inst.c_of_u.subcode_of(inst.c_u)
        checks["augment_C(u)_is_C_u"] = inst.c_of_u.augment() == inst.c_u
        checks["C(u)_is_bch_dual"] = inst.c_of_u == inst.bch.dual()
        checks["C_u_dual_in_bch"] = inst.c_u_dual.subcode_of(inst.bch)
    return checks


@functools.lru_cache(maxsize=256)
def build_family(q: int, u: int) -> FamilyInstance:
    """Construct the six codes for (q, u) and verify how they relate."""
    _check_u(q, u)
    tower = build_tower(q)
    c_u = code_Cu(q, u)
    ext = c_u.extend().named("ext")
    inst = FamilyInstance(
        q=q, u=u, tower=tower, c_u=c_u, c_u_dual=c_u.dual().named("C_u_dual"),
        ext=ext, ext_dual=ext.dual().named("ext_dual"),
        bch=bch_narrow(q, u) if u >= 2 else None,
        c_of_u=code_C_of_u(q, u) if u >= 2 else None,
    )
    inst.diagram = diagram_checks(inst)
    bad = [k for k, ok in inst.diagram.items() if not ok]
    if bad:
        raise CodeError(f"family relations failed for q={q}, u={u}: {bad}")
    return inst
