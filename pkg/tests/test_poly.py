from __future__ import annotations

import pytest

from extmds.family import g_u, x_n_minus_1
from extmds.field import FieldElement, FieldError, build_field, build_tower, field_of_order
from extmds.poly import (Poly, cyclotomic_coset, cyclotomic_cosets, evaluate, minimal_polynomial,
                         poly_divmod, poly_gcd, poly_lcm, poly_product, roots_in)


def P(F, *cs):
    return Poly(F, cs)


def test_divmod_examples():
    F3 = build_field(3, 1)
    q, r = poly_divmod(P(F3, 2, 0, 1), P(F3, 2, 1))  # (x^2 - 1) / (x - 1)
    assert q == P(F3, 1, 1) and r.is_zero()
    F2 = build_field(2, 1)
    q, r = poly_divmod(P(F2, 0, 0, 0, 1), P(F2, 0, 0, 1))
    assert q == P(F2, 0, 1) and r.is_zero()
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P(F2, 1, 1), Poly(F2, []))


def test_divmod_reconstructs():
    F = field_of_order(9)
    f = P(F, 3, 1, 4, 0, 7, 2)
    g = P(F, 5, 0, 1)
    q, r = poly_divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


def test_gcd_examples():
    F5 = build_field(5, 1)
    assert poly_gcd(P(F5, 4, 0, 1), P(F5, 4, 1)) == P(F5, 4, 1)
    f = P(F5, 2, 0, 3)
    assert poly_gcd(f, Poly(F5, [])) == f.monic()
    assert poly_lcm(P(F5, 4, 1), P(F5, 1, 1)) == P(F5, 4, 0, 1)


def test_gcd_with_g2_over_gf8():
    t = build_tower(8)
    F = t.base
    g2 = g_u(t, 2)
    quot, r = poly_divmod(x_n_minus_1(F, 9), P(F, F.neg(1), 1))
    assert r.is_zero()
    assert poly_gcd(quot, g2) == g2


def test_context_mismatch():
    with pytest.raises((FieldError, TypeError, ValueError)):
        P(build_field(2, 1), 1, 1) + P(build_field(3, 1), 1, 1)


def test_cyclotomic_cosets():
    c = cyclotomic_coset(1, 9, 8)
    assert set(c.members) == {1, 8} and c.leader == 1
    assert cyclotomic_coset(0, 9, 8).members == (0,)
    for q in (5, 7, 9, 11, 13):
        h = (q + 1) // 2
        assert cyclotomic_coset(h, q + 1, q).members == (h,)
    with pytest.raises(ValueError):
        cyclotomic_coset(1, 8, 4)
    cs = cyclotomic_cosets(17, 16)
    assert sorted(i for c in cs for i in c.members) == list(range(17))


def test_minimal_polynomials():
    for q in (4, 5, 8, 9):
        t = build_tower(q)
        F = t.base
        assert minimal_polynomial(t, 0) == P(F, F.neg(1), 1)
        leaders = [c.leader for c in cyclotomic_cosets(q + 1, q)]
        prod = poly_product(F, (minimal_polynomial(t, s) for s in leaders))
        assert prod == x_n_minus_1(F, q + 1)
    t = build_tower(16)
    for i in range(1, 9):
        M = minimal_polynomial(t, i)
        assert M == P(t.base, 1, t.trace(t.beta_pow(i)), 1)


def test_evaluation():
    F = build_field(2, 1)
    assert evaluate(P(F, 1, 1), 1).value == 0
    t = build_tower(9)
    for s in range(10):
        M = minimal_polynomial(t, s)
        assert evaluate(M, FieldElement(t.top, t.beta_pow(s))).value == 0
    f = x_n_minus_1(t.base, 10)
    assert roots_in(f, t, range(10)) == list(range(10))
    with pytest.raises(FieldError):
        evaluate(f, FieldElement(build_field(2, 1), 1))
