from __future__ import annotations

import itertools

import numpy as np
import pytest

from extmds.field import (FieldError, FieldMismatchError, build_field, build_tower,
                          field_of_order, is_irreducible_mod_p, prime_power, trace_to_base,
                          unit_circle)


def polymul_mod(a, b, f, p):
    """Schoolbook product of digit lists modulo a monic f; the test's own oracle."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    m = len(f) - 1
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for i in range(m + 1):
                prod[d - m + i] = (prod[d - m + i] - c * f[i]) % p
    return (prod + [0] * m)[:m]


def digits(a, p, m):
    return [(a // p ** i) % p for i in range(m)]


def test_gf8_modulus_is_first_irreducible():
    F = build_field(2, 3)
    assert F.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    # scan monic cubics by the integer encoding of their low coefficients;
    # a cubic is irreducible over GF(2) iff it has no root
    for code in range(8):
        c = [(code >> i) & 1 for i in range(3)] + [1]
        if all(sum(ci * t ** i for i, ci in enumerate(c)) % 2 for t in range(2)):
            break
    assert tuple(c) == F.modulus


def test_prime_field_and_errors():
    F = build_field(3, 1)
    assert F.q == 3 and F.add(2, 2) == 1 and F.mul(2, 2) == 1
    with pytest.raises(FieldError):
        build_field(4, 1)
    with pytest.raises(FieldError):
        build_field(2, 0)
    with pytest.raises(FieldError):
        build_field(2, 40)


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (7, 1), (3, 3)])
def test_arithmetic_matches_polynomial_oracle(p, m):
    F = build_field(p, m)
    f = list(F.modulus)
    for a in range(F.q):
        for b in range(F.q):
            want = polymul_mod(digits(a, p, m), digits(b, p, m), f, p)
            assert digits(F.mul(a, b), p, m) == want
            s = [(x + y) % p for x, y in zip(digits(a, p, m), digits(b, p, m))]
            assert digits(F.add(a, b), p, m) == s
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_primitive_element_has_full_order(q):
    F = field_of_order(q)
    assert F.order(F.primitive) == q - 1
    seen = {F.pow(F.primitive, i) for i in range(q - 1)}
    assert seen == set(range(1, q))


def test_irreducibility_test():
    assert is_irreducible_mod_p([1, 1, 1], 2)
    assert not is_irreducible_mod_p([1, 0, 1], 2)
    assert is_irreducible_mod_p([1, 0, 1], 3)
    assert prime_power(49) == (7, 2) and prime_power(12) is None


def test_element_wrapper_and_mismatch():
    F = build_field(2, 3)
    a, b = F(3), F(5)
    assert (a * b).value == F.mul(3, 5)
    assert (a + a).value == 0
    assert (a / a).value == 1 and (a ** 7).value == 1
    with pytest.raises((FieldMismatchError, TypeError)):
        a + build_field(3, 2)(1)


@pytest.mark.parametrize("q,order", [(4, 5), (8, 9), (9, 10), (16, 17)])
def test_tower_beta_order(q, order):
    t = build_tower(q)
    assert t.top.q == q * q
    # order by repeated multiplication
    x, k = t.beta, 1
    while x != 1:
        x, k = t.top.mul(x, t.beta), k + 1
    assert k == order
    assert t.top.order(t.alpha) == q * q - 1


def test_tower_needs_q_above_two():
    with pytest.raises(FieldError):
        build_tower(2)


def test_trace_examples():
    t = build_tower(8)
    for a in range(8):
        assert t.trace(t.embed(a)) == 0  # x + x = 0 in characteristic two
    assert t.trace(t.beta) != 0
    t9 = build_tower(9)
    x = t9.top.add(t9.beta, t9.frobenius(t9.beta))
    assert t9.trace(x) == t9.base.add(t9.trace(t9.beta), t9.trace(t9.beta))
    el = unit_circle(t9)[1]
    assert trace_to_base(el).value == t9.trace(t9.beta)


def test_unit_circle():
    t4 = build_tower(4)
    U = unit_circle(t4)
    assert len({u.value for u in U}) == 5
    assert all(t4.top.pow(u.value, 5) == 1 for u in U)
    t8 = build_tower(8)
    prod = 1
    for u in unit_circle(t8):
        prod = t8.top.mul(prod, u.value)
    assert prod == 1  # beta^36 with 9 | 36
    t9 = build_tower(9)
    assert unit_circle(t9)[5].value == t9.top.neg(1)


def test_tables_consistent():
    F = field_of_order(9)
    assert np.array_equal(F.mul_table[3], [F.mul(3, b) for b in range(9)])
    assert all(F.add_table[a, F.neg_table[a]] == 0 for a in range(9))
