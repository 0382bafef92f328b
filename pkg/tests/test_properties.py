"""Property tests for the invariants the library promises."""

from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, given, settings, strategies as st

from extmds.claims import PASS, TheoremCheckResult, compare
from extmds.codes import LinearCode
from extmds.family import build_family, code_Cu
from extmds.field import field_of_order
from extmds.lrc import DegenerateCodeError, linear_locality
from extmds.poly import Poly, poly_divmod, poly_gcd
from extmds.weights import (brute_force_distribution, macwilliams_transform, min_distance,
                            weight_distribution, weight_distribution_by_rank,
                            weight_distribution_exhaustive)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9]
GRID = [4, 5, 7, 8, 9, 11, 13, 16]
cfg = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def elements(draw, count=3):
    q = draw(st.sampled_from(SMALL_Q + [16, 25, 27]))
    return field_of_order(q), [draw(st.integers(0, q - 1)) for _ in range(count)]


@st.composite
def codes(draw, max_n=7):
    q = draw(st.sampled_from([2, 3, 4, 5]))
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    return LinearCode(field_of_order(q), rows, n=n)


@cfg
@given(elements())
def test_field_axioms(fe):
    F, (a, b, c) = fe
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
    p = F.p
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


@cfg
@given(st.sampled_from([3, 4, 5, 9]), st.lists(st.integers(0, 8), min_size=1, max_size=7),
       st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_poly_division(q, fc, gc):
    F = field_of_order(q)
    f = Poly(F, [c % q for c in fc])
    g = Poly(F, [c % q for c in gc])
    if g.is_zero():
        return
    quo, rem = poly_divmod(f, g)
    assert quo * g + rem == f and rem.degree < g.degree
    d = poly_gcd(f, g)
    assert poly_divmod(g, d)[1].is_zero()


@cfg
@given(codes())
def test_dual_involution_and_orthogonality(C):
    D = C.dual()
    assert D.dual() == C
    assert C.k + D.k == C.n
    F = C.field
    for r in C.generator:
        for s in D.generator:
            assert F.sum(F.mul(int(x), int(y)) for x, y in zip(r, s)) == 0


@cfg
@given(codes())
def test_macwilliams_round_trip(C):
    W = brute_force_distribution(C)
    Wd = macwilliams_transform(W, C.n, C.k, C.q)
    assert macwilliams_transform(Wd, C.n, C.n - C.k, C.q) == W
    assert Wd == weight_distribution_exhaustive(C.dual())
    assert weight_distribution_by_rank(C) == W
    assert W.total == C.q ** C.k


@cfg
@given(codes())
def test_extended_codewords_sum_to_zero(C):
    E = C.extend()
    F = C.field
    for c in E.codewords():
        assert F.sum(int(x) for x in c) == 0
    assert E.k == C.k and min_distance(E) >= min_distance(C)


@cfg
@given(codes(max_n=8))
def test_augment_extend_commute_when_n_is_minus_one(C):
    p = C.field.p
    if (C.n + 1) % p == 0:
        assert C.augment().extend() == C.extend().augment()


@cfg
@given(codes(), codes())
def test_intersection_dimension(A, B):
    if (A.q, A.n) != (B.q, B.n):
        return
    assert A.intersect(B).k == A.k + B.k - A.span_with(B).k


@cfg
@given(codes())
def test_singleton_bounds(C):
    d = min_distance(C)
    assert d <= C.n - C.k + 1
    try:
        rep = linear_locality(C)
    except DegenerateCodeError:
        return
    assert 0 <= rep.gap and max(rep.localities) <= C.k


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GRID), st.data())
def test_family_parameters(q, data):
    u = data.draw(st.integers(1, (q + 1) // 2))
    f = build_family(q, u)
    assert all(f.diagram.values())
    assert (f.c_u.n, f.c_u.k) == (q + 1, 2 * u - 1)
    assert min_distance(f.c_u) == q - 2 * u + 3
    W = weight_distribution(f.ext)
    assert min_distance(f.ext) in (q - 2 * u + 3, q - 2 * u + 4)
    assert W.total == q ** f.ext.k


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GRID), st.data())
def test_cu_is_cyclic_and_reversible(q, data):
    u = data.draw(st.integers(1, (q + 1) // 2))
    C = code_Cu(q, u)
    assert C.reverse() == C
    for r in C.generator:
        assert C.contains(np.roll(r, 1))
    assert C.is_reversible()


@cfg
@given(st.one_of(st.integers(), st.lists(st.integers(), max_size=3)),
       st.one_of(st.integers(), st.lists(st.integers(), max_size=3)))
def test_verdict_pass_iff_equal(a, b):
    r = compare("c", 5, 1, a, b)
    assert (r.verdict == PASS) == (a == b)
    assert TheoremCheckResult.from_dict(r.as_dict()) == r
