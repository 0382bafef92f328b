from __future__ import annotations

import pytest

from extmds.codes import LinearCode, full_code, zero_code
from extmds.family import bch_narrow, build_family, code_Cu
from extmds.field import build_field, field_of_order
from extmds.weights import (BudgetExceeded, WeightDistribution, brute_force_distribution,
                            krawtchouk, macwilliams_transform, min_distance, params,
                            weight_distribution, weight_distribution_by_rank,
                            weight_distribution_exhaustive)

F2 = build_field(2, 1)


def fresh(C: LinearCode) -> LinearCode:
    return LinearCode(C.field, C.generator, n=C.n)


def test_repetition():
    W = weight_distribution_exhaustive(LinearCode(F2, [[1, 1, 1]]))
    assert W.counts == (1, 0, 0, 1)
    assert macwilliams_transform(W, 3, 1, 2).counts == (1, 0, 3, 0)


def test_full_and_zero():
    W = weight_distribution(full_code(F2, 4))
    assert W.counts == (1, 4, 6, 4, 1)
    assert macwilliams_transform(W, 4, 4, 2).counts == (1, 0, 0, 0, 0)
    assert weight_distribution(zero_code(field_of_order(13), 15)).counts == (1,) + (0,) * 15


def test_worked_examples():
    W = weight_distribution(code_Cu(8, 2).extend())
    assert W.enumerator() == "1 + 315z^8 + 196z^10"
    W = weight_distribution(code_Cu(9, 3).extend())
    assert W.enumerator() == "1 + 240z^6 + 1440z^7 + 5040z^8 + 13880z^9 + 22320z^10 + 16128z^11"


def test_mds_example_gf4():
    W = brute_force_distribution(code_Cu(4, 2))
    assert W.counts == (1, 0, 0, 30, 15, 18)


@pytest.mark.parametrize("q,u", [(4, 2), (5, 2), (7, 3), (8, 2), (9, 3), (9, 4), (11, 2)])
def test_three_routes_agree(q, u):
    C = code_Cu(q, u).extend()
    for code in (C, C.dual()):
        got = [weight_distribution_by_rank(fresh(code))]
        if q ** code.k <= 10 ** 6:
            got.append(weight_distribution_exhaustive(fresh(code)))
        if q ** (code.n - code.k) <= 10 ** 6:
            got.append(weight_distribution(fresh(code), method="dual"))
        assert len(got) >= 2 and all(w == got[0] for w in got)


def test_macwilliams_on_gf9():
    C = code_Cu(9, 3)
    W = weight_distribution_exhaustive(fresh(C))
    assert macwilliams_transform(W, 10, 5, 9) == weight_distribution_exhaustive(fresh(C.dual()))


def test_macwilliams_rejects_corrupt_input():
    with pytest.raises(ArithmeticError):
        macwilliams_transform([1, 2, 0, 0], 3, 1, 2)
    with pytest.raises(ValueError):
        macwilliams_transform([1, 0], 3, 1, 2)


def test_krawtchouk_orthogonality():
    n, q = 6, 3
    for i in range(n + 1):
        for j in range(n + 1):
            s = sum(krawtchouk(i, s_, n, q) * krawtchouk(s_, j, n, q) for s_ in range(n + 1))
            assert s == (q ** n if i == j else 0)


def test_budget():
    C = code_Cu(13, 4).extend().dual()  # [15, 8] over GF(13)
    with pytest.raises(BudgetExceeded):
        weight_distribution_exhaustive(fresh(C), budget=1000)
    W = weight_distribution(fresh(C))
    D = fresh(C)
    weight_distribution(D)
    assert D.route.endswith("macwilliams")
    assert W == weight_distribution(fresh(C), method="rank")
    with pytest.raises(BudgetExceeded):
        weight_distribution(fresh(C), budget=10)


def test_min_distance():
    assert min_distance(code_Cu(9, 3)) == 6
    assert min_distance(LinearCode(F2, [[1] * 7])) == 7
    assert params(code_Cu(16, 7).dual()) == (17, 4, 14)
    f = build_family(16, 7)
    assert params(f.bch) == (17, 5, 11)
    assert params(f.c_of_u) == (17, 12, 5)
    assert min_distance(zero_code(F2, 3)) == 0


def test_min_distance_without_distribution():
    # tiny budget forces the circuit search on the parity-check matrix
    C = fresh(bch_narrow(16, 3))
    assert min_distance(C, budget=10 ** 4) == 4


def test_distribution_helpers():
    W = WeightDistribution.from_terms(4, {0: 1, 2: 3})
    assert W.n == 4 and W.total == 4 and W.min_distance == 2 and W[9] == 0
    assert W.support() == [0, 2] and W.as_strings() == ["1", "0", "3", "0", "0"]
    W.validate(2, 2)
    with pytest.raises(ValueError):
        W.validate(2, 3)
