from __future__ import annotations

import pytest

from extmds.codes import LinearCode
from extmds.family import build_family, code_Cu
from extmds.field import build_field
from extmds.lrc import (DegenerateCodeError, linear_locality, locality_by_dual_enumeration,
                        singleton_like_bound)
from extmds.weights import BudgetExceeded

F2 = build_field(2, 1)


def test_bound_formula():
    assert singleton_like_bound(5, 3, 3) == 3
    assert singleton_like_bound(11, 5, 4) == 6
    for n, k in [(7, 3), (10, 10), (12, 1)]:
        assert singleton_like_bound(n, k, k) == n - k + 1
    with pytest.raises(ValueError):
        singleton_like_bound(5, 3, 0)


def test_mds_gf4():
    rep = linear_locality(code_Cu(4, 2))
    assert rep.localities == (3,) * 5
    assert (rep.r, rep.bound, rep.d, rep.verdict) == (3, 3, 3, "d-optimal")


def test_repetition():
    rep = linear_locality(LinearCode(F2, [[1] * 6]))
    assert rep.r == 1 and rep.bound == 6 and rep.verdict == "d-optimal"


def test_nmds_gap():
    C = build_family(5, 2).ext
    rep = linear_locality(C)
    assert list(rep.localities) == locality_by_dual_enumeration(C)
    assert rep.gap in (0, 1)
    rep = linear_locality(build_family(9, 3).ext)
    assert rep.gap in (0, 1)
    assert rep.as_dict()["verdict"] in ("d-optimal", "almost d-optimal")


def test_degenerate():
    C = LinearCode(F2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(DegenerateCodeError):
        linear_locality(C)
    # an identically zero coordinate is repaired by nothing at all
    rep = linear_locality(LinearCode(F2, [[1, 1, 0]]))
    assert rep.localities == (1, 1, 0)


def test_budget():
    with pytest.raises(BudgetExceeded):
        linear_locality(code_Cu(13, 5).extend(), budget=50)
