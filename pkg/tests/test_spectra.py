from __future__ import annotations

from fractions import Fraction

import pytest

from extmds.codes import LinearCode
from extmds.family import build_family, code_Cu
from extmds.field import build_field
from extmds.spectra import (FORMULAS, HypothesisError, classify, classify_params,
                            formula_enumerator, mds_weight_formula, nmds_weight_from_anchor)
from extmds.weights import weight_distribution


def test_classify_examples():
    assert classify(build_family(9, 2).ext).label == "NMDS"
    v = classify(build_family(8, 2).ext)
    assert v.label == "MDS" and (v.n, v.k, v.d) == (10, 3, 8)
    assert classify(LinearCode(build_field(2, 1), [[1] * 5])).is_mds
    assert classify_params(10, 4, 6, 3).label == "AMDS"
    assert classify_params(10, 4, 5, 3).label == "other"
    assert classify_params(10, 4, 6, 4).is_nmds


def test_mds_formula():
    assert mds_weight_formula(5, 3, 4).counts == (1, 0, 0, 30, 15, 18)
    W = mds_weight_formula(10, 3, 8)
    assert (W[8], W[9], W[10]) == (315, 0, 196)
    full = mds_weight_formula(6, 6, 3)
    assert full.total == 3 ** 6 and full[1] == 12


def test_nmds_anchor():
    W, D = nmds_weight_from_anchor(11, 5, 9, 240)
    assert W == weight_distribution(code_Cu(9, 3).extend())
    assert D == weight_distribution(code_Cu(9, 3).extend().dual())
    W, _ = nmds_weight_from_anchor(18, 5, 16, 2040)
    assert W.counts[13:] == (2040, 35700, 44880, 257295, 377400, 331260)
    with pytest.raises(ArithmeticError):
        nmds_weight_from_anchor(11, 5, 9, 10 ** 6)
    with pytest.raises(ValueError):
        nmds_weight_from_anchor(11, 5, 9, 0)


def test_formula_examples():
    fe = formula_enumerator("thm-sdjoint3", 16)
    assert [fe.coefficients[i] for i in range(13, 19)] == [2040, 35700, 44880, 257295,
                                                          377400, 331260]
    fe = formula_enumerator("NTHM23", 9)
    assert fe.coefficients[6] == 240 and fe.coefficients[11] == 16128
    fe = formula_enumerator("thm-sdjoint4", 32)
    assert fe.coefficients[27] == 1014816 and fe.coefficients[34] == 11677503088
    fe = formula_enumerator("thm-sdjoint2", 8)
    assert fe.coefficients == {8: 315, 10: 196}


def test_partial_formula():
    fe = formula_enumerator("lem-sdjoint7", 32)
    assert not fe.complete
    assert fe.coefficients[27] == Fraction(31 * 24, 30) * 40920 == 1014816
    with pytest.raises(ValueError):
        fe.distribution


@pytest.mark.parametrize("family,q", [("thm-sdjoint3", 8), ("thm-sdjoint3", 9),
                                      ("NTHM23", 3), ("thm-sdjoint4", 16), ("nlem20", 25 * 2)])
def test_hypothesis_violations(family, q):
    with pytest.raises(HypothesisError):
        formula_enumerator(family, q)


@pytest.mark.parametrize("family,q,u", [("thm-sdjoint2", 8, 2), ("thm-sdjoint2", 16, 2),
                                        ("thm-sdjoint3", 16, 3), ("NTHM23", 9, 3),
                                        ("lem-sdjoint3", 16, 3), ("nlem20", 9, 3),
                                        ("nlem20", 27, 3)])
def test_formulas_match_enumeration(family, q, u):
    fe = formula_enumerator(family, q)
    f = build_family(q, u)
    C = f.ext if fe.code.startswith("ext") else f.c_of_u
    assert (C.n, C.k) == (fe.n, fe.k)
    assert fe.distribution == weight_distribution(C)


def test_unknown_family():
    with pytest.raises(KeyError):
        formula_enumerator("nope", 8)
    assert "thm-sdjoint4" in FORMULAS
