from __future__ import annotations

import numpy as np
import pytest

from extmds.family import bch_narrow
from extmds.field import build_tower
from extmds.lemmas import (conjecture_experiment, construct_weight_q_minus_5_codeword, det,
                           det_identity_check, pair_lemma, pair_value, random_quadruples, sigma2,
                           sigma2_construction, sigma2_quadruple_search, sigma52_quintuple_search,
                           tr_pair_search, tr_triple_search_char2, trace_identity_suite)
from extmds.spectra import HypothesisError
from extmds.weights import min_distance


def suite(q):
    return {r.lemma: r for r in trace_identity_suite(build_tower(q))}


def test_sigma2_search():
    t = build_tower(9)
    res = sigma2_quadruple_search(t)
    assert res.found and sigma2(t, res.witness) == 0
    assert res.status == "found"
    r4 = sigma2_quadruple_search(build_tower(4))
    assert bool(r4.found) == (min_distance(bch_narrow(4, 3)) <= 4)
    with pytest.raises(HypothesisError):
        sigma2_quadruple_search(build_tower(3))


def test_sigma2_construction():
    res = sigma2_construction(build_tower(13))
    assert res.found and len(set(res.witness)) == 4
    with pytest.raises(HypothesisError):
        sigma2_construction(build_tower(8))


def test_det_identity():
    t = build_tower(8)
    for quad in [(0, 1, 2, 3), (1, 4, 6, 8), (2, 3, 5, 7)]:
        assert det_identity_check(t, quad)
    t9 = build_tower(9)
    w = sigma2_quadruple_search(t9).witness
    top = t9.top
    xs = [t9.beta_pow(e) for e in w]
    assert det(top, [[top.pow(x, p) for x in xs] for p in (-2, -1, 1, 2)]) == 0
    with pytest.raises(ValueError):
        det_identity_check(t, (0, 0, 1, 2))
    for q in (4, 8, 9, 16):
        tq = build_tower(q)
        assert all(det_identity_check(tq, x) for x in random_quadruples(q, 100, seed=1))


def test_random_quadruples_are_seeded():
    assert random_quadruples(16, 5, seed=3) == random_quadruples(16, 5, seed=3)
    assert all(len(set(x)) == 4 for x in random_quadruples(4, 50))


def test_pair_lemma_selection():
    assert pair_lemma(9) == "NLEM::35" and pair_lemma(13) == "NLEM::35"
    assert pair_lemma(17) == "NLEM9:11" and pair_lemma(29) == "NLEM9:11"
    assert pair_lemma(5) == "" and pair_lemma(7) == "" and pair_lemma(125) == ""


@pytest.mark.parametrize("q", [9, 13, 17, 29, 49])
def test_pair_search(q):
    t = build_tower(q)
    res = tr_pair_search(t)
    assert res.found
    i, j = res.witness
    assert pair_value(t, i, j) == 0
    if q == 49:
        assert res.witness == (10, 20) and res.note == "explicit pair"


def test_pair_search_hypothesis():
    with pytest.raises(HypothesisError):
        tr_pair_search(build_tower(7))


def test_trace_suite_examples():
    s9 = suite(9)
    assert s9["NLEM::34(1)"].found
    assert s9["NLEM::34(2)"].found is None
    s13 = suite(13)
    assert s13["NLEM::34(2)"].found and s13["NLEM::34(2)"].witness == (2,)
    s17 = suite(17)
    assert s17["NLEM::34(3)"].found and s17["NLEM::34(3)"].witness == (8,)
    assert all(s17[f"nlem30::33({i})"].found for i in (1, 2, 3))
    s7 = suite(7)
    assert all(r.found is None for r in s7.values())


def test_quintuples():
    for q in (9, 13, 17):
        res = sigma52_quintuple_search(build_tower(q))
        assert res.found == (min_distance(bch_narrow(q, 4)) == 5)


@pytest.mark.parametrize("q,tries", [(8, 4), (16, 56), (32, 560)])
def test_triples(q, tries):
    res = tr_triple_search_char2(build_tower(q))
    assert res.found and res.searched <= tries


@pytest.mark.parametrize("q", [8, 16, 32])
def test_weight_q_minus_5_word(q):
    w = construct_weight_q_minus_5_codeword(build_tower(q))
    assert int(np.count_nonzero(w)) == q - 5
    assert bch_narrow(q, q // 2 - 1).contains(w)


def test_char2_hypotheses():
    with pytest.raises(HypothesisError):
        tr_triple_search_char2(build_tower(4))
    with pytest.raises(HypothesisError):
        construct_weight_q_minus_5_codeword(build_tower(9))
    with pytest.raises(HypothesisError):
        conjecture_experiment(25)
