from __future__ import annotations

import pytest

from extmds.claims import (EXAMPLES, FAIL, PASS, REGISTRY, SKIP_BUDGET, SKIP_HYPOTHESIS,
                           TheoremCheckResult, claim_ids, compare, prime_powers, select,
                           table1_check)
from extmds.family import build_family

REQUIRED = ["thm-sdjoin1", "thm-fund21jproj", "NTHM29:1", "nthm:11", "nthm:13", "Cor9::1",
            "thm-sdjoint2", "NTHM:17", "NTHM18", "thm-sdjoint3", "NTHM23", "thm-sdjoint4",
            "NTH2::36", "thm-feb61", "thm-feb62", "nlem:32", "thm-sdjoint18", "NLEM::17",
            "NLEM2::33", "NLEM::35", "NLEM9:11", "nlem27:36", "nlem30::33", "NLEM::34",
            "lem-sdjoin1", "lem-DLwtd", "lem-augment-extend-code",
            "table1:m=4,u=2", "table1:m=6,u=4"]


def test_registry_covers_required_claims():
    ids = claim_ids()
    for cid in REQUIRED:
        assert cid in ids, cid
    assert len(ids) == len(set(ids))


def test_full_registry_small_q_all_pass():
    qs = prime_powers(3, 16)
    verdicts = {}
    for c in select("all"):
        for q, u in c.instances(qs):
            r = c.run(q, u)
            assert r.verdict in (PASS, SKIP_HYPOTHESIS), (r.claim, q, u, r.expected, r.computed)
            verdicts[r.verdict] = verdicts.get(r.verdict, 0) + 1
    assert verdicts[PASS] > 400


def test_compare_and_roundtrip():
    r = compare("x", 5, 2, [6, 3, 4], [6, 3, 4])
    assert r.verdict == PASS
    assert compare("x", 5, 2, {"a": "1"}, {"a": "2"}).verdict == FAIL
    assert TheoremCheckResult.from_dict(r.as_dict()) == r


def test_select():
    assert [c.id for c in select("thm-sdjoint3")] == ["thm-sdjoint3"]
    assert all(c.id.startswith("table1:") for c in select("table1"))
    assert len(select("table1")) == 12
    assert {c.group for c in select("lemmas")} == {"lemmas"}
    with pytest.raises(KeyError):
        select("no-such-claim")


def test_specific_claims():
    r = REGISTRY["thm-sdjoint3"].run(16, 3)
    assert r.verdict == PASS
    assert r.computed["wd"][13:] == ["2040", "35700", "44880", "257295", "377400", "331260"]
    r = REGISTRY["NTH2::36"].run(11, 4)
    assert r.verdict == PASS and r.computed["d"] == 4
    r = REGISTRY["thm-sdjoint4:q=32-printed"].run(32, 4)
    assert r.verdict == PASS


def test_hypothesis_skip():
    c = REGISTRY["lem-sdjoin1"]
    assert c.skipped(9).verdict == SKIP_HYPOTHESIS
    assert REGISTRY["NLEM::35"].instances([7, 9, 17]) == [(9, None)]
    assert REGISTRY["NLEM9:11"].instances([7, 9, 17]) == [(17, None)]


def test_budget_skip():
    build_family.cache_clear()
    r = REGISTRY["thm-sdjoin1"].run(13, 4, budget=5)
    assert r.verdict == SKIP_BUDGET and r.expected is None
    build_family.cache_clear()


def test_examples_and_table():
    assert any(q == 25 and u == 4 for q, u, _ in EXAMPLES)
    r = table1_check(5, 4)
    assert r.verdict == PASS and list(r.computed) == [34, 21, 4]


def test_prime_powers():
    assert prime_powers(3, 16) == [3, 4, 5, 7, 8, 9, 11, 13, 16]
