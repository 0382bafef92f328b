"""The compiled kernels and the numpy fallback must agree bit for bit."""

from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from extmds import _pykernels, kernels
from extmds.codes import LinearCode
from extmds.family import code_Cu
from extmds.field import field_of_order
from extmds.lrc import locality_by_dual_enumeration, min_circuit_sizes
from extmds.weights import (brute_force_distribution, weight_distribution_by_rank,
                            weight_distribution_exhaustive)

compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(),
                              reason="compiled kernels not built")
BACKENDS = [_pykernels] + ([kernels.get_backend("compiled")]
                           if "compiled" in kernels.available_backends() else [])


def random_code(q, n, k, seed):
    rng = np.random.default_rng(seed)
    F = field_of_order(q)
    return LinearCode(F, rng.integers(0, q, size=(k, n)), n=n)


@pytest.mark.parametrize("be", BACKENDS, ids=lambda m: m.__name__)
@pytest.mark.parametrize("q,n,k,seed", [(2, 9, 4, 1), (3, 7, 3, 2), (4, 8, 3, 3),
                                        (5, 6, 3, 4), (9, 7, 2, 5), (2, 12, 7, 6)])
def test_weight_counts_match_brute_force(be, q, n, k, seed):
    C = random_code(q, n, k, seed)
    assert weight_distribution_exhaustive(C, backend=be) == brute_force_distribution(C)
    assert weight_distribution_by_rank(C, backend=be) == brute_force_distribution(C)


@pytest.mark.parametrize("be", BACKENDS, ids=lambda m: m.__name__)
@pytest.mark.parametrize("q,u", [(4, 2), (5, 2), (7, 3), (9, 4)])
def test_min_circuits_match_dual_enumeration(be, q, u):
    for C in (code_Cu(q, u), code_Cu(q, u).extend()):
        sizes = min_circuit_sizes(C, backend=be)
        assert [s - 1 for s in sizes] == locality_by_dual_enumeration(C)


@compiled
def test_backends_identical_on_family_codes():
    py, cc = _pykernels, kernels.get_backend("compiled")
    for q, u in [(7, 3), (8, 2), (11, 2)]:
        C = code_Cu(q, u).extend()
        for code in (C, C.dual()):
            if q ** code.k <= 10 ** 5:
                assert (weight_distribution_exhaustive(code, backend=py)
                        == weight_distribution_exhaustive(code, backend=cc))
            assert (weight_distribution_by_rank(code, backend=py)
                    == weight_distribution_by_rank(code, backend=cc))


def test_node_budget_reported():
    C = code_Cu(9, 3).extend()
    F = C.field
    cols = np.ascontiguousarray(C.generator.T, dtype=np.int32)
    for be in BACKENDS:
        _, nodes, complete = be.rank_profile(cols, F.add_table, F.mul_table, F.inv_table, 5)
        assert not complete


def test_backend_selection():
    assert kernels.get_backend("python") is _pykernels
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
    env = dict(os.environ, EXTMDS_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", "import extmds; print(extmds.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
