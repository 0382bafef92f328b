"""Linear locality and the Singleton-like bound d <= n - k - ceil(k/r) + 2.

Coordinate i has locality r_i = (smallest weight of a dual codeword whose
support contains i) - 1. Supports of dual codewords are unions of circuits
of the column matroid of the generator, so the search runs over circuits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .codes import LinearCode
from .weights import DEFAULT_BUDGET, BudgetExceeded, min_distance


class DegenerateCodeError(ValueError):
    """Some coordinate lies in the support of no dual codeword."""


@dataclass(frozen=True)
class LocalityReport:
    n: int
    k: int
    d: int
    localities: tuple[int, ...]
    r: int
    bound: int
    gap: int
    verdict: str
    k_optimality: str = "not evaluated"

    def as_dict(self) -> dict:
        return {"localities": list(self.localities), "r": self.r, "bound": self.bound,
                "gap": self.gap, "verdict": self.verdict,
                "k_optimality": self.k_optimality}


def singleton_like_bound(n: int, k: int, r: int) -> int:
    if r <= 0:
        raise ValueError("locality must be positive")
    if not r <= k <= n:
        raise ValueError("need 1 <= r <= k <= n")
    return n - k - (-(-k // r)) + 2


def min_circuit_sizes(C: LinearCode, budget: int = DEFAULT_BUDGET, backend=None) -> list[int]:
    """Size of the smallest circuit through each coordinate (n + 2 when none)."""
    be = backend or kernels.backend
    F = C.field
    if C.k == 0:
        return [1] * C.n
    cols = np.ascontiguousarray(C.generator.T, dtype=np.int32)
    best, nodes, complete = be.min_circuits(cols, F.add_table, F.mul_table,
                                            F.inv_table, int(budget))
    if not complete:
        raise BudgetExceeded(f"circuit search passed {budget} nodes")
    return [int(b) for b in best]


def linear_locality(C: LinearCode, budget: int = DEFAULT_BUDGET, backend=None) -> LocalityReport:
    if C.k == 0:
        raise DegenerateCodeError("the zero code has no locality")
    sizes = min_circuit_sizes(C, budget, backend)
    loc = []
    for i, s in enumerate(sizes):
        if s > C.n:
            raise DegenerateCodeError(f"coordinate {i} is covered by no dual codeword")
        loc.append(s - 1)
    r = max(loc)
    if r == 0:
        raise DegenerateCodeError("every coordinate is identically zero")
    d = min_distance(C, budget)
    bound = singleton_like_bound(C.n, C.k, r)
    gap = bound - d
    if gap < 0:
        raise ArithmeticError("distance exceeds the Singleton-like bound")
    verdict = {0: "d-optimal", 1: "almost d-optimal"}.get(gap, "neither")
    return LocalityReport(C.n, C.k, d, tuple(loc), r, bound, gap, verdict)


def locality_by_dual_enumeration(C: LinearCode) -> list[int]:
    """Reference r_i from every dual codeword; small codes only."""
    best = [C.n + 2] * C.n
    for c in C.dual().codewords():
        supp = np.flatnonzero(c)
        w = len(supp)
        if w:
            for i in supp:
                best[i] = min(best[i], w)
    return [b - 1 for b in best]
