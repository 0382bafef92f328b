"""Weight distributions: direct enumeration, MacWilliams, and a subset-rank count.

Three independent ways to the same numbers:

* exhaustive: walk all q^k codewords;
* dual: walk the dual code and apply the MacWilliams identity;
* rank: count column subsets of the generator by rank, then invert.  A
  codeword of a k-dim code vanishes on a coordinate set Z exactly when the
  message lies in the annihilator of the columns in Z, which has size
  q^(k - rank Z). Summing over all Z and inverting the binomial transform
  gives the number of codewords with exactly j zeros.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .codes import LinearCode

DEFAULT_BUDGET = 10 ** 8
# below this many codewords enumeration is always the quickest route
_SMALL = 1 << 16


class BudgetExceeded(RuntimeError):
    """The requested computation needs more work than the budget allows."""


@dataclass(frozen=True)
class WeightDistribution:
    """counts[i] is the number of codewords of Hamming weight i."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int:
        for i in range(1, len(self.counts)):
            if self.counts[i]:
                return i
        return 0

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.counts) if c]

    def enumerator(self, var: str = "z") -> str:
        terms = []
        for i, c in enumerate(self.counts):
            if c:
                terms.append(str(c) if i == 0 else f"{c}{var}^{i}")
        return " + ".join(terms)

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.counts]

    def validate(self, q: int, k: int) -> None:
        if self.counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if self.total != q ** k:
            raise ValueError(f"weights sum to {self.total}, expected {q}^{k}")

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, int]) -> WeightDistribution:
        counts = [0] * (n + 1)
        for i, c in terms.items():
            counts[i] = c
        return cls(tuple(counts))


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(j + 1))


def macwilliams_transform(W: WeightDistribution | Sequence[int], n: int, k: int,
                          q: int) -> WeightDistribution:
    """Weight distribution of the dual of an [n, k] code with distribution W."""
    A = list(W.counts if isinstance(W, WeightDistribution) else W)
    if len(A) != n + 1:
        raise ValueError("distribution length does not match n")
    out = []
    qk = q ** k
    for j in range(n + 1):
        s = sum(a * krawtchouk(j, i, n, q) for i, a in enumerate(A) if a)
        if s % qk:
            raise ArithmeticError(f"MacWilliams sum at weight {j} not divisible by q^k")
        out.append(s // qk)
    return WeightDistribution(tuple(out))


def _tables(C: LinearCode):
    F = C.field
    return F.add_table, F.mul_table, F.inv_table


def weight_distribution_exhaustive(C: LinearCode, budget: int = DEFAULT_BUDGET,
                                   workers: int = 1, backend=None) -> WeightDistribution:
    """Enumerate all q^k codewords."""
    be = backend or kernels.backend
    q, k, n = C.q, C.k, C.n
    if q ** k > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the budget {budget}")
    G = np.ascontiguousarray(C.generator, dtype=np.int32)
    if q == 2:
        counts = be.weight_counts_binary(G.astype(np.uint8), np.zeros(n, dtype=np.uint8))
        return WeightDistribution(tuple(counts.tolist()))
    add, mul, _ = _tables(C)
    zero = np.zeros(n, dtype=np.int32)
    if workers <= 1 or k < 2 or q ** k < _SMALL:
        counts = be.weight_counts(G, add, mul, zero)
        return WeightDistribution(tuple(counts.tolist()))
    # split on the coefficient of the last row; each slice is independent
    head = np.ascontiguousarray(G[:-1])
    offsets = [np.ascontiguousarray(mul[a, G[-1]], dtype=np.int32) for a in range(q)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda off: be.weight_counts(head, add, mul, off), offsets))
    return WeightDistribution(tuple(np.sum(parts, axis=0).tolist()))


def rank_route_estimate(n: int, k: int) -> int:
    """Rough node count of the subset-rank search on an [n, k] code."""
    return sum(comb(n, s) for s in range(1, k + 1))


def weight_distribution_by_rank(C: LinearCode, budget: int = DEFAULT_BUDGET,
                                backend=None) -> WeightDistribution:
    """Weight distribution from the rank profile of the generator's columns."""
    be = backend or kernels.backend
    q, k, n = C.q, C.k, C.n
    if k == 0:
        return WeightDistribution((1,) + (0,) * n)
    cols = np.ascontiguousarray(C.generator.T, dtype=np.int32)
    add, mul, inv = _tables(C)
    table, nodes, complete = be.rank_profile(cols, add, mul, inv, int(budget))
    if not complete:
        raise BudgetExceeded(f"subset-rank search passed {budget} nodes")
    T = table.tolist()
    S = [sum(T[z][r] * q ** (k - r) for r in range(k + 1)) for z in range(n + 1)]
    A = [0] * (n + 1)
    for j in range(n + 1):
        # B_j: codewords with exactly j zero coordinates
        B = sum((-1) ** (z - j) * comb(z, j) * S[z] for z in range(j, n + 1))
        A[n - j] = B
    wd = WeightDistribution(tuple(A))
    wd.validate(q, k)
    return wd


def _route(C: LinearCode, route: str, budget: int, workers: int,
           backend=None) -> WeightDistribution:
    if route == "exhaustive":
        return weight_distribution_exhaustive(C, budget, workers, backend)
    if route == "rank":
        return weight_distribution_by_rank(C, budget, backend)
    raise ValueError(f"unknown route {route!r}")


def _plan(n: int, k: int, q: int) -> list[tuple[int, str]]:
    enum_cost = q ** k
    rank_cost = rank_route_estimate(n, k)
    # a rank node costs a few k-vector reductions, a codeword about n table hits
    weigh = max(1, (k * k) // max(n, 1)) if q > 2 else max(1, k * k)
    plans = [(enum_cost, "exhaustive"), (rank_cost * weigh, "rank")]
    if enum_cost <= _SMALL:
        return [(enum_cost, "exhaustive")] + [plans[1]]
    return sorted(plans)


def weight_distribution(C: LinearCode, budget: int = DEFAULT_BUDGET, method: str = "auto",
                        workers: int = 1, backend=None) -> WeightDistribution:
    """Weight distribution of C by the cheapest route within budget.

    method is one of auto, exhaustive, dual or rank. The dual and auto routes
    work on whichever of C and its dual has the smaller dimension and
    transform back with MacWilliams.
    """
    if method == "auto" and C._wd is not None and backend is None:
        return C._wd
    n, k, q = C.n, C.k, C.q
    if method == "exhaustive":
        wd = weight_distribution_exhaustive(C, budget, workers, backend)
        route = "exhaustive"
    elif method == "dual":
        D = C.dual()
        wd = macwilliams_transform(
            weight_distribution_exhaustive(D, budget, workers, backend), n, D.k, q)
        route = "dual+macwilliams"
    elif method == "rank":
        wd = weight_distribution_by_rank(C, budget, backend)
        route = "rank"
    elif method == "auto":
        side = C if k <= n - k else C.dual()
        wd = None
        last: Exception | None = None
        for cost, r in _plan(n, side.k, q):
            try:
                wd = _route(side, r, budget, workers, backend)
                route = r
                break
            except BudgetExceeded as exc:
                last = exc
        if wd is None:
            raise BudgetExceeded(f"no route fits the budget for [{n},{k}] over GF({q})") from last
        if side is not C:
            wd = macwilliams_transform(wd, n, side.k, q)
            route += "+macwilliams"
    else:
        raise ValueError(f"unknown method {method!r}")
    wd.validate(q, k)
    if backend is None:
        C._wd = wd
        C.route = route
    return wd


def cheapest_cost(C: LinearCode) -> int:
    """Estimated cost of the cheapest distribution route for C."""
    side = min(C.k, C.n - C.k)
    return min(c for c, _ in _plan(C.n, side, C.q))


def min_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum distance; the zero code reports 0.

    Uses the weight distribution when it fits the budget. Otherwise d is the
    smallest circuit of the parity-check columns, found by a search that
    only goes as deep as d itself.
    """
    if C.k == 0:
        return 0
    if C._wd is not None:
        return C._wd.min_distance
    if C.k == C.n:
        return 1
    if cheapest_cost(C) <= budget:
        try:
            return weight_distribution(C, budget).min_distance
        except BudgetExceeded:
            pass
    from .lrc import min_circuit_sizes
    return min(min_circuit_sizes(C.dual(), budget))


def params(C: LinearCode, budget: int = DEFAULT_BUDGET) -> tuple[int, int, int]:
    return C.n, C.k, min_distance(C, budget)


def brute_force_distribution(C: LinearCode) -> WeightDistribution:
    """Direct count over codewords in Python; for tiny codes and tests only."""
    counts = [0] * (C.n + 1)
    for c in C.codewords():
        counts[int(np.count_nonzero(c))] += 1
    return WeightDistribution(tuple(counts))


def distribution_from_counts(counts: Iterable[int]) -> WeightDistribution:
    return WeightDistribution(tuple(counts))
