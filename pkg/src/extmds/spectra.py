"""MDS / AMDS / NMDS classification and closed-form weight distributions.

Every formula is evaluated in exact rationals and must come out integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .codes import LinearCode
from .field import prime_power
from .weights import (DEFAULT_BUDGET, WeightDistribution, macwilliams_transform,
                      min_distance)


class HypothesisError(ValueError):
    """The formula's hypothesis on q does not hold."""


# -- classification ---------------------------------------------------------

MDS = "MDS"
NMDS = "AMDS_and_NMDS"
AMDS_ONLY = "AMDS_only"
OTHER = "OTHER"


@dataclass(frozen=True)
class ClassificationVerdict:
    kind: str
    n: int
    k: int
    d: int
    d_dual: int

    @property
    def defect(self) -> int:
        """Singleton defect n - k + 1 - d."""
        return self.n - self.k + 1 - self.d

    @property
    def dual_defect(self) -> int:
        return self.k + 1 - self.d_dual

    @property
    def is_mds(self) -> bool:
        return self.kind == MDS

    @property
    def is_nmds(self) -> bool:
        return self.kind == NMDS

    @property
    def is_amds(self) -> bool:
        return self.kind in (NMDS, AMDS_ONLY)

    @property
    def label(self) -> str:
        return {MDS: "MDS", NMDS: "NMDS", AMDS_ONLY: "AMDS", OTHER: "other"}[self.kind]


def classify_params(n: int, k: int, d: int, d_dual: int) -> ClassificationVerdict:
    if d == n - k + 1:
        kind = MDS
    elif d == n - k:
        kind = NMDS if d + d_dual == n else AMDS_ONLY
    else:
        kind = OTHER
    return ClassificationVerdict(kind, n, k, d, d_dual)


def classify(C: LinearCode, budget: int = DEFAULT_BUDGET) -> ClassificationVerdict:
    """Classify C from its minimum distance and that of its dual."""
    return classify_params(C.n, C.k, min_distance(C, budget), min_distance(C.dual(), budget))


# -- general formulas --------------------------------------------------------

def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return int(x)


def mds_weight_formula(n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution shared by every [n, k, n-k+1] code over GF(q)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    d = n - k + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    for i in range(d, n + 1):
        s = sum((-1) ** j * comb(i - 1, j) * Fraction(q) ** (i - j - d)
                for j in range(i - d + 1))
        counts[i] = _integral(comb(n, i) * (q - 1) * s, f"A_{i}")
        if counts[i] < 0:
            raise ArithmeticError(f"negative A_{i}")
    wd = WeightDistribution(tuple(counts))
    wd.validate(q, k)
    return wd


def _nmds_side(n: int, k: int, q: int, anchor: int) -> WeightDistribution:
    # distribution of an [n, k, n-k] code from A_{n-k}
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[n - k] = anchor
    for s in range(1, k + 1):
        v = comb(n, k - s) * sum((-1) ** j * comb(n - k + s, j) * (q ** (s - j) - 1)
                                 for j in range(s)) + (-1) ** s * comb(k, s) * anchor
        if v < 0:
            raise ArithmeticError(f"negative A_{n - k + s}; the anchor is wrong")
        counts[n - k + s] = v
    return WeightDistribution(tuple(counts))


def nmds_weight_from_anchor(n: int, k: int, q: int, anchor: int,
                            dual_anchor: int | None = None
                            ) -> tuple[WeightDistribution, WeightDistribution]:
    """Distributions of an [n, k, n-k] NMDS code and its dual from A_{n-k}.

    The code side comes from A_{n-k}. The dual side comes from A_k of the
    dual: when dual_anchor is omitted it is read off the MacWilliams
    transform of the code side, and in every case the dual formula must
    agree with that transform.
    """
    if anchor <= 0:
        raise ValueError("A_{n-k} must be positive for an NMDS code")
    wd = _nmds_side(n, k, q, anchor)
    wd.validate(q, k)
    via_mw = macwilliams_transform(wd, n, k, q)
    if dual_anchor is None:
        dual_anchor = via_mw[k]
    dual = _nmds_side(n, n - k, q, dual_anchor)
    dual.validate(q, n - k)
    if dual != via_mw:
        raise ArithmeticError("dual formula disagrees with the MacWilliams transform")
    return wd, dual


# -- family formulas ---------------------------------------------------------

def _poly(coeffs: list[int], den: int, q: int) -> Fraction:
    """sum c_i q^i / den with coefficients listed from the top degree down."""
    deg = len(coeffs) - 1
    return Fraction(sum(c * q ** (deg - i) for i, c in enumerate(coeffs)), den)


def _need(q: int, p: int, m_ok: Callable[[int], bool], what: str) -> int:
    pm = prime_power(q)
    if pm is None or pm[0] != p or not m_ok(pm[1]):
        raise HypothesisError(f"q = {q} violates: {what}")
    return pm[1]


def _sdjoint2(q):
    _need(q, 2, lambda m: m >= 2, "q = 2^m, m >= 2")
    return q + 2, 3, {q: Fraction((q + 2) * (q * q - 1), 2),
                      q + 2: Fraction(q * (q - 1) ** 2, 2)}


def _sdjoint3(q):
    _need(q, 2, lambda m: m >= 4 and m % 2 == 0, "q = 2^m, m >= 4 even")
    return q + 2, 5, {
        q - 3: _poly([1, -4, -1, 4, 0], 24, q),
        q - 2: _poly([1, -4, 17, 4, -18, 0], 24, q),
        q - 1: _poly([3, -4, -3, 4, 0], 4, q),
        q: _poly([3, -2, 17, 14, -20, -12], 12, q),
        q + 1: _poly([8, 13, -44, -13, 36, 0], 24, q),
        q + 2: _poly([3, -8, 7, 0, -2, 0], 8, q),
    }


def _nthm23(q):
    _need(q, 3, lambda m: m >= 2, "q = 3^m, m >= 2")
    return q + 2, 5, {
        q - 3: _poly([1, -1, -1, 1, 0], 24, q),
        q - 2: _poly([1, -4, 2, 4, -3, 0], 24, q),
        q - 1: _poly([3, 1, -3, -1, 0], 4, q),
        q: _poly([3, -2, 2, 14, -5, -12], 12, q),
        q + 1: _poly([8, 13, -29, -13, 21, 0], 24, q),
        q + 2: _poly([3, -8, 6, 0, -1, 0], 8, q),
    }


def _sdjoint4(q):
    _need(q, 2, lambda m: m >= 5 and m % 2 == 1, "q = 2^m, m >= 5 odd")
    return q + 2, 7, {
        q - 5: _poly([1, -11, 25, -5, -26, 16, 0], 720, q),
        q - 4: _poly([1, -11, 75, -155, 24, 166, -100, 0], 720, q),
        q - 3: _poly([3, -17, 27, 1, -30, 16, 0], 48, q),
        q - 2: _poly([3, -7, 101, -133, -64, 140, -40, 0], 144, q),
        q - 1: _poly([8, 47, -69, 167, 141, -214, -80, 0], 144, q),
        q: _poly([45, 93, 127, -255, -200, 402, 28, -240], 240, q),
        q + 1: _poly([264, 151, -845, 415, 181, -566, 400, 0], 720, q),
        q + 2: _poly([53, -133, 99, -19, 0, 8, -8, 0], 144, q),
    }


def _sdjoint3_c3(q):
    _need(q, 2, lambda m: m >= 4 and m % 2 == 0, "q = 2^m, m >= 4 even")
    return q + 1, 4, {
        q - 3: Fraction((q - 4) * (q - 1) * q * (q + 1), 24),
        q - 2: Fraction((q - 1) * q * (q + 1), 2),
        q - 1: Fraction((q + 1) * q * q * (q - 1), 4),
        q: Fraction((q - 1) * (q + 1) * (2 * q * q + q + 6), 6),
        q + 1: _poly([3, -4, -3, 4, 0], 8, q),
    }


def _nlem20(q):
    _need(q, 3, lambda m: m >= 2, "q = 3^m, m >= 2")
    return q + 1, 4, {
        q - 3: Fraction((q - 1) ** 2 * q * (q + 1), 24),
        q - 1: Fraction((q - 1) * q * (q + 1) * (q + 3), 4),
        q: Fraction((q * q - 1) * (q * q - q + 3), 3),
        q + 1: Fraction(3 * (q - 1) ** 2 * q * (q + 1), 8),
    }


def _sdjoint7(q):
    _need(q, 2, lambda m: m >= 5 and m % 2 == 1, "q = 2^m, m >= 5 odd")
    return q + 1, 6, {q - 5: Fraction((q - 1) * (q - 8), 30) * comb(q + 1, 4)}


# family id -> (evaluator, which code it describes, full distribution?)
FORMULAS: dict[str, tuple[Callable, str, bool]] = {
    "thm-sdjoint2": (_sdjoint2, "ext(C_2)", True),
    "thm-sdjoint3": (_sdjoint3, "ext(C_3)", True),
    "NTHM23": (_nthm23, "ext(C_3)", True),
    "thm-sdjoint4": (_sdjoint4, "ext(C_4)", True),
    "lem-sdjoint3": (_sdjoint3_c3, "C(3)", True),
    "nlem20": (_nlem20, "C(3)", True),
    "lem-sdjoint7": (_sdjoint7, "C(4)", False),
}


@dataclass(frozen=True)
class FormulaEnumerator:
    family: str
    q: int
    n: int
    k: int
    coefficients: dict
    complete: bool
    code: str

    @property
    def distribution(self) -> WeightDistribution:
        if not self.complete:
            raise ValueError(f"{self.family} predicts only some coefficients")
        return WeightDistribution.from_terms(self.n, {0: 1, **self.coefficients})


def formula_enumerator(family: str, q: int) -> FormulaEnumerator:
    """Evaluate a closed-form distribution (or coefficient) at q."""
    if family not in FORMULAS:
        raise KeyError(f"unknown formula family {family!r}")
    fn, code, complete = FORMULAS[family]
    n, k, raw = fn(q)
    coeffs = {}
    for i, v in sorted(raw.items()):
        c = _integral(v, f"{family} A_{i} at q={q}")
        if c < 0:
            raise ArithmeticError(f"{family} A_{i} negative at q={q}")
        coeffs[i] = c
    fe = FormulaEnumerator(family, q, n, k, coeffs, complete, code)
    if complete:
        fe.distribution.validate(q, k)
    return fe
