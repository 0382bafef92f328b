"""Registry of checkable claims about the C_u family and its relatives.

Each claim knows which q it applies to, which u values to try for a given
q, and how to compare a prediction with a computation. A check produces
one TheoremCheckResult per (claim, q, u); verdict is pass exactly when the
expected and computed payloads are equal.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field as dc_field
from typing import Any, Callable

import numpy as np

from .codes import LinearCode, parity_check_of_extended, trace_code
from .family import (CyclicCode, build_family, bch_narrow, delsarte_bch, max_u,
                     x_n_minus_1)
from .field import build_tower, prime_power
from .lemmas import (construct_weight_q_minus_5_codeword, det_identity_check, pair_lemma,
                     random_quadruples, sigma2_quadruple_search, sigma52_quintuple_search,
                     tr_pair_search, tr_triple_search_char2, trace_identity_suite)
from .poly import Poly, poly_divmod, poly_gcd
from .spectra import (HypothesisError, classify, formula_enumerator,
                      mds_weight_formula, nmds_weight_from_anchor)
from .weights import (DEFAULT_BUDGET, BudgetExceeded, WeightDistribution, min_distance,
                      weight_distribution)

PASS = "pass"
FAIL = "fail"
SKIP_BUDGET = "skipped(budget)"
SKIP_HYPOTHESIS = "skipped(hypothesis)"
VERDICTS = (PASS, FAIL, SKIP_BUDGET, SKIP_HYPOTHESIS)


@dataclass
class TheoremCheckResult:
    claim: str
    q: int
    u: int | None
    expected: Any
    computed: Any
    verdict: str
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> TheoremCheckResult:
        return cls(**d)


def compare(claim: str, q: int, u, expected, computed, note: str = "") -> TheoremCheckResult:
    verdict = PASS if expected == computed else FAIL
    return TheoremCheckResult(claim, q, u, expected, computed, verdict, note)


# -- helpers -----------------------------------------------------------------

def _pm(q: int) -> tuple[int, int]:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    return pm


def _is_2m(q: int, lo: int = 1, parity: int | None = None) -> bool:
    p, m = _pm(q)
    return p == 2 and m >= lo and (parity is None or m % 2 == parity)


def _odd(q: int) -> bool:
    return q % 2 == 1


def P(C: LinearCode, budget: int) -> list[int]:
    """[n, k, d] as a JSON-friendly list."""
    return [C.n, C.k, min_distance(C, budget)]


def _wd(C: LinearCode, budget: int) -> list[str]:
    return weight_distribution(C, budget).as_strings()


def _label(C: LinearCode, budget: int) -> str:
    return classify(C, budget).label


# -- claim type --------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    check: Callable[[int, Any, int], TheoremCheckResult]
    applies: Callable[[int], bool] = lambda q: True
    us: Callable[[int], list] = lambda q: [None]
    fixed: tuple = ()           # claims tied to specific q values
    always: bool = False        # run regardless of the selected q list
    group: str = ""

    def instances(self, qs: list[int]) -> list[tuple[int, Any]]:
        if self.fixed:
            pool = [q for q in self.fixed if self.always or q in qs]
        else:
            pool = [q for q in qs if self.applies(q)]
        return [(q, u) for q in pool for u in self.us(q)]

    def run(self, q: int, u, budget: int = DEFAULT_BUDGET) -> TheoremCheckResult:
        try:
            return self.check(q, u, budget)
        except BudgetExceeded as exc:
            return TheoremCheckResult(self.id, q, u, None, None, SKIP_BUDGET, str(exc))
        except HypothesisError as exc:
            return TheoremCheckResult(self.id, q, u, None, None, SKIP_HYPOTHESIS, str(exc))

    def skipped(self, q: int, why: str = "hypothesis not met") -> TheoremCheckResult:
        return TheoremCheckResult(self.id, q, None, None, None, SKIP_HYPOTHESIS, why)


REGISTRY: dict[str, Claim] = {}


def register(cid: str, statement: str, **kw):
    def deco(fn):
        REGISTRY[cid] = Claim(cid, statement, fn, **kw)
        return fn
    return deco


def all_us(lo: int = 1):
    return lambda q: list(range(lo, max_u(q) + 1))


def one_u(f: Callable[[int], int]):
    return lambda q: [f(q)]


# -- base family ---------------------------------------------------------------

@register("thm-sdjoin1", "C_u is [q+1,2u-1,q-2u+3] MDS, its dual [q+1,q+2-2u,2u] MDS, both reversible",
          us=all_us(), group="family")
def _c_sdjoin1(q, u, budget):
    f = build_family(q, u)
    exp = {"C_u": [q + 1, 2 * u - 1, q - 2 * u + 3], "dual": [q + 1, q + 2 - 2 * u, 2 * u],
           "reversible": [True, True]}
    comp = {"C_u": P(f.c_u, budget), "dual": P(f.c_u_dual, budget),
            "reversible": [f.c_u.is_reversible(), f.c_u_dual.is_reversible()]}
    return compare("thm-sdjoin1", q, u, exp, comp)


@register("thm-fund21jproj", "d(ext(C_u)^perp) = d(BCH(q,u)) + 1", us=all_us(2), group="family")
def _c_fund(q, u, budget):
    f = build_family(q, u)
    return compare("thm-fund21jproj", q, u, min_distance(f.bch, budget) + 1,
                   min_distance(f.ext_dual, budget))


@register("NTHM29:1", "d(ext(C_u)) = d(C(u)) with equal A_{q-2u+3}", us=all_us(2), group="family")
def _c_29(q, u, budget):
    f = build_family(q, u)
    i = q - 2 * u + 3
    a = weight_distribution(f.c_of_u, budget)
    b = weight_distribution(f.ext, budget)
    return compare("NTHM29:1", q, u, {"d": a.min_distance, "A": str(a[i])},
                   {"d": b.min_distance, "A": str(b[i])})


def _nthm11_case(q: int, u: int) -> int:
    if (q + 1) % u == 0:
        return 1
    if (q + 1) % (u + 1) == 0:
        return 2
    return 0


@register("nthm:11", "ext(C_u) parameters when u | q+1, or u does not divide q+1 but u+1 does",
          us=lambda q: [u for u in range(2, max_u(q) + 1) if _nthm11_case(q, u)], group="family")
def _c_11(q, u, budget):
    p, m = _pm(q)
    f = build_family(q, u)
    if _nthm11_case(q, u) == 1:
        exp = {"ext": [q + 2, 2 * u - 1, q - 2 * u + 3], "dual": [q + 2, q - 2 * u + 3, u + 1]}
    else:
        d = q - 2 * u + 4 if (u == 2 and p == 2 and m % 2 == 1) else q - 2 * u + 3
        exp = {"ext": [q + 2, 2 * u - 1, d], "dual": [q + 2, q - 2 * u + 3, u + 2]}
    return compare("nthm:11", q, u, exp, {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)},
                   note=f"case {_nthm11_case(q, u)}")


def _subfield_us(q: int) -> list[int]:
    p, m = _pm(q)
    return [p ** s for s in range(1, m) if m % s == 0]


@register("nthm:13", "ext(C_u) parameters for u = p^s with s | m, s < m",
          us=_subfield_us, group="family")
def _c_13(q, u, budget):
    f = build_family(q, u)
    d = q - 2 * u + 4 if u == 2 else q - 2 * u + 3
    exp = {"ext": [q + 2, 2 * u - 1, d], "dual": [q + 2, q - 2 * u + 3, u + 2]}
    return compare("nthm:13", q, u, exp, {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)})


@register("nlem:10", "d(BCH(q,u)) = u when u | q+1, and at least u+1 otherwise",
          us=all_us(2), group="family")
def _c_l10(q, u, budget):
    d = min_distance(build_family(q, u).bch, budget)
    if (q + 1) % u == 0:
        return compare("nlem:10", q, u, {"d": u}, {"d": d})
    return compare("nlem:10", q, u, {"d>=u+1": True}, {"d>=u+1": d >= u + 1}, note=f"d = {d}")


@register("nlem:12", "d(BCH(q,u)) = u+1 for u = p^s, q = u^e, e >= 2",
          us=_subfield_us, group="family")
def _c_l12(q, u, budget):
    return compare("nlem:12", q, u, u + 1, min_distance(build_family(q, u).bch, budget))


# -- u = 2 ------------------------------------------------------------------------

@register("Cor9::1", "q odd: ext(C_2) is a [q+2,3,q-1] NMDS code",
          applies=_odd, us=one_u(lambda q: 2), group="u=2")
def _c_cor9(q, u, budget):
    f = build_family(q, 2)
    return compare("Cor9::1", q, 2, {"ext": [q + 2, 3, q - 1], "class": "NMDS"},
                   {"ext": P(f.ext, budget), "class": _label(f.ext, budget)})


@register("thm-sdjoint2", "q = 2^m: ext(C_2) is a [q+2,3,q] MDS code with a two-weight enumerator",
          applies=lambda q: _is_2m(q, 2), us=one_u(lambda q: 2), group="u=2")
def _c_sd2(q, u, budget):
    f = build_family(q, 2)
    fe = formula_enumerator("thm-sdjoint2", q)
    return compare("thm-sdjoint2", q, 2,
                   {"ext": [q + 2, 3, q], "class": "MDS", "wd": fe.distribution.as_strings()},
                   {"ext": P(f.ext, budget), "class": _label(f.ext, budget),
                    "wd": _wd(f.ext, budget)},
                   note="hyperoval code")


# -- u = 3 ------------------------------------------------------------------------

@register("NTHM:17", "BCH(q,3) and C(3) parameters, q >= 5",
          applies=lambda q: q >= 5, us=one_u(lambda q: 3), group="u=3")
def _c_17(q, u, budget):
    f = build_family(q, 3)
    if (q + 1) % 3 == 0:
        exp = {"bch": [q + 1, q - 3, 3], "C(3)": [q + 1, 4, q - 3]}
        comp = {"bch": P(f.bch, budget), "C(3)": P(f.c_of_u, budget)}
    else:
        exp = {"bch": [q + 1, q - 3, 4], "class": "NMDS"}
        comp = {"bch": P(f.bch, budget), "class": _label(f.bch, budget)}
    return compare("NTHM:17", q, 3, exp, comp)


@register("NTHM18", "ext(C_3) parameters, q >= 5",
          applies=lambda q: q >= 5, us=one_u(lambda q: 3), group="u=3")
def _c_18(q, u, budget):
    f = build_family(q, 3)
    if (q + 1) % 3 == 0:
        exp = {"ext": [q + 2, 5, q - 3], "dual": [q + 2, q - 3, 4]}
        comp = {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)}
    else:
        exp = {"ext": [q + 2, 5, q - 3], "class": "NMDS"}
        comp = {"ext": P(f.ext, budget), "class": _label(f.ext, budget)}
    return compare("NTHM18", q, 3, exp, comp)


def _formula_claim(cid: str, family: str, u: int, code_key: str, nmds: bool):
    def check(q, _u, budget):
        fe = formula_enumerator(family, q)
        C = build_family(q, u).codes()[code_key]
        if fe.complete:
            exp: dict = {"wd": fe.distribution.as_strings()}
            comp: dict = {"wd": _wd(C, budget)}
        else:
            wd = weight_distribution(C, budget)
            exp = {f"A_{i}": str(v) for i, v in fe.coefficients.items()}
            comp = {f"A_{i}": str(wd[i]) for i in fe.coefficients}
        if nmds:
            exp["class"] = "NMDS"
            comp["class"] = _label(C, budget)
        return compare(cid, q, u, exp, comp)
    return check


def _formula_applies(family: str):
    def ok(q):
        try:
            formula_enumerator(family, q)
        except HypothesisError:
            return False
        return True
    return ok


for _cid, _u, _key, _nmds, _stmt in [
    ("thm-sdjoint3", 3, "ext", True, "q = 2^m, m >= 4 even: ext(C_3) NMDS with closed-form enumerator"),
    ("NTHM23", 3, "ext", True, "q = 3^m, m >= 2: ext(C_3) NMDS with closed-form enumerator"),
    ("lem-sdjoint3", 3, "C(u)", False, "q = 2^m, m >= 4 even: closed-form enumerator of C(3)"),
    ("nlem20", 3, "C(u)", False, "q = 3^m, m >= 2: closed-form enumerator of C(3)"),
    ("lem-sdjoint7", 4, "C(u)", False, "q = 2^m, m >= 5 odd: A_{q-5} of C(4)"),
]:
    REGISTRY[_cid] = Claim(_cid, _stmt, _formula_claim(_cid, _cid, _u, _key, _nmds),
                           applies=_formula_applies(_cid), us=one_u(lambda q, _u=_u: _u),
                           group=f"u={_u}")


# -- u = 4 ------------------------------------------------------------------------

@register("thm-sdjoint4", "q = 2^m, m >= 4: ext(C_4) parameters (m even) or NMDS enumerator (m odd)",
          applies=lambda q: _is_2m(q, 4), us=one_u(lambda q: 4), group="u=4")
def _c_sd4(q, u, budget):
    f = build_family(q, 4)
    _, m = _pm(q)
    if m % 2 == 0:
        return compare("thm-sdjoint4", q, 4,
                       {"ext": [q + 2, 7, q - 5], "dual": [q + 2, q - 5, 6]},
                       {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)}, note="m even")
    fe = formula_enumerator("thm-sdjoint4", q)
    return compare("thm-sdjoint4", q, 4,
                   {"wd": fe.distribution.as_strings(), "class": "NMDS"},
                   {"wd": _wd(f.ext, budget), "class": _label(f.ext, budget)}, note="m odd")


# enumerator of ext(C_4) over GF(32) as printed
PRINTED_Q32_EXT_C4 = {27: 1014816, 28: 34588312, 29: 55814880, 30: 686184752,
                      31: 2244500192, 32: 6875142087, 33: 12784990240, 34: 11677503088}


@register("thm-sdjoint4:q=32-printed", "closed form at q = 32 equals the printed enumerator",
          fixed=(32,), always=True, us=one_u(lambda q: 4), group="u=4")
def _c_sd4_printed(q, u, budget):
    fe = formula_enumerator("thm-sdjoint4", 32)
    exp = WeightDistribution.from_terms(34, {0: 1, **PRINTED_Q32_EXT_C4}).as_strings()
    return compare("thm-sdjoint4:q=32-printed", 32, 4, exp, fe.distribution.as_strings(),
                   note="formula only")


def _u4_case(q: int) -> int:
    if (q + 1) % 4 == 0:
        return 1
    return 2 if (q + 1) % 3 else 3


@register("NTH2::36", "q >= 9 odd: BCH(q,4) and C(4) parameters by residue class of q",
          applies=lambda q: _odd(q) and q >= 9, us=one_u(lambda q: 4), group="u=4")
def _c_36(q, u, budget):
    f = build_family(q, 4)
    d = min_distance(f.bch, budget)
    case = _u4_case(q)
    exp: dict = {"bch_nk": [q + 1, q - 5], "C(4)": [q + 1, 6, q - 5]}
    comp: dict = {"bch_nk": [f.bch.n, f.bch.k], "C(4)": P(f.c_of_u, budget)}
    if case == 3 and q % 5 == 0:
        exp["5<=d<=6"], comp["5<=d<=6"] = True, 5 <= d <= 6
    else:
        exp["d"], comp["d"] = (4 if case == 1 else 5), d
    return compare("NTH2::36", q, 4, exp, comp, note=f"case {case}")


@register("thm-ext-u4-odd", "q >= 9 odd: ext(C_4) is [q+2,7,q-5] and its dual distance follows the residue of q",
          applies=lambda q: _odd(q) and q >= 9, us=one_u(lambda q: 4), group="u=4")
def _c_ext_u4(q, u, budget):
    f = build_family(q, 4)
    case = _u4_case(q)
    exp: dict = {"ext": [q + 2, 7, q - 5], "dual_nk": [q + 2, q - 5]}
    comp: dict = {"ext": P(f.ext, budget), "dual_nk": [f.ext_dual.n, f.ext_dual.k]}
    dd = min_distance(f.ext_dual, budget)
    if case == 3 and q % 5 == 0:
        exp["6<=d<=7"], comp["6<=d<=7"] = True, 6 <= dd <= 7
    else:
        exp["d_dual"], comp["d_dual"] = (5 if case == 1 else 6), dd
    return compare("thm-ext-u4-odd", q, 4, exp, comp, note=f"case {case}")


# -- u = floor((q-1)/2) -----------------------------------------------------------

def _u_feb(q: int) -> int:
    return q // 2 - 1


@register("thm-feb61", "q = 2^m, m >= 3, u = 2^(m-1)-1: BCH [q+1,5,q-5], C(u) [q+1,q-4,5], trace form, weight q-5 word",
          applies=lambda q: _is_2m(q, 3), us=one_u(_u_feb), group="u=(q-1)/2")
def _c_feb61(q, u, budget):
    f = build_family(q, u)
    word = construct_weight_q_minus_5_codeword(build_tower(q))
    exp = {"bch": [q + 1, 5, q - 5], "C(u)": [q + 1, q - 4, 5], "trace_form": True,
           "word_weight": q - 5}
    comp = {"bch": P(f.bch, budget), "C(u)": P(f.c_of_u, budget),
            "trace_form": delsarte_bch(q) == f.bch,
            "word_weight": int(np.count_nonzero(word))}
    return compare("thm-feb61", q, u, exp, comp)


@register("thm-feb62", "q = 2^m, m >= 3, u = 2^(m-1)-1: ext(C_u) [q+2,q-3,5], dual [q+2,5,q-4]",
          applies=lambda q: _is_2m(q, 3), us=one_u(_u_feb), group="u=(q-1)/2")
def _c_feb62(q, u, budget):
    f = build_family(q, u)
    return compare("thm-feb62", q, u, {"ext": [q + 2, q - 3, 5], "dual": [q + 2, 5, q - 4]},
                   {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)})


@register("cor-u-q-1-half", "q > 5 odd, u = (q-1)/2: ext(C_u) [q+2,q-2,4], dual [q+2,4,(q+3)/2]",
          applies=lambda q: _odd(q) and q > 5, us=one_u(lambda q: (q - 1) // 2),
          group="u=(q-1)/2")
def _c_cor_minus(q, u, budget):
    f = build_family(q, u)
    return compare("cor-u-q-1-half", q, u,
                   {"ext": [q + 2, q - 2, 4], "dual": [q + 2, 4, (q + 3) // 2]},
                   {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)})


# -- u = floor((q+1)/2) -----------------------------------------------------------

@register("nlem:32", "q = 2^m, m >= 2, u = 2^(m-1): BCH(q,u) is a [q+1,3,q-1] MDS code",
          applies=lambda q: _is_2m(q, 2), us=one_u(lambda q: q // 2), group="u=(q+1)/2")
def _c_l32(q, u, budget):
    f = build_family(q, u)
    return compare("nlem:32", q, u, {"bch": [q + 1, 3, q - 1], "class": "MDS"},
                   {"bch": P(f.bch, budget), "class": _label(f.bch, budget)})


@register("thm-sdjoint18", "q = 2^m, m >= 2, u = 2^(m-1): four MDS codes",
          applies=lambda q: _is_2m(q, 2), us=one_u(lambda q: q // 2), group="u=(q+1)/2")
def _c_sd18(q, u, budget):
    f = build_family(q, u)
    exp = {"C_u": [q + 1, q - 1, 3], "C_u_dual": [q + 1, 2, q], "ext": [q + 2, q - 1, 4],
           "ext_dual": [q + 2, 3, q]}
    comp = {k: P(getattr(f, {"C_u": "c_u", "C_u_dual": "c_u_dual"}.get(k, k)), budget)
            for k in exp}
    exp["class"] = ["MDS"] * 4
    comp["class"] = [_label(c, budget) for c in (f.c_u, f.c_u_dual, f.ext, f.ext_dual)]
    return compare("thm-sdjoint18", q, u, exp, comp)


@register("cor-u-q+1-half", "q odd, u = (q+1)/2: ext(C_u) [q+2,q,2], dual [q+2,2,(q+3)/2]",
          applies=_odd, us=one_u(lambda q: (q + 1) // 2), group="u=(q+1)/2")
def _c_cor_plus(q, u, budget):
    f = build_family(q, u)
    return compare("cor-u-q+1-half", q, u,
                   {"ext": [q + 2, q, 2], "dual": [q + 2, 2, (q + 3) // 2]},
                   {"ext": P(f.ext, budget), "dual": P(f.ext_dual, budget)})


# -- general weight formulas --------------------------------------------------------

@register("lem-sdjoin1", "every MDS code of the family has the MDS weight distribution",
          us=all_us(), group="spectra")
def _c_mds(q, u, budget):
    f = build_family(q, u)
    exp, comp = {}, {}
    for name, C in f.codes().items():
        if C.k and classify(C, budget).is_mds:
            exp[name] = mds_weight_formula(C.n, C.k, q).as_strings()
            comp[name] = _wd(C, budget)
    if not exp:
        raise HypothesisError("no MDS code in this instance")
    return compare("lem-sdjoin1", q, u, exp, comp, note=",".join(sorted(exp)))


@register("lem-DLwtd", "every NMDS code of the family matches the anchored NMDS formulas",
          us=all_us(), group="spectra")
def _c_nmds(q, u, budget):
    f = build_family(q, u)
    exp, comp = {}, {}
    for name, C in f.codes().items():
        if C.k and classify(C, budget).is_nmds:
            wd = weight_distribution(C, budget)
            code_side, dual_side = nmds_weight_from_anchor(C.n, C.k, q, wd[C.n - C.k])
            exp[name] = [code_side.as_strings(), dual_side.as_strings()]
            comp[name] = [wd.as_strings(), _wd(C.dual(), budget)]
    if not exp:
        raise HypothesisError("no NMDS code in this instance")
    return compare("lem-DLwtd", q, u, exp, comp, note=",".join(sorted(exp)))


# -- code operations ----------------------------------------------------------------

@register("lem-extendedCodeParam", "ext(C) has parity check [1 | 1; H | 0] and distance d or d+1",
          us=all_us(), group="operations")
def _c_extpar(q, u, budget):
    f = build_family(q, u)
    exp, comp = {}, {}
    for name in ("C_u", "C_u_dual", "bch"):
        C = f.codes().get(name)
        if C is None or C.k == 0:
            continue
        H = parity_check_of_extended(f.field, C.parity_check(), C.n)
        E = C.extend()
        d, de = min_distance(C, budget), min_distance(E, budget)
        exp[name] = {"check": True, "d_step": True}
        comp[name] = {"check": LinearCode(f.field, H, n=C.n + 1) == E.dual(),
                      "d_step": de in (d, d + 1)}
    return compare("lem-extendedCodeParam", q, u, exp, comp)


def _augment_extend(C: LinearCode) -> bool:
    return C.augment().extend() == C.extend().augment()


# lengths q+1 and q+2 are -1 mod p only for p = 2 and p = 3 respectively
@register("lem-augment-extend-code", "extend and augment commute when n = -1 mod p",
          applies=lambda q: _pm(q)[0] in (2, 3), us=all_us(), group="operations")
def _c_augext(q, u, budget):
    codes = build_family(q, u).codes()
    p, _ = _pm(q)
    names = [k for k, C in codes.items() if (C.n + 1) % p == 0]
    if not names:
        raise HypothesisError(f"no family code has length = -1 mod {p}")
    return compare("lem-augment-extend-code", q, u, {k: True for k in names},
                   {k: _augment_extend(codes[k]) for k in names}, note=",".join(names))


@register("lem-mixedoperations", "ext(C)^perp = aug(ext(C^perp)) and the distance shift for MDS C",
          us=all_us(), group="operations")
def _c_mixed(q, u, budget):
    f = build_family(q, u)
    C, D = f.c_u, f.c_u_dual
    ones = np.ones(C.n, dtype=np.int64)
    pre = {"1_in_C": bool(C.contains(ones)), "1_in_dual": bool(D.contains(ones))}
    part1 = f.ext_dual == D.extend().augment()
    exp: dict = {"pre": {"1_in_C": True, "1_in_dual": False}, "part1": True}
    comp: dict = {"pre": pre, "part1": part1}
    exp["part2"] = min_distance(D.augment(), budget) + 1
    comp["part2"] = min_distance(f.ext_dual, budget)
    return compare("lem-mixedoperations", q, u, exp, comp)


def _aug_generator(C: CyclicCode) -> Poly:
    F = C.field
    xm1 = Poly(F, [F.neg(1), 1])
    return poly_gcd(poly_divmod(x_n_minus_1(F, C.n), xm1)[0], C.g)


@register("nlem:1", "aug of a cyclic code is cyclic with generator gcd((x^n-1)/(x-1), g)",
          us=all_us(), group="operations")
def _c_l1(q, u, budget):
    f = build_family(q, u)
    names = [k for k in ("C_u", "bch", "C(u)") if k in f.codes()]
    comp = {}
    for k in names:
        C = f.codes()[k]
        comp[k] = C.augment() == CyclicCode(_aug_generator(C), C.n)
    return compare("nlem:1", q, u, {k: True for k in names}, comp)


@register("eqn-21j313", "C_u = aug(C(u)) with C(u) = aug(C_u^perp)^perp",
          us=all_us(2), group="operations")
def _c_313(q, u, budget):
    f = build_family(q, u)
    comp = {"C(u)": f.c_of_u == f.c_u_dual.augment().dual(),
            "C_u": f.c_of_u.augment() == f.c_u,
            "diagram": all(f.diagram.values())}
    return compare("eqn-21j313", q, u, {"C(u)": True, "C_u": True, "diagram": True}, comp)


# -- worked examples ------------------------------------------------------------------

EXAMPLES: list[tuple[int, int, dict]] = [
    (5, 2, {"ext": [7, 3, 4], "ext_dual": [7, 4, 3]}),
    (8, 2, {"ext": [10, 3, 8], "ext_dual": [10, 7, 4], "wd:ext": "1 + 315z^8 + 196z^10"}),
    (9, 2, {"ext": [11, 3, 8], "ext_dual": [11, 8, 3]}),
    (9, 3, {"ext": [11, 5, 6], "ext_dual": [11, 6, 5], "class:ext": "NMDS",
            "wd:ext": "1 + 240z^6 + 1440z^7 + 5040z^8 + 13880z^9 + 22320z^10 + 16128z^11"}),
    (9, 4, {"ext": [11, 7, 4], "ext_dual": [11, 4, 6]}),
    (16, 3, {"ext": [18, 5, 13], "ext_dual": [18, 13, 5], "class:ext": "NMDS",
             "wd:ext": "1 + 2040z^13 + 35700z^14 + 44880z^15 + 257295z^16 + 377400z^17"
                       " + 331260z^18"}),
    (16, 4, {"ext": [18, 7, 11], "ext_dual": [18, 11, 6], "class:ext": "AMDS",
             "class:ext_dual": "other"}),
    (16, 7, {"C_u": [17, 13, 5], "C_u_dual": [17, 4, 14], "bch": [17, 5, 11],
             "C(u)": [17, 12, 5], "ext": [18, 13, 5], "ext_dual": [18, 5, 12]}),
    (25, 3, {"C_u": [26, 5, 22], "C_u_dual": [26, 21, 6], "bch": [26, 22, 4],
             "C(u)": [26, 4, 22], "ext": [27, 5, 22], "ext_dual": [27, 22, 5]}),
    (25, 4, {"C_u": [26, 7, 20], "C_u_dual": [26, 19, 8], "bch": [26, 20, 5],
             "C(u)": [26, 6, 20], "ext": [27, 7, 20], "ext_dual": [27, 20, 6]}),
    (32, 4, {"ext": [34, 7, 27], "ext_dual": [34, 27, 7], "class:ext": "NMDS",
             "wd:ext": "1 + 1014816z^27 + 34588312z^28 + 55814880z^29 + 686184752z^30"
                       " + 2244500192z^31 + 6875142087z^32 + 12784990240z^33"
                       " + 11677503088z^34"}),
]


def _example_check(expected: dict):
    def check(q, u, budget):
        codes = build_family(q, u).codes()
        comp = {}
        for key in expected:
            kind, _, name = key.rpartition(":")
            C = codes[name]
            if kind == "wd":
                comp[key] = weight_distribution(C, budget).enumerator()
            elif kind == "class":
                comp[key] = _label(C, budget)
            else:
                comp[key] = P(C, budget)
        return compare(f"example:q={q},u={u}", q, u, expected, comp)
    return check


for _q, _u, _exp in EXAMPLES:
    _id = f"example:q={_q},u={_u}"
    REGISTRY[_id] = Claim(_id, "worked example", _example_check(_exp), fixed=(_q,),
                          us=one_u(lambda q, _u=_u: _u), group="examples")


# -- binary subfield codes ---------------------------------------------------------------

TABLE1: dict[int, dict[int, list[int]]] = {
    3: {2: [10, 7, 2], 3: [10, 7, 2], 4: [10, 9, 2]},
    4: {2: [18, 9, 6], 3: [18, 9, 6], 4: [18, 17, 2]},
    5: {2: [34, 11, 12], 3: [34, 11, 12], 4: [34, 21, 4]},
    6: {2: [66, 13, 26], 3: [66, 13, 26], 4: [66, 25, 16]},
}


def table1_code(m: int, u: int) -> LinearCode:
    q = 2 ** m
    return trace_code(build_tower(q), build_family(q, u).ext)


def table1_check(m: int, u: int, budget: int = DEFAULT_BUDGET) -> TheoremCheckResult:
    cid = f"table1:m={m},u={u}"
    try:
        return compare(cid, 2 ** m, u, TABLE1[m][u], P(table1_code(m, u), budget))
    except BudgetExceeded as exc:
        return TheoremCheckResult(cid, 2 ** m, u, TABLE1[m][u], None, SKIP_BUDGET, str(exc))


for _m in TABLE1:
    for _u in (2, 3, 4):
        _id = f"table1:m={_m},u={_u}"
        REGISTRY[_id] = Claim(_id, "binary subfield code of ext(C_u)",
                              lambda q, u, budget, _m=_m: table1_check(_m, u, budget),
                              fixed=(2 ** _m,), us=one_u(lambda q, _u=_u: _u), group="table1")


# -- lemma suite ----------------------------------------------------------------------------

@register("NLEM::17", "a sigma_2 quadruple in U_{q+1} exists iff d(BCH(q,3)) <= 4",
          applies=lambda q: q >= 4, group="lemmas")
def _c_l17(q, u, budget):
    res = sigma2_quadruple_search(build_tower(q))
    d = min_distance(bch_narrow(q, 3), budget)
    return compare("NLEM::17", q, None, {"found": d <= 4}, {"found": bool(res.found)},
                   note=f"d = {d}; witness {res.witness}")


@register("NEQ21", "the 4x4 determinant factors as sigma_4-type term times sigma_2",
          applies=lambda q: q >= 4, group="lemmas")
def _c_neq21(q, u, budget):
    tower = build_tower(q)
    quads = random_quadruples(q, 100, seed=q)
    ok = sum(det_identity_check(tower, x) for x in quads)
    return compare("NEQ21", q, None, len(quads), ok, note="random quadruples agreeing")


def _odd_4(q: int) -> bool:
    return q % 2 == 1 and (q - 1) % 4 == 0


@register("NLEM2::33", "q >= 9 odd, 4 | q-1: a sigma_{5,2} quintuple exists iff d(BCH(q,4)) = 5",
          applies=lambda q: _odd_4(q) and q >= 9, group="lemmas")
def _c_l33(q, u, budget):
    res = sigma52_quintuple_search(build_tower(q))
    d = min_distance(bch_narrow(q, 4), budget)
    return compare("NLEM2::33", q, None, {"found": d == 5}, {"found": bool(res.found)},
                   note=f"d = {d}; witness {res.witness}")


def _suite_check(prefix: str):
    def check(q, u, budget):
        parts = [r for r in trace_identity_suite(build_tower(q)) if r.lemma.startswith(prefix)]
        live = [r for r in parts if r.found is not None]
        if not live:
            raise HypothesisError("; ".join(sorted({r.note for r in parts})))
        return compare(prefix, q, None, {r.lemma: True for r in live},
                       {r.lemma: bool(r.found) for r in live},
                       note=",".join(r.lemma for r in parts if r.found is None))
    return check


REGISTRY["nlem30::33"] = Claim("nlem30::33", "trace values of beta^i are distinct and avoid 0, 2, -2",
                               _suite_check("nlem30::33"), applies=lambda q: _odd_4(q) and q >= 9,
                               group="lemmas")
REGISTRY["NLEM::34"] = Claim("NLEM::34", "power sums of trace values",
                             _suite_check("NLEM::34"), applies=_odd_4, group="lemmas")


def _pair_check(lemma: str):
    def check(q, u, budget):
        res = tr_pair_search(build_tower(q))
        return compare(lemma, q, None, True, bool(res.found), note=f"pair {res.witness}")
    return check


for _lem in ("NLEM::35", "NLEM9:11"):
    REGISTRY[_lem] = Claim(_lem, "a pair i, j with (Tr b^i + 1)(Tr b^j + 1) + 1 = 0 exists",
                           _pair_check(_lem), applies=lambda q, _l=_lem: pair_lemma(q) == _l,
                           group="lemmas")


@register("nlem27:36", "q = 2^m, m >= 3: a triple with Tr(b^i + b^j + b^k) = 0 exists",
          applies=lambda q: _is_2m(q, 3), group="lemmas")
def _c_l36(q, u, budget):
    res = tr_triple_search_char2(build_tower(q))
    return compare("nlem27:36", q, None, True, bool(res.found), note=f"triple {res.witness}")


# -- selection ---------------------------------------------------------------------------

def claim_ids() -> list[str]:
    return list(REGISTRY)


def select(claim: str = "all") -> list[Claim]:
    if claim == "all":
        return list(REGISTRY.values())
    if claim in REGISTRY:
        return [REGISTRY[claim]]
    # a bare prefix such as "table1" or "example" picks a whole group
    hits = [c for c in REGISTRY.values() if c.id.split(":")[0] == claim or c.group == claim]
    if not hits:
        raise KeyError(f"unknown claim {claim!r}")
    return hits


def prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if prime_power(q) is not None]
