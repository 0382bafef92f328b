"""Linear codes over GF(q) held by a canonical (RREF) generator matrix."""

from __future__ import annotations

import itertools

import numpy as np

from .field import FieldContext, GaloisField, build_field
from .linalg import as_matrix, matmul, nullspace, reduce_vector, rref


class CodeError(ValueError):
    """Invalid code construction."""


class LinearCode:
    """An [n, k] code over a finite field.

    ``generator`` is the reduced row echelon form of whatever rows were
    supplied, so two codes are equal exactly when their generators match.
    """

    def __init__(self, field: GaloisField, generator, n: int | None = None,
                 name: str | None = None):
        M = as_matrix(generator, n)
        if n is not None and M.shape[1] != n:
            raise CodeError(f"rows have length {M.shape[1]}, expected {n}")
        if M.shape[1] == 0:
            raise CodeError("code length must be positive")
        if M.size and (M.min() < 0 or M.max() >= field.q):
            raise CodeError(f"entries must be encodings in [0, {field.q})")
        R, piv = rref(field, M) if M.shape[0] else (M, [])
        R.setflags(write=False)
        self.field = field
        self.n = int(M.shape[1])
        self.k = len(piv)
        self.generator = R
        self.pivots = tuple(piv)
        self.name = name
        self._dual: LinearCode | None = None
        self._wd = None
        self.route: str | None = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def named(self, name: str) -> LinearCode:
        self.name = name
        return self

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.k == other.k and np.array_equal(self.generator, other.generator))

    def __hash__(self):
        return hash((self.field.q, self.n, self.generator.tobytes()))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<LinearCode{tag} [{self.n},{self.k}] over GF({self.field.q})>"

    # -- structure -----------------------------------------------------
    def dual(self) -> LinearCode:
        if self._dual is None:
            if self.k == 0:
                B = np.eye(self.n, dtype=np.int64)
            else:
                B = nullspace(self.field, self.generator, self.n)
            d = LinearCode(self.field, B, n=self.n)
            d._dual = self
            self._dual = d
        return self._dual

    def parity_check(self) -> np.ndarray:
        return self.dual().generator

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.n,):
            raise CodeError("vector has the wrong length")
        if self.k == 0:
            return not v.any()
        return not reduce_vector(self.field, self.generator, list(self.pivots), v).any()

    def encode(self, message) -> np.ndarray:
        m = np.asarray(message, dtype=np.int64)[None, :]
        return matmul(self.field, m, self.generator)[0]

    def codewords(self):
        """Iterate over all q^k codewords (small codes only)."""
        F = self.field
        for msg in itertools.product(range(F.q), repeat=self.k):
            if self.k:
                yield self.encode(msg)
            else:
                yield np.zeros(self.n, dtype=np.int64)

    def extend(self) -> LinearCode:
        """Append the coordinate making every codeword sum to zero."""
        F = self.field
        G = self.generator
        col = np.zeros(G.shape[0], dtype=np.int64)
        for j in range(self.n):
            col = F.add_table[col, G[:, j]]
        col = F.neg_table[col]
        return LinearCode(F, np.hstack([G, col[:, None]]), n=self.n + 1)

    def augment(self) -> LinearCode:
        """Adjoin the all-one vector."""
        ones = np.ones((1, self.n), dtype=np.int64)
        return LinearCode(self.field, np.vstack([self.generator, ones]), n=self.n)

    def span_with(self, other: LinearCode) -> LinearCode:
        _same_space(self, other)
        return LinearCode(self.field, np.vstack([self.generator, other.generator]), n=self.n)

    def intersect(self, other: LinearCode) -> LinearCode:
        _same_space(self, other)
        return self.dual().span_with(other.dual()).dual()

    def subcode_of(self, other: LinearCode) -> bool:
        _same_space(self, other)
        return all(other.contains(r) for r in self.generator)

    def reverse(self) -> LinearCode:
        return LinearCode(self.field, self.generator[:, ::-1], n=self.n)

    def is_reversible(self) -> bool:
        """True when C and its dual meet only in zero."""
        return self.intersect(self.dual()).k == 0

    def is_self_orthogonal(self) -> bool:
        return self.subcode_of(self.dual())


def _same_space(a: LinearCode, b: LinearCode) -> None:
    if not (a.field == b.field and a.n == b.n):
        raise CodeError("codes live in different ambient spaces")


def from_generator(field: GaloisField, rows, n: int | None = None) -> LinearCode:
    return LinearCode(field, rows, n=n)


def zero_code(field: GaloisField, n: int) -> LinearCode:
    return LinearCode(field, np.zeros((0, n), dtype=np.int64), n=n)


def full_code(field: GaloisField, n: int) -> LinearCode:
    return LinearCode(field, np.eye(n, dtype=np.int64), n=n)


def cyclic_code(field: GaloisField, g, n: int) -> LinearCode:
    """Cyclic code of length n generated by g(x) (coefficients low first)."""
    g = [int(c) for c in (g.coeffs if hasattr(g, "coeffs") else g)]
    deg = len(g) - 1
    k = n - deg
    if k < 0:
        raise CodeError("generator degree exceeds the length")
    if k == 0:
        return zero_code(field, n)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + deg + 1] = g
    return LinearCode(field, G, n=n)


def parity_check_of_extended(field: GaloisField, H: np.ndarray, n: int) -> np.ndarray:
    """Parity check of the extended code: [1 ... 1 | 1] on top of [H | 0]."""
    H = np.asarray(H, dtype=np.int64).reshape(-1, n)
    top = np.ones((1, n + 1), dtype=np.int64)
    body = np.hstack([H, np.zeros((H.shape[0], 1), dtype=np.int64)])
    return np.vstack([top, body])


def trace_code(tower, code: LinearCode) -> LinearCode:
    """Tr(C) over GF(p) for a code C over GF(q), q = p^m.

    Spanned by Tr(e_t c) for a GF(p)-basis e_t of GF(q) and c running over
    the generator rows; here Tr is the absolute trace GF(q) -> GF(p).
    """
    F = code.field
    if not isinstance(F, FieldContext):
        raise CodeError("trace codes need a prime-power base field")
    p, m = F.p, F.m
    prime = build_field(p, 1)
    rows = []
    for row in code.generator:
        for t in range(m):
            e = p ** t
            rows.append([absolute_trace(F, F.mul(e, int(c))) for c in row])
    if not rows:
        return zero_code(prime, code.n)
    return LinearCode(prime, rows, n=code.n)


def absolute_trace(F: FieldContext, x: int) -> int:
    """x + x^p + ... + x^(p^(m-1)) in GF(p)."""
    s, y = 0, x
    for _ in range(F.m):
        s = F.add(s, y)
        y = F.pow(y, F.p)
    if s >= F.p:
        raise CodeError("absolute trace left the prime field")
    return s
