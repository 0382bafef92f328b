"""Row reduction over GF(q) on numpy arrays of encodings, via lookup tables."""

from __future__ import annotations

import numpy as np

from .field import GaloisField


def as_matrix(rows, n: int | None = None) -> np.ndarray:
    """Coerce a list of rows to a 2-d int64 array; rejects ragged input."""
    if isinstance(rows, np.ndarray):
        M = rows.astype(np.int64, copy=True)
        if M.ndim == 1:
            M = M[None, :]
    else:
        rows = [list(r) for r in rows]
        lens = {len(r) for r in rows}
        if len(lens) > 1:
            raise ValueError(f"ragged generator rows with lengths {sorted(lens)}")
        if not rows:
            if n is None:
                raise ValueError("cannot infer length from an empty generator")
            return np.zeros((0, n), dtype=np.int64)
        M = np.asarray(rows, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("generator must be two dimensional")
    return M


def rref(F: GaloisField, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        f = R[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            R[hit] = add[R[hit], mul[neg[f[hit]][:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: GaloisField, M: np.ndarray) -> int:
    return len(rref(F, M)[1])


def nullspace(F: GaloisField, M: np.ndarray, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {v : M v^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if n is None else n
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in set(piv)]
    neg = F.neg_table
    B = np.zeros((len(free), n), dtype=np.int64)
    for t, fcol in enumerate(free):
        B[t, fcol] = 1
        for i, pc in enumerate(piv):
            B[t, pc] = neg[R[i, fcol]]
    return B


def matmul(F: GaloisField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """A @ B over the field."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    add, mul = F.add_table, F.mul_table
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for l in range(A.shape[1]):
        out = add[out, mul[A[:, l][:, None], B[l][None, :]]]
    return out


def reduce_vector(F: GaloisField, R: np.ndarray, pivots: list[int], v: np.ndarray) -> np.ndarray:
    """Remainder of v after clearing the pivot positions of an RREF matrix."""
    add, mul, neg = F.add_table, F.mul_table, F.neg_table
    v = np.array(v, dtype=np.int64, copy=True)
    for i, c in enumerate(pivots):
        if v[c]:
            v = add[v, mul[neg[v[c]], R[i]]]
    return v
