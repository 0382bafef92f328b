"""Pure Python / numpy versions of the compiled kernels, same signatures."""

from __future__ import annotations

import itertools
import sys
from math import comb

import numpy as np

_LOW_TARGET = 1 << 14


def weight_counts(rows, add, mul, offset):
    """Weight histogram of offset + span(rows) by meet in the middle.

    The low rows are expanded into a table of partial sums once; the high
    rows are walked one combination at a time and added to the whole table.
    """
    rows = np.asarray(rows, dtype=np.int64)
    add = np.asarray(add)
    mul = np.asarray(mul)
    offset = np.asarray(offset, dtype=np.int64)
    k, n = rows.shape[0], offset.shape[0]
    q = add.shape[0]
    nlow = 0
    while nlow < k and q ** (nlow + 1) <= _LOW_TARGET:
        nlow += 1
    if nlow == 0 and k:
        nlow = 1
    low = offset[None, :]
    for i in range(nlow):
        mults = mul[:, rows[i]]
        low = add[low[:, None, :], mults[None, :, :]].reshape(-1, n)
    counts = np.zeros(n + 1, dtype=np.int64)
    high = rows[nlow:]
    multiples = [mul[:, r] for r in high]
    for digits in itertools.product(range(q), repeat=len(high)):
        h = np.zeros(n, dtype=np.int64)
        for a, m in zip(digits, multiples):
            if a:
                h = add[h, m[a]]
        block = add[low, h[None, :]] if h.any() else low
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return counts


def weight_counts_binary(rows, offset):
    """Binary case on bit-packed uint64 words with numpy popcounts."""
    rows = np.asarray(rows, dtype=np.uint8)
    offset = np.asarray(offset, dtype=np.uint8)
    k, n = rows.shape[0], offset.shape[0]
    pad = (-n) % 64
    def pack(v):
        v = np.concatenate([v, np.zeros(v.shape[:-1] + (pad,), dtype=np.uint8)], axis=-1)
        return np.packbits(v, axis=-1, bitorder="little").view(np.uint64)
    R = pack(rows) if k else np.zeros((0, (n + pad) // 64), dtype=np.uint64)
    off = pack(offset)
    nlow = min(k, 16)
    low = off[None, :]
    for i in range(nlow):
        low = np.concatenate([low, low ^ R[i][None, :]])
    counts = np.zeros(n + 1, dtype=np.int64)
    for digits in itertools.product((0, 1), repeat=k - nlow):
        h = np.zeros_like(off)
        for a, r in zip(digits, R[nlow:]):
            if a:
                h ^= r
        w = np.bitwise_count(low ^ h[None, :]).sum(axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return counts


class _Search:
    def __init__(self, cols, add, mul, inv, max_nodes):
        self.cols = np.asarray(cols).tolist()
        self.n = len(self.cols)
        self.k = len(self.cols[0]) if self.n else 0
        self.add = np.asarray(add).tolist()
        self.mul = np.asarray(mul).tolist()
        self.inv = np.asarray(inv).tolist()
        q = len(self.add)
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.max_nodes = int(max_nodes)
        self.nodes = 0
        self.aborted = False
        self.basis: list[list[int]] = []
        self.piv: list[int] = []
        self.coef: list[list[int]] = []

    def reduce(self, j, rank, track):
        add, mul, neg = self.add, self.mul, self.neg
        v = list(self.cols[j])
        t = [0] * rank
        for r in range(rank):
            pv = self.piv[r]
            c = v[pv]
            if c:
                f = neg[c]
                mf = mul[f]
                b = self.basis[r]
                for i in range(pv, self.k):
                    if b[i]:
                        v[i] = add[v[i]][mf[b[i]]]
                if track:
                    cr = self.coef[r]
                    for l in range(rank):
                        if cr[l]:
                            t[l] = add[t[l]][mf[cr[l]]]
        for i, x in enumerate(v):
            if x:
                return i, v, t
        return -1, v, t

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            self.aborted = True
        return self.aborted


def rank_profile(cols, add, mul, inv, max_nodes):
    """Count column subsets by (size, rank); returns (table, nodes, complete)."""
    s = _Search(cols, add, mul, inv, max_nodes)
    n, k = s.n, s.k
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def dfs(start, size, rank):
        for j in range(start, n):
            if s.aborted or s.tick():
                return
            p, v, _ = s.reduce(j, rank, False)
            newrank = rank
            if p >= 0:
                sc = s.mul[s.inv[v[p]]]
                row = [sc[x] for x in v]
                if len(s.basis) > rank:
                    s.basis[rank] = row
                    s.piv[rank] = p
                else:
                    s.basis.append(row)
                    s.piv.append(p)
                newrank = rank + 1
            table[size + 1][newrank] += 1
            if newrank == k:
                rem = n - 1 - j
                for t in range(1, rem + 1):
                    table[size + 1 + t][k] += comb(rem, t)
            else:
                dfs(j + 1, size + 1, newrank)

    dfs(0, 0, 0)
    return np.asarray(table, dtype=np.int64), s.nodes, not s.aborted


def min_circuits(cols, add, mul, inv, max_nodes):
    """Smallest circuit size through each column (n + 2 if none)."""
    s = _Search(cols, add, mul, inv, max_nodes)
    n, k = s.n, s.k
    best = [n + 2] * n
    members = [0] * (k + 1)
    s.basis = [[0] * k for _ in range(k + 1)]
    s.piv = [0] * (k + 1)
    s.coef = [[0] * (k + 1) for _ in range(k + 1)]

    def dfs(start, size, limit):
        for j in range(start, n):
            if s.aborted or s.tick():
                return
            p, v, t = s.reduce(j, size, True)
            if p < 0:
                supp = [l for l in range(size) if t[l]]
                c = 1 + len(supp)
                if c < best[j]:
                    best[j] = c
                for l in supp:
                    if c < best[members[l]]:
                        best[members[l]] = c
            elif size + 1 <= limit:
                sc = s.inv[v[p]]
                ms = s.mul[sc]
                s.basis[size] = [ms[x] for x in v]
                s.coef[size] = [ms[x] for x in t] + [0] * (k + 1 - size)
                s.coef[size][size] = sc
                s.piv[size] = p
                members[size] = j
                dfs(j + 1, size + 1, limit)

    for L in range(k + 1):
        dfs(0, 0, L)
        if s.aborted or all(b <= L + 1 for b in best):
            break
    return np.asarray(best, dtype=np.int64), s.nodes, not s.aborted
