# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: codeword weight enumeration and matroid searches.

All field arithmetic goes through flat q*q lookup tables passed in from
Python, so the same code serves every GF(q).
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, int64_t, int32_t

cnp.import_array()

cdef extern from *:
    """
    static inline int ext_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ext_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int ext_popcount64(unsigned long long x) nogil
    int ext_ctz64(unsigned long long x) nogil


def weight_counts(const int32_t[:, ::1] rows, const int32_t[:, ::1] add, const int32_t[:, ::1] mul,
                  const int32_t[::1] offset):
    """Weight histogram of offset + span(rows), counted over all q^k combinations."""
    cdef int k = rows.shape[0]
    cdef int n = offset.shape[0]
    cdef int q = add.shape[0]
    cdef cnp.ndarray[int64_t, ndim=1] out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] counts = out
    cdef int32_t* D = <int32_t*> malloc(max(k * q * n, 1) * sizeof(int32_t))
    cdef int32_t* cur = <int32_t*> malloc(max(n, 1) * sizeof(int32_t))
    cdef int32_t* dig = <int32_t*> calloc(max(k, 1), sizeof(int32_t))
    cdef const int32_t* A = &add[0, 0]
    cdef const int32_t* Mt = &mul[0, 0]
    cdef int i, j, t, w, old, new, diff, neg
    cdef int32_t* d
    if D == NULL or cur == NULL or dig == NULL:
        free(D); free(cur); free(dig)
        raise MemoryError()
    with nogil:
        for i in range(k):
            for t in range(q):
                # e_{t+1} - e_t with encodings as the digit alphabet
                neg = 0
                for j in range(q):
                    if A[t * q + j] == 0:
                        neg = j
                        break
                diff = A[((t + 1) % q) * q + neg]
                for j in range(n):
                    D[(i * q + t) * n + j] = Mt[diff * q + rows[i, j]]
        w = 0
        for j in range(n):
            cur[j] = offset[j]
            if cur[j] != 0:
                w += 1
        counts[w] += 1
        while True:
            i = 0
            while i < k:
                t = dig[i]
                d = D + (i * q + t) * n
                for j in range(n):
                    if d[j] != 0:
                        old = cur[j]
                        new = A[old * q + d[j]]
                        cur[j] = new
                        w += (new != 0) - (old != 0)
                dig[i] = t + 1 if t + 1 < q else 0
                if dig[i] != 0:
                    break
                i += 1
            if i == k:
                break
            counts[w] += 1
    free(D); free(cur); free(dig)
    return out


def weight_counts_binary(const cnp.uint8_t[:, ::1] rows, const cnp.uint8_t[::1] offset):
    """Binary special case: bit-packed words walked in Gray-code order."""
    cdef int k = rows.shape[0]
    cdef int n = offset.shape[0]
    cdef int W = (n + 63) // 64
    cdef cnp.ndarray[int64_t, ndim=1] out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] counts = out
    cdef uint64_t* R = <uint64_t*> calloc(max(k * W, 1), sizeof(uint64_t))
    cdef uint64_t* cur = <uint64_t*> calloc(W, sizeof(uint64_t))
    cdef int i, j, w, b
    cdef uint64_t t, total
    if R == NULL or cur == NULL:
        free(R); free(cur)
        raise MemoryError()
    with nogil:
        for i in range(k):
            for j in range(n):
                if rows[i, j]:
                    R[i * W + j // 64] |= (<uint64_t> 1) << (j % 64)
        for j in range(n):
            if offset[j]:
                cur[j // 64] |= (<uint64_t> 1) << (j % 64)
        w = 0
        for b in range(W):
            w += ext_popcount64(cur[b])
        counts[w] += 1
        total = (<uint64_t> 1) << k
        t = 1
        while t < total:
            i = ext_ctz64(t)
            w = 0
            for b in range(W):
                cur[b] ^= R[i * W + b]
                w += ext_popcount64(cur[b])
            counts[w] += 1
            t += 1
    free(R); free(cur)
    return out


cdef struct Search:
    int n, k, q
    const int32_t* cols      # n x k, column j of G at cols[j*k]
    const int32_t* add
    const int32_t* mul
    const int32_t* inv
    int32_t* neg
    int32_t* basis           # k x k, row r has its pivot at piv[r]
    int32_t* piv
    int32_t* scratch         # k
    int32_t* coef            # k x k combination of chosen columns
    int32_t* tcoef           # k
    int32_t* members         # k
    int64_t* table           # (n+1) x (k+1)
    int64_t* binom           # (n+1) x (n+1)
    int64_t* best            # n
    int64_t nodes
    int64_t max_nodes
    int aborted
    int limit                # largest independent set explored


cdef inline int reduce_col(Search* s, int j, int rank, int track) nogil:
    """Reduce column j against the current basis; return pivot or -1."""
    cdef int k = s.k, q = s.q
    cdef int r, t, c, f, pv
    cdef int32_t* v = s.scratch
    memcpy(v, s.cols + j * k, k * sizeof(int32_t))
    if track:
        memset(s.tcoef, 0, k * sizeof(int32_t))
    for r in range(rank):
        pv = s.piv[r]
        c = v[pv]
        if c != 0:
            f = s.neg[c]
            for t in range(pv, k):
                if s.basis[r * k + t] != 0:
                    v[t] = s.add[v[t] * q + s.mul[f * q + s.basis[r * k + t]]]
            if track:
                for t in range(rank):
                    if s.coef[r * k + t] != 0:
                        s.tcoef[t] = s.add[s.tcoef[t] * q + s.mul[f * q + s.coef[r * k + t]]]
    for t in range(k):
        if v[t] != 0:
            return t
    return -1


cdef void rank_dfs(Search* s, int start, int size, int rank) nogil:
    cdef int j, p, t, rem, newrank, k = s.k, q = s.q, sc
    for j in range(start, s.n):
        if s.aborted:
            return
        s.nodes += 1
        if s.nodes > s.max_nodes:
            s.aborted = 1
            return
        p = reduce_col(s, j, rank, 0)
        newrank = rank
        if p >= 0:
            sc = s.inv[s.scratch[p]]
            for t in range(k):
                s.basis[rank * k + t] = s.mul[sc * q + s.scratch[t]]
            s.piv[rank] = p
            newrank = rank + 1
        s.table[(size + 1) * (k + 1) + newrank] += 1
        if newrank == k:
            # every superset has full rank
            rem = s.n - 1 - j
            for t in range(1, rem + 1):
                s.table[(size + 1 + t) * (k + 1) + k] += s.binom[rem * (s.n + 1) + t]
        else:
            rank_dfs(s, j + 1, size + 1, newrank)


cdef void circuit_dfs(Search* s, int start, int size) nogil:
    cdef int j, p, t, l, csize, k = s.k, q = s.q, sc
    for j in range(start, s.n):
        if s.aborted:
            return
        s.nodes += 1
        if s.nodes > s.max_nodes:
            s.aborted = 1
            return
        p = reduce_col(s, j, size, 1)
        if p < 0:
            # column j closes a circuit with the chosen members it depends on
            csize = 1
            for l in range(size):
                if s.tcoef[l] != 0:
                    csize += 1
            if csize < s.best[j]:
                s.best[j] = csize
            for l in range(size):
                if s.tcoef[l] != 0 and csize < s.best[s.members[l]]:
                    s.best[s.members[l]] = csize
        elif size + 1 <= s.limit:
            sc = s.inv[s.scratch[p]]
            for t in range(k):
                s.basis[size * k + t] = s.mul[sc * q + s.scratch[t]]
                s.coef[size * k + t] = 0
            for l in range(size):
                s.coef[size * k + l] = s.mul[sc * q + s.tcoef[l]]
            s.coef[size * k + size] = sc
            s.piv[size] = p
            s.members[size] = j
            circuit_dfs(s, j + 1, size + 1)


cdef int setup(Search* s, const int32_t[:, ::1] cols, const int32_t[:, ::1] add,
               const int32_t[:, ::1] mul, const int32_t[::1] inv, int64_t max_nodes):
    cdef int n = cols.shape[0], k = cols.shape[1], q = add.shape[0]
    cdef int i, j
    s.n = n; s.k = k; s.q = q
    s.cols = &cols[0, 0]
    s.add = &add[0, 0]
    s.mul = &mul[0, 0]
    s.inv = &inv[0]
    s.neg = <int32_t*> calloc(q, sizeof(int32_t))
    s.basis = <int32_t*> calloc(k * k + 1, sizeof(int32_t))
    s.piv = <int32_t*> calloc(k + 1, sizeof(int32_t))
    s.scratch = <int32_t*> calloc(k + 1, sizeof(int32_t))
    s.coef = <int32_t*> calloc(k * k + 1, sizeof(int32_t))
    s.tcoef = <int32_t*> calloc(k + 1, sizeof(int32_t))
    s.members = <int32_t*> calloc(k + 1, sizeof(int32_t))
    s.table = <int64_t*> calloc((n + 1) * (k + 1), sizeof(int64_t))
    s.binom = <int64_t*> calloc((n + 1) * (n + 1), sizeof(int64_t))
    s.best = <int64_t*> calloc(n + 1, sizeof(int64_t))
    s.nodes = 0
    s.max_nodes = max_nodes
    s.aborted = 0
    s.limit = k
    for i in range(q):
        for j in range(q):
            if s.add[i * q + j] == 0:
                s.neg[i] = j
                break
    for i in range(n + 1):
        s.binom[i * (n + 1)] = 1
        for j in range(1, i + 1):
            s.binom[i * (n + 1) + j] = s.binom[(i - 1) * (n + 1) + j - 1] + (
                s.binom[(i - 1) * (n + 1) + j] if j < i else 0)
    for i in range(n):
        s.best[i] = n + 2
    return 0


cdef void teardown(Search* s):
    free(s.neg); free(s.basis); free(s.piv); free(s.scratch); free(s.coef)
    free(s.tcoef); free(s.members); free(s.table); free(s.binom); free(s.best)


def rank_profile(const int32_t[:, ::1] cols, const int32_t[:, ::1] add, const int32_t[:, ::1] mul,
                 const int32_t[::1] inv, int64_t max_nodes):
    """Count column subsets by (size, rank).

    Returns (table, nodes, complete) with table[z, r] the number of z-subsets
    of rank r. Subsets of size zero are included as table[0, 0] = 1.
    """
    cdef Search s
    cdef int n = cols.shape[0], k = cols.shape[1]
    setup(&s, cols, add, mul, inv, max_nodes)
    try:
        s.table[0] = 1
        with nogil:
            rank_dfs(&s, 0, 0, 0)
        out = np.empty((n + 1, k + 1), dtype=np.int64)
        for i in range(n + 1):
            for j in range(k + 1):
                out[i, j] = s.table[i * (k + 1) + j]
        return out, int(s.nodes), not s.aborted
    finally:
        teardown(&s)


def min_circuits(const int32_t[:, ::1] cols, const int32_t[:, ::1] add, const int32_t[:, ::1] mul,
                 const int32_t[::1] inv, int64_t max_nodes):
    """Smallest circuit size through each column (n + 2 if none).

    Returns (best, nodes, complete).
    """
    cdef Search s
    cdef int n = cols.shape[0], k = cols.shape[1]
    cdef int i, done, L
    setup(&s, cols, add, mul, inv, max_nodes)
    try:
        # circuits of size <= L + 1 all appear once independent sets of size
        # <= L have been tried, so deepen until every column is settled
        with nogil:
            for L in range(k + 1):
                s.limit = L
                circuit_dfs(&s, 0, 0)
                if s.aborted:
                    break
                done = 1
                for i in range(n):
                    if s.best[i] > L + 1:
                        done = 0
                        break
                if done:
                    break
        out = np.empty(n, dtype=np.int64)
        for i in range(n):
            out[i] = s.best[i]
        return out, int(s.nodes), not s.aborted
    finally:
        teardown(&s)
