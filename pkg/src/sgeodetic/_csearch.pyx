# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edge-cover search kernel (at most 64 edges and 64 pairs).

Same branching, bound and memo rules as ``_search.py``; see there.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef enum:
    MEMO_LIMIT = 2097152  # 1 << 21, same cap as the Python kernel


cdef struct Memo:
    uint64_t *cov
    uint64_t *use
    char *full
    size_t cap
    size_t size


cdef inline uint64_t _mix(uint64_t a, uint64_t b) nogil:
    cdef uint64_t h = a * <uint64_t>0x9E3779B97F4A7C15ULL
    h ^= b + <uint64_t>0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)
    h ^= h >> 29
    h *= <uint64_t>0xBF58476D1CE4E5B9ULL
    h ^= h >> 32
    return h


cdef int _memo_init(Memo *t, size_t cap):
    t.cap = cap
    t.size = 0
    t.cov = <uint64_t *>malloc(cap * sizeof(uint64_t))
    t.use = <uint64_t *>malloc(cap * sizeof(uint64_t))
    t.full = <char *>calloc(cap, sizeof(char))
    if t.cov == NULL or t.use == NULL or t.full == NULL:
        return -1
    return 0


cdef void _memo_free(Memo *t):
    free(t.cov)
    free(t.use)
    free(t.full)


cdef bint _memo_has(Memo *t, uint64_t c, uint64_t u) nogil:
    cdef size_t mask = t.cap - 1
    cdef size_t i = _mix(c, u) & mask
    while t.full[i]:
        if t.cov[i] == c and t.use[i] == u:
            return True
        i = (i + 1) & mask
    return False


cdef int _memo_add(Memo *t, uint64_t c, uint64_t u):
    cdef Memo bigger
    cdef size_t i, j, mask
    if t.size >= MEMO_LIMIT:
        return 0
    if 2 * (t.size + 1) > t.cap:
        if _memo_init(&bigger, 2 * t.cap) < 0:
            return -1
        mask = bigger.cap - 1
        for i in range(t.cap):
            if t.full[i]:
                j = _mix(t.cov[i], t.use[i]) & mask
                while bigger.full[j]:
                    j = (j + 1) & mask
                bigger.full[j] = 1
                bigger.cov[j] = t.cov[i]
                bigger.use[j] = t.use[i]
        bigger.size = t.size
        _memo_free(t)
        t[0] = bigger
    mask = t.cap - 1
    i = _mix(c, u) & mask
    while t.full[i]:
        if t.cov[i] == c and t.use[i] == u:
            return 0
        i = (i + 1) & mask
    t.full[i] = 1
    t.cov[i] = c
    t.use[i] = u
    t.size += 1
    return 0


cdef struct Ctx:
    int m
    uint64_t full
    int *cand_pair
    uint64_t *cand_mask
    int *off
    int *ids
    int *pair_len
    int64_t budget
    int64_t nodes
    int *chosen
    int depth
    bint exhausted


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef int _rec(Ctx *cx, Memo *memo, uint64_t covered, uint64_t used, int capacity) except -2:
    cdef uint64_t rest, low
    cdef int e, c, k, ci, p, best_e, best_c, r
    if covered == cx.full:
        return 1
    cx.nodes += 1
    if cx.budget >= 0 and cx.nodes > cx.budget:
        cx.exhausted = True
        return 0
    if _memo_has(memo, covered, used):
        return 0
    rest = cx.full & ~covered
    if _popcount(rest) > capacity:
        if _memo_add(memo, covered, used) < 0:
            raise MemoryError()
        return 0

    best_e = -1
    best_c = -1
    while rest:
        low = rest & (~rest + 1)
        e = __builtin_ctzll(rest)
        rest ^= low
        c = 0
        for k in range(cx.off[e], cx.off[e + 1]):
            if not ((used >> cx.cand_pair[cx.ids[k]]) & 1):
                c += 1
        if best_e < 0 or c < best_c:
            best_e = e
            best_c = c
            if c == 0:
                break

    if best_c > 0:
        for k in range(cx.off[best_e], cx.off[best_e + 1]):
            ci = cx.ids[k]
            p = cx.cand_pair[ci]
            if (used >> p) & 1:
                continue
            cx.chosen[cx.depth] = ci
            cx.depth += 1
            r = _rec(cx, memo, covered | cx.cand_mask[ci], used | ((<uint64_t>1) << p),
                     capacity - cx.pair_len[p])
            if r:
                return 1
            if cx.exhausted:
                return 0
            cx.depth -= 1
    if _memo_add(memo, covered, used) < 0:
        raise MemoryError()
    return 0


def search(int m, int npairs, cand_pair, cand_mask, edge_cands, pair_len, long long budget):
    """Return ``(found, chosen, nodes)``; ``budget < 0`` means unlimited."""
    if m > 64 or npairs > 64:
        raise ValueError("compiled kernel handles at most 64 edges and 64 pairs")
    cdef int ncand = len(cand_pair)
    cdef int total = 0
    cdef int i, k
    cdef Ctx cx
    cdef Memo memo
    for lst in edge_cands:
        total += len(lst)
    cx.m = m
    cx.full = (<uint64_t>0xFFFFFFFFFFFFFFFFULL) if m == 64 else (((<uint64_t>1) << m) - 1)
    cx.cand_pair = <int *>malloc((ncand + 1) * sizeof(int))
    cx.cand_mask = <uint64_t *>malloc((ncand + 1) * sizeof(uint64_t))
    cx.off = <int *>malloc((m + 1) * sizeof(int))
    cx.ids = <int *>malloc((total + 1) * sizeof(int))
    cx.pair_len = <int *>malloc((npairs + 1) * sizeof(int))
    cx.chosen = <int *>malloc((npairs + 1) * sizeof(int))
    cx.budget = budget
    cx.nodes = 0
    cx.depth = 0
    cx.exhausted = False
    if _memo_init(&memo, 1024) < 0:
        raise MemoryError()
    try:
        if (cx.cand_pair == NULL or cx.cand_mask == NULL or cx.off == NULL or cx.ids == NULL
                or cx.pair_len == NULL or cx.chosen == NULL):
            raise MemoryError()
        for i in range(ncand):
            cx.cand_pair[i] = cand_pair[i]
            cx.cand_mask[i] = <uint64_t>cand_mask[i]
        k = 0
        for i in range(m):
            cx.off[i] = k
            for ci in edge_cands[i]:
                cx.ids[k] = ci
                k += 1
        cx.off[m] = k
        capacity = 0
        for i in range(npairs):
            cx.pair_len[i] = pair_len[i]
            capacity += pair_len[i]
        found = _rec(&cx, &memo, 0, 0, capacity)
        if cx.exhausted:
            return None, [], cx.nodes
        if not found:
            return False, [], cx.nodes
        return True, [cx.chosen[i] for i in range(cx.depth)], cx.nodes
    finally:
        free(cx.cand_pair)
        free(cx.cand_mask)
        free(cx.off)
        free(cx.ids)
        free(cx.pair_len)
        free(cx.chosen)
        _memo_free(&memo)
