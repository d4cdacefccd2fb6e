# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernel for dominated k-colorings (graphs up to 64
vertices).  Must stay behaviorally identical to ``_kernel_py``."""

from libc.stdint cimport uint64_t

BACKEND_NAME = "compiled"


cdef int _search(int i, int n_open, int n, int k,
                 uint64_t* adj, uint64_t* class_mask, uint64_t* cand,
                 int* colors) noexcept:
    if i == n:
        return 1
    cdef uint64_t av = adj[i]
    cdef uint64_t bit = (<uint64_t> 1) << i
    cdef uint64_t narrowed, saved
    cdef int c
    for c in range(n_open):
        if class_mask[c] & av:
            continue
        narrowed = cand[c] & av
        if narrowed == 0:
            continue
        saved = cand[c]
        class_mask[c] |= bit
        cand[c] = narrowed
        colors[i] = c
        if _search(i + 1, n_open, n, k, adj, class_mask, cand, colors):
            return 1
        class_mask[c] ^= bit
        cand[c] = saved
    if n_open < k:
        class_mask[n_open] = bit
        cand[n_open] = av
        colors[i] = n_open
        if _search(i + 1, n_open + 1, n, k, adj, class_mask, cand, colors):
            return 1
        class_mask[n_open] = 0
    colors[i] = -1
    return 0


def find_coloring(adj, int k):
    """See ``_kernel_py.find_coloring``; same contract, same output."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    if k <= 0:
        return [] if n == 0 else None
    if k > n:
        k = n
    cdef uint64_t a[64]
    cdef uint64_t class_mask[64]
    cdef uint64_t cand[64]
    cdef int colors[64]
    cdef int i
    for i in range(n):
        a[i] = adj[i]
        colors[i] = -1
    for i in range(k):
        class_mask[i] = 0
        cand[i] = 0
    if _search(0, 0, n, k, a, class_mask, cand, colors):
        return [colors[i] for i in range(n)]
    return None
