# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maximal-matching counter for graphs with at most 64 vertices.

Same search as ``_pykernel.count``, on ``uint64`` bitmasks.
"""
from libc.stdint cimport uint64_t

BACKEND = "cython"
MAX_VERTICES = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef uint64_t _rec(uint64_t D, uint64_t U, const uint64_t* adj,
                   const uint64_t* avail, uint64_t must) noexcept nogil:
    if D == 0:
        return 1
    cdef int v = __builtin_ctzll(D)
    cdef uint64_t vb = (<uint64_t>1) << v
    cdef uint64_t rest = D & ~vb
    cdef uint64_t cand = avail[v] & rest
    cdef bint forced = (must & vb) != 0 or (adj[v] & U) != 0
    cdef uint64_t total = 0
    cdef uint64_t ub, nb, wb
    if forced and cand == 0:
        return 0
    while cand:
        ub = cand & (~cand + 1)
        cand ^= ub
        total += _rec(rest & ~ub, U, adj, avail, must)
    if not forced:
        nb = adj[v] & rest
        while nb:
            wb = nb & (~nb + 1)
            nb ^= wb
            if (avail[__builtin_ctzll(wb)] & rest) == 0:
                return total
        total += _rec(rest, U | vb, adj, avail, must)
    return total


def count(adj, avail, must, D, U):
    cdef Py_ssize_t n = len(adj)
    if n > MAX_VERTICES:
        raise ValueError(f"compiled kernel handles at most {MAX_VERTICES} vertices")
    cdef uint64_t cadj[64]
    cdef uint64_t cavail[64]
    cdef Py_ssize_t j
    for j in range(n):
        cadj[j] = adj[j]
        cavail[j] = avail[j]
    cdef uint64_t cmust = must, cD = D, cU = U, result
    with nogil:
        result = _rec(cD, cU, cadj, cavail, cmust)
    return int(result)
