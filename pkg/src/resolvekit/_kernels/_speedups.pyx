# cython: language_level=3
"""Compiled kernels: all-pairs BFS and pair-distinguisher scans.

Mirrors the contracts of ``_fallback.py``. Distances are int16, CSR
arrays and member lists are int32.
"""

import numpy as np

BACKEND = "cython"


def all_pairs_bfs(const int[:] indptr, const int[:] indices, Py_ssize_t n):
    dist_arr = np.full((n, n), -1, dtype=np.int16)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef short[:, :] dist = dist_arr
    cdef int[:] queue = queue_arr
    cdef Py_ssize_t src, head, tail, j
    cdef int u, v
    cdef short du1
    for src in range(n):
        head = 0
        tail = 0
        queue[tail] = <int> src
        tail += 1
        dist[src, src] = 0
        while head < tail:
            u = queue[head]
            head += 1
            du1 = dist[src, u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[src, v] < 0:
                    dist[src, v] = du1
                    queue[tail] = v
                    tail += 1
    return dist_arr


def first_deficient_pair(const short[:, :] dist, const int[:] members, Py_ssize_t k):
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t s = members.shape[0]
    cdef Py_ssize_t x, y, i, cnt
    cdef int w
    for x in range(n - 1):
        for y in range(x + 1, n):
            cnt = 0
            for i in range(s):
                w = members[i]
                if dist[w, x] != dist[w, y]:
                    cnt += 1
                    if cnt >= k:
                        break
            if cnt < k:
                return x, y
    return -1, -1


def min_pair_coverage(const short[:, :] dist, const int[:] members):
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t s = members.shape[0]
    cdef Py_ssize_t x, y, i, cnt
    cdef Py_ssize_t best = s + 1
    cdef Py_ssize_t bx = -1, by = -1
    cdef int w
    for x in range(n - 1):
        for y in range(x + 1, n):
            cnt = 0
            for i in range(s):
                w = members[i]
                if dist[w, x] != dist[w, y]:
                    cnt += 1
                    if cnt >= best:
                        break
            if cnt < best:
                best = cnt
                bx = x
                by = y
                if best == 0:
                    return best, bx, by
    return best, bx, by
