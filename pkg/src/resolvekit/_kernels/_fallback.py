"""Pure-Python/NumPy implementations of the hot kernels.

Same contracts as the compiled backend in ``_speedups.pyx``; used whenever
the extension is unavailable or ``RESOLVEKIT_PURE`` is set.
"""

from __future__ import annotations

from collections import deque

import numpy as np

BACKEND = "python"


def all_pairs_bfs(indptr, indices, n):
    """Hop distances between all vertex pairs of a CSR adjacency.

    Returns an ``n x n`` int16 matrix with -1 wherever a vertex is
    unreachable from the row's source.
    """
    neighbors = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    dist = np.empty((n, n), dtype=np.int16)
    for src in range(n):
        row = [-1] * n
        row[src] = 0
        queue = deque((src,))
        while queue:
            u = queue.popleft()
            du1 = row[u] + 1
            for v in neighbors[u]:
                if row[v] < 0:
                    row[v] = du1
                    queue.append(v)
        dist[src] = row
    return dist


def first_deficient_pair(dist, members, k):
    """First vertex pair (lexicographic, x < y) with fewer than ``k``
    members of ``members`` at distinct distances from x and y.

    Returns (-1, -1) when every pair has at least ``k`` distinguishers.
    """
    n = dist.shape[0]
    sub = dist[members, :]
    for x in range(n - 1):
        counts = (sub[:, x + 1:] != sub[:, x:x + 1]).sum(axis=0)
        bad = np.flatnonzero(counts < k)
        if bad.size:
            return x, x + 1 + int(bad[0])
    return -1, -1


def min_pair_coverage(dist, members):
    """Minimum over vertex pairs of the number of distinguishing members,
    with the first pair (lexicographic) attaining it.

    Requires at least two vertices.
    """
    n = dist.shape[0]
    sub = dist[members, :]
    best = len(members) + 1
    bx = by = -1
    for x in range(n - 1):
        counts = (sub[:, x + 1:] != sub[:, x:x + 1]).sum(axis=0)
        j = int(np.argmin(counts))
        c = int(counts[j])
        if c < best:
            best, bx, by = c, x, x + 1 + j
            if best == 0:
                break
    return best, bx, by
