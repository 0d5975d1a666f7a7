"""Twin detection, distinguisher sets, and k-resolving verification.

A set ``S`` is k-resolving when every vertex pair has at least ``k``
members of ``S`` at distinct distances from its two endpoints; k=1 is the
classical resolving-set condition and k=2 the fault-tolerant one. Twins
(equal open or closed neighborhoods) are exactly the pairs whose
distinguisher set is the pair itself, which is what makes them forced
members of every fault-tolerant resolving set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from ._kernels import first_deficient_pair, min_pair_coverage
from .graph import DistanceMatrix, Graph


class TwinStructureError(RuntimeError):
    """A twin class mixes open- and closed-neighborhood equality.

    Unreachable for simple graphs (a vertex cannot be a true twin of one
    vertex and a false twin of another), kept as a guard.
    """


@dataclass(frozen=True)
class TwinClass:
    members: tuple[int, ...]
    kind: str  # "true" | "false" | "singleton"


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertices into twin-equivalence classes."""

    classes: tuple[TwinClass, ...]

    def nontrivial(self) -> tuple[TwinClass, ...]:
        return tuple(c for c in self.classes if len(c.members) >= 2)

    def twin_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.nontrivial() for v in c.members)


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by equal closed (true twins) or open (false twins)
    neighborhoods.

    True-twin classes induce complete subgraphs, false-twin classes
    edgeless ones, and every member of a class of size >= 2 has the same
    adjacency toward the rest of the graph, so between two classes the
    edges are all-or-none.
    """
    closed_groups: dict[tuple[int, ...], list[int]] = {}
    open_groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        nbrs = g.adjacency[v]
        open_groups.setdefault(nbrs, []).append(v)
        closed_groups.setdefault(tuple(sorted((v, *nbrs))), []).append(v)

    classes = []
    in_true: set[int] = set()
    in_false: set[int] = set()
    for members in closed_groups.values():
        if len(members) >= 2:
            classes.append(TwinClass(tuple(members), "true"))
            in_true.update(members)
    for members in open_groups.values():
        if len(members) >= 2:
            classes.append(TwinClass(tuple(members), "false"))
            in_false.update(members)
    overlap = in_true & in_false
    if overlap:
        v = min(overlap)
        raise TwinStructureError(
            f"vertex {g.labels[v]!r} shares a closed neighborhood with one "
            f"vertex and an open neighborhood with another; twin classes "
            f"are not homogeneous")
    classes.extend(TwinClass((v,), "singleton")
                   for v in range(g.n) if v not in in_true and v not in in_false)
    classes.sort(key=lambda c: c.members[0])
    return TwinPartition(tuple(classes))


def twin_vertices(g: Graph) -> frozenset[int]:
    """All vertices belonging to some twin pair."""
    return twin_partition(g).twin_vertices()


def all_vertices_twins(g: Graph) -> bool:
    """True iff every vertex has a twin partner.

    Exactly these graphs have fault-tolerant metric dimension equal to
    their order: the twin lower bound forces all of V, and conversely a
    non-twin vertex u leaves V - {u} fault-tolerant.
    """
    return len(twin_vertices(g)) == g.n


class DistinguisherTable:
    """Bitset ``D(x, y)`` for every unordered vertex pair.

    ``D(x, y)`` holds the vertices ``w`` with ``d(w, x) != d(w, y)``; bit
    ``w`` of the Python-int bitset is set when ``w`` distinguishes the
    pair. Both endpoints always belong to their own distinguisher set,
    and ``|D| == 2`` exactly characterizes twins.
    """

    __slots__ = ("n", "_bits")

    def __init__(self, n: int, bits: list[int]):
        self.n = n
        self._bits = bits

    def _index(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        if x == y or not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"not a vertex pair: ({x}, {y})")
        return x * (2 * self.n - x - 1) // 2 + (y - x - 1)

    def bits(self, x: int, y: int) -> int:
        return self._bits[self._index(x, y)]

    def vertices(self, x: int, y: int) -> tuple[int, ...]:
        b = self.bits(x, y)
        out = []
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return tuple(out)

    def size(self, x: int, y: int) -> int:
        return self.bits(x, y).bit_count()

    def iter_pairs(self):
        i = 0
        for x in range(self.n - 1):
            for y in range(x + 1, self.n):
                yield x, y, self._bits[i]
                i += 1


def distinguisher_table(g: Graph, dm: DistanceMatrix) -> DistinguisherTable:
    """Exact distinguisher bitsets for all pairs of ``g``."""
    n = g.n
    d = dm.d
    bits: list[int] = []
    for x in range(n - 1):
        diff = d[:, x + 1:] != d[:, x:x + 1]  # rows w, columns y-x-1
        packed = np.packbits(diff.T, axis=1, bitorder="little")
        bits.extend(int.from_bytes(row.tobytes(), "little") for row in packed)
    return DistinguisherTable(n, bits)


class ResolveCheck(NamedTuple):
    ok: bool
    violating_pair: Optional[tuple[int, int]]

    def __bool__(self):
        return self.ok


def _canonical_members(g: Graph, members: Iterable[int]) -> np.ndarray:
    out = sorted(set(members))
    for v in out:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < g.n:
            raise ValueError(f"vertex identifier {v!r} out of range for n={g.n}")
    return np.asarray(out, dtype=np.int32)


def check_k_resolving(g: Graph, dm: DistanceMatrix,
                      members: Iterable[int], k: int) -> ResolveCheck:
    """Verify that every pair has >= k distinguishers in ``members``.

    On failure, reports the first violating pair in lexicographic
    (min, max) order.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    arr = _canonical_members(g, members)
    if g.n >= 2:
        x, y = first_deficient_pair(dm.d, arr, k)
        if x >= 0:
            return ResolveCheck(False, (int(x), int(y)))
    return ResolveCheck(True, None)


def is_k_resolving(g: Graph, dm: DistanceMatrix,
                   members: Iterable[int], k: int) -> bool:
    return check_k_resolving(g, dm, members, k).ok


def _is_resolving(dm: DistanceMatrix, members: np.ndarray) -> bool:
    # Resolving <=> the distance vectors to the members are pairwise
    # distinct, i.e. the member rows have n distinct columns.
    if len(members) == 0:
        return dm.n == 1
    cols = dm.d[members, :].T
    return len(np.unique(cols, axis=0)) == dm.n


def is_fault_tolerant_by_removal(g: Graph, dm: DistanceMatrix,
                                 members: Iterable[int]) -> bool:
    """Removal-form fault tolerance: ``S`` resolves and so does every
    ``S - {u}``.

    Equivalent to ``is_k_resolving(..., k=2)``; kept as an independent
    second route for that equivalence.
    """
    arr = _canonical_members(g, members)
    if not _is_resolving(dm, arr):
        return False
    for i in range(len(arr)):
        reduced = np.delete(arr, i)
        if not _is_resolving(dm, reduced):
            return False
    return True


def kappa(g: Graph, dm: DistanceMatrix) -> int:
    """Largest k admitting a k-resolving set: the minimum over pairs of
    the distinguisher-set size (the full vertex set is then k-resolving,
    and no set can cover the minimizing pair more often)."""
    if g.n < 2:
        raise ValueError("kappa requires at least two vertices")
    members = np.arange(g.n, dtype=np.int32)
    count, _, _ = min_pair_coverage(dm.d, members)
    return int(count)


def min_distinguisher_pair(g: Graph, dm: DistanceMatrix) -> tuple[int, int, int]:
    """(size, x, y): the first pair attaining the minimum |D(x, y)|."""
    if g.n < 2:
        raise ValueError("needs at least two vertices")
    members = np.arange(g.n, dtype=np.int32)
    count, x, y = min_pair_coverage(dm.d, members)
    return int(count), int(x), int(y)
