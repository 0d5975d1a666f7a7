"""Immutable labeled simple graphs and all-pairs hop distances.

Vertices are dense integers ``0..n-1``, each with a unique display label.
A :class:`Graph` is frozen once built and safe to share across threads,
as is the :class:`DistanceMatrix` computed from it. Algorithms elsewhere
in the package address vertices only by identifier; labels exist for
input, output, and generator semantics.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from ._kernels import all_pairs_bfs as _all_pairs_bfs


class GraphError(ValueError):
    """Malformed graph input: duplicate edges, self-loops, bad labels."""


class Graph:
    """A frozen undirected simple graph with labeled vertices.

    Parameters
    ----------
    labels : sequence of str
        One unique label per vertex; position is the vertex identifier.
    edges : sequence of (int, int)
        Vertex-id pairs. Order and orientation are preserved in
        ``edge_list`` so that serialized output round-trips exactly.
    """

    __slots__ = ("n", "m", "labels", "adjacency", "edge_list",
                 "_label_ids", "_edge_set", "_indptr", "_indices")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        labels = tuple(labels)
        if not labels:
            raise GraphError("a graph needs at least one vertex")
        seen = set()
        for lab in labels:
            if lab in seen:
                raise GraphError(f"duplicate vertex label {lab!r}")
            seen.add(lab)
        n = len(labels)
        adj: list[list[int]] = [[] for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        edge_list: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {labels[u]!r}")
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                raise GraphError(
                    f"duplicate edge {labels[key[0]]!r} -- {labels[key[1]]!r}")
            edge_set.add(key)
            edge_list.append((u, v))
            adj[u].append(v)
            adj[v].append(u)

        self.n = n
        self.m = len(edge_list)
        self.labels = labels
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self.edge_list = tuple(edge_list)
        self._label_ids = {lab: i for i, lab in enumerate(labels)}
        self._edge_set = frozenset(edge_set)
        indptr = np.zeros(n + 1, dtype=np.int32)
        for v in range(n):
            indptr[v + 1] = indptr[v] + len(self.adjacency[v])
        indices = np.empty(2 * self.m, dtype=np.int32)
        for v in range(n):
            indices[indptr[v]:indptr[v + 1]] = self.adjacency[v]
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._indptr = indptr
        self._indices = indices

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def vertex(self, label: str) -> int:
        """Identifier of the vertex carrying ``label``."""
        try:
            return self._label_ids[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def label(self, v: int) -> str:
        return self.labels[v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edge_list == other.edge_list

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    ``d`` is a read-only ``n x n`` int16 array; ``d[u, v]`` is the number
    of edges on a shortest u,v-path.
    """

    __slots__ = ("n", "d")

    def __init__(self, n: int, d: np.ndarray):
        self.n = n
        self.d = d

    def distance(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def __repr__(self):
        return f"DistanceMatrix(n={self.n})"


def build_graph(pairs: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from label pairs.

    Identifiers are assigned in first-appearance order, scanning pairs
    left to right. Rejects an empty list, self-loops, and a pair repeated
    in either order.
    """
    pairs = list(pairs)
    if not pairs:
        raise GraphError("empty edge list")
    ids: dict[str, int] = {}
    edges = []
    for a, b in pairs:
        if a == b:
            raise GraphError(f"self-loop {a!r}")
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        edges.append((u, v))
    return Graph(tuple(ids), edges)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n == 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque((0,))
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.n


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; rejects disconnected input."""
    if g.n == 1:
        d = np.zeros((1, 1), dtype=np.int16)
        d.setflags(write=False)
        return DistanceMatrix(1, d)
    d = _all_pairs_bfs(g._indptr, g._indices, g.n)
    unreached = np.flatnonzero(d[0] < 0)
    if unreached.size:
        raise GraphError(
            f"graph is disconnected: {g.labels[int(unreached[0])]!r} "
            f"is unreachable from {g.labels[0]!r}")
    d.setflags(write=False)
    return DistanceMatrix(g.n, d)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format.

    ``p <n> <m>`` header, then one ``e <label1> <label2>`` line per edge
    in construction order. Labels must be whitespace-free and every
    vertex must occur in some edge, otherwise the graph cannot round-trip
    through :func:`parse_edge_list`.
    """
    for lab in g.labels:
        if lab != lab.strip() or any(ch.isspace() for ch in lab):
            raise GraphError(f"label {lab!r} contains whitespace")
    if g.n > 0 and min(g.degree(v) for v in range(g.n)) == 0:
        v = next(v for v in range(g.n) if g.degree(v) == 0)
        raise GraphError(
            f"isolated vertex {g.labels[v]!r} cannot be expressed in the "
            f"edge-list format")
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {g.labels[u]} {g.labels[v]}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; tolerates ``c`` comment lines."""
    n = m = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: repeated header")
            if len(tokens) != 3:
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphError(
                    f"line {lineno}: non-integer header {raw!r}") from None
        elif tokens[0] == "e":
            if len(tokens) != 3:
                raise GraphError(f"line {lineno}: malformed edge {raw!r}")
            pairs.append((tokens[1], tokens[2]))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {raw!r}")
    if n is None:
        raise GraphError("missing 'p <n> <m>' header")
    g = build_graph(pairs)
    if g.n != n or g.m != m:
        raise GraphError(
            f"header says n={n} m={m} but edges define n={g.n} m={g.m}")
    return g
