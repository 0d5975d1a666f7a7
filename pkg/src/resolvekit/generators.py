"""Constructors for every graph family the toolkit analyzes.

Butterfly and Benes multistage interconnection networks, the
circumcoronene benzenoid series H_n, silicate networks built on it by
edge subdivision plus tetrahedron completion, the classical families used
as solver fixtures, and a seeded random connected graph for oracle
sweeps. Every generator returns a :class:`~resolvekit.graph.Graph` whose
labels carry the construction semantics (row/level pairs, lattice
coordinates, roles); identifiers stay internal.
"""

from __future__ import annotations

import random
import re
import warnings
from itertools import combinations

from .graph import Graph, build_graph

__all__ = [
    "butterfly", "benes", "circumcoronene", "silicate",
    "path", "cycle", "complete", "complete_bipartite",
    "join_complete_empty", "join_complete_k1_kt", "classical",
    "random_connected_graph",
    "level_of_label", "silicate_kind", "silicate_radius_sq",
]


# ---------------------------------------------------------------------------
# butterfly / Benes

def _row(s: int, r: int) -> str:
    return format(s, f"0{r}b")


def _wing(s: int, r: int, level: int) -> str:
    return f"[{_row(s, r)},{level}]"


_LEVEL_RE = re.compile(r"^\[[01]+,(\d+)\]$")


def level_of_label(label: str) -> int:
    """Level component of a butterfly/Benes vertex label like ``[0110,3]``."""
    m = _LEVEL_RE.match(label)
    if m is None:
        raise ValueError(f"not a row/level label: {label!r}")
    return int(m.group(1))


def butterfly(r: int) -> Graph:
    """Butterfly network of dimension ``r``.

    Vertices are pairs of an r-bit row string and a level in ``0..r``;
    order ``2^r (r+1)``, size ``r 2^(r+1)``. A vertex at level ``j-1`` is
    adjacent to the level-``j`` vertices in the same row and in the row
    differing in bit ``j``, where bits are 1-indexed from the most
    significant end. (Either endianness gives an isomorphic graph; one is
    fixed so labels are reproducible.)
    """
    if r < 2:
        raise ValueError(f"butterfly requires r >= 2, got {r}")
    if r == 2:
        warnings.warn("butterfly(2) is below the usual r >= 3 range; "
                      "accepted for small-scale testing", stacklevel=2)
    rows = 1 << r
    pairs = []
    for j in range(1, r + 1):
        flip = 1 << (r - j)
        for s in range(rows):
            pairs.append((_wing(s, r, j - 1), _wing(s, r, j)))
            pairs.append((_wing(s, r, j - 1), _wing(s ^ flip, r, j)))
    return build_graph(pairs)


def benes(r: int) -> Graph:
    """Benes network of dimension ``r``: back-to-back butterflies.

    Vertices are row/level pairs with levels ``0..2r``; order
    ``2^r (2r+1)``, size ``r 2^(r+2)``. Levels ``0..r`` copy the
    butterfly adjacency; the edges between levels ``i`` and ``i+1`` for
    ``i >= r`` mirror those between levels ``2r-i`` and ``2r-i-1``, so the
    rowwise level reflection ``i -> 2r-i`` is an automorphism by
    construction.
    """
    if r < 2:
        raise ValueError(f"benes requires r >= 2, got {r}")
    if r == 2:
        warnings.warn("benes(2) is below the usual r >= 3 range; "
                      "accepted for small-scale testing", stacklevel=2)
    rows = 1 << r
    pairs = []
    for i in range(2 * r):
        bit = i + 1 if i < r else 2 * r - i
        flip = 1 << (r - bit)
        for s in range(rows):
            pairs.append((_wing(s, r, i), _wing(s, r, i + 1)))
            pairs.append((_wing(s, r, i), _wing(s ^ flip, r, i + 1)))
    return build_graph(pairs)


# ---------------------------------------------------------------------------
# circumcoronene / silicate

# Axial-coordinate neighbor directions of the triangular lattice of
# hexagon centers, in counterclockwise order (consecutive entries are 60
# degrees apart).
_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _hex_lattice(n: int):
    """Corner keys and corner-corner edges of the benzenoid H_n.

    Hexagon centers fill the axial-coordinate region
    ``max(|q|, |r|, |q+r|) <= n-1``. A corner is identified by the sum of
    the axial coordinates of its three surrounding cells (3x its position
    in the lattice basis), which is an exact integer key. Returned in a
    deterministic first-encounter order.
    """
    radius = n - 1
    centers = [(q, r)
               for q in range(-radius, radius + 1)
               for r in range(max(-radius, -q - radius),
                              min(radius, -q + radius) + 1)]
    corners: dict[tuple[int, int], None] = {}
    edge_seen = set()
    edges = []
    for q, r in centers:
        ring = []
        for i in range(6):
            d1 = _HEX_DIRS[i]
            d2 = _HEX_DIRS[(i + 1) % 6]
            key = (3 * q + d1[0] + d2[0], 3 * r + d1[1] + d2[1])
            ring.append(key)
            corners.setdefault(key)
        for i in range(6):
            a, b = ring[i], ring[(i + 1) % 6]
            canon = (a, b) if a <= b else (b, a)
            if canon not in edge_seen:
                edge_seen.add(canon)
                edges.append((a, b))
    return list(corners), edges


def circumcoronene(n: int) -> Graph:
    """Benzenoid H_n: a central hexagon wrapped in ``n-1`` hexagon rings.

    ``6n^2`` vertices, ``9n^2 - 3n`` edges, exactly ``6n`` boundary
    vertices of degree 2.
    """
    if n < 1:
        raise ValueError(f"circumcoronene requires n >= 1, got {n}")
    _, edges = _hex_lattice(n)
    return build_graph([(f"hn:({a},{b})", f"hn:({c},{d})")
                        for (a, b), (c, d) in edges])


def silicate(n: int) -> Graph:
    """Corner-sharing tetrahedra over H_n.

    Construction: subdivide every H_n edge (one ``sl:sub`` vertex per
    edge), then complete a K_4 around each original H_n vertex
    (``sl:hex``) on its subdivision neighbors, adding one ``sl:apex``
    vertex wherever a degree-2 boundary vertex has only two. Order
    ``15n^2 + 3n``, ``36n^2`` edges, one tetrahedron per H_n vertex.
    """
    if n < 1:
        raise ValueError(f"silicate requires n >= 1, got {n}")
    if n == 1:
        warnings.warn("silicate(1) is below the usual n >= 2 range; "
                      "accepted for small-scale testing", stacklevel=2)
    corners, hn_edges = _hex_lattice(n)
    hex_label = {key: f"sl:hex:({key[0]},{key[1]})" for key in corners}
    subs_of: dict[tuple[int, int], list[str]] = {key: [] for key in corners}
    pairs = []
    for a, b in hn_edges:
        sub = f"sl:sub:({a[0] + b[0]},{a[1] + b[1]})"
        pairs.append((hex_label[a], sub))
        pairs.append((sub, hex_label[b]))
        subs_of[a].append(sub)
        subs_of[b].append(sub)
    for key in corners:
        members = sorted(subs_of[key])
        pairs.extend(combinations(members, 2))
        if len(members) == 2:
            apex = f"sl:apex:({key[0]},{key[1]})"
            pairs.append((apex, hex_label[key]))
            pairs.extend((apex, sub) for sub in members)
    return build_graph(pairs)


_SL_RE = re.compile(r"^sl:(hex|sub|apex):\((-?\d+),(-?\d+)\)$")


def silicate_kind(label: str) -> str:
    """Role of a silicate vertex: ``hex``, ``sub``, or ``apex``."""
    m = _SL_RE.match(label)
    if m is None:
        raise ValueError(f"not a silicate label: {label!r}")
    return m.group(1)


def silicate_radius_sq(label: str) -> int:
    """Squared lattice radius of a silicate vertex, on a common scale.

    Corner and apex keys are 3x the lattice position, subdivision keys 6x
    (sum of two corner keys), so corners/apexes are rescaled by 2 before
    applying the triangular-lattice norm ``a^2 + ab + b^2``.
    """
    m = _SL_RE.match(label)
    if m is None:
        raise ValueError(f"not a silicate label: {label!r}")
    a, b = int(m.group(2)), int(m.group(3))
    if m.group(1) in ("hex", "apex"):
        a, b = 2 * a, 2 * b
    return a * a + a * b + b * b


# ---------------------------------------------------------------------------
# classical families

def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path requires n >= 1, got {n}")
    if n == 1:
        return Graph(("v0",), ())
    return build_graph([(f"v{i}", f"v{i + 1}") for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    pairs = [(f"v{i}", f"v{i + 1}") for i in range(n - 1)]
    pairs.append((f"v{n - 1}", "v0"))
    return build_graph(pairs)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete requires n >= 1, got {n}")
    if n == 1:
        return Graph(("v0",), ())
    return build_graph([(f"v{i}", f"v{j}")
                        for i, j in combinations(range(n), 2)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ValueError(f"complete_bipartite requires s, t >= 1, got {s}, {t}")
    return build_graph([(f"a{i}", f"b{j}")
                        for i in range(s) for j in range(t)])


def join_complete_empty(s: int, t: int) -> Graph:
    """Join of K_s with the edgeless graph on t vertices."""
    if s < 1 or t < 1:
        raise ValueError(f"join_complete_empty requires s, t >= 1, got {s}, {t}")
    pairs = [(f"k{i}", f"k{j}") for i, j in combinations(range(s), 2)]
    pairs.extend((f"k{i}", f"e{j}") for i in range(s) for j in range(t))
    return build_graph(pairs)


def join_complete_k1_kt(s: int, t: int) -> Graph:
    """Join of K_s with the disjoint union of K_1 and K_t."""
    if s < 1 or t < 1:
        raise ValueError(f"join_complete_k1_kt requires s, t >= 1, got {s}, {t}")
    pairs = [(f"k{i}", f"k{j}") for i, j in combinations(range(s), 2)]
    pairs.extend((f"k{i}", "x0") for i in range(s))
    pairs.extend((f"k{i}", f"t{j}") for i in range(s) for j in range(t))
    pairs.extend((f"t{i}", f"t{j}") for i, j in combinations(range(t), 2))
    return build_graph(pairs)


_CLASSICAL = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "join_complete_empty": (join_complete_empty, 2),
    "join_complete_k1_kt": (join_complete_k1_kt, 2),
}


def classical(family: str, *params: int) -> Graph:
    """Dispatch to a classical family by name."""
    try:
        func, arity = _CLASSICAL[family]
    except KeyError:
        raise ValueError(f"unknown classical family {family!r}") from None
    if len(params) != arity:
        raise ValueError(
            f"{family} takes {arity} parameter(s), got {len(params)}")
    return func(*params)


# ---------------------------------------------------------------------------
# random fixtures

def random_connected_graph(n: int, seed: int = 0,
                           extra_edge_prob: float = 0.25) -> Graph:
    """Seeded random connected graph: a random tree plus extra edges.

    Deterministic for a given ``(n, seed, extra_edge_prob)``; vertex
    identifiers always follow label order ``v0..v{n-1}``.
    """
    if n < 1:
        raise ValueError(f"random_connected_graph requires n >= 1, got {n}")
    if n == 1:
        return Graph(("v0",), ())
    rng = random.Random(seed)
    pairs = []
    tree = set()
    for i in range(1, n):
        p = rng.randrange(i)
        pairs.append((f"v{p}", f"v{i}"))
        tree.add((p, i))
    for i, j in combinations(range(n), 2):
        if (i, j) not in tree and rng.random() < extra_edge_prob:
            pairs.append((f"v{i}", f"v{j}"))
    return build_graph(pairs)
