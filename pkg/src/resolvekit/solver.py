"""Exact k-metric-dimension solver.

Two routes: a forcing + branch-and-bound search
(:func:`solve_k_metric_dimension`) and a subset-enumeration oracle
(:func:`solve_exhaustive_oracle`) used to validate it.

The search works on the pair-multicover formulation: a set S is
k-resolving iff every vertex pair {x, y} has at least k members of S in
its distinguisher set D(x, y). Any pair with |D| = k forces all of D
into S (twins are the |D| = 2, k = 2 case), after which a deterministic
branch-and-bound covers the remaining deficient pairs. Among
minimum-cardinality witnesses, the lexicographically least (by sorted
identifiers) is returned.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import DistanceMatrix, Graph
from .resolvability import DistinguisherTable, distinguisher_table

_ORACLE_MAX_N = 16


class InfeasibleKError(ValueError):
    """No k-resolving set exists: some pair has fewer than k distinguishers."""

    def __init__(self, k: int, pair: Optional[tuple[str, str]], size: int):
        self.k = k
        self.pair = pair
        self.size = size
        if pair is None:
            msg = f"k={k} is infeasible on a single vertex (no vertex pairs)"
        else:
            msg = (f"k={k} is infeasible: pair {pair[0]!r}, {pair[1]!r} has "
                   f"only {size} distinguishers")
        super().__init__(msg)


@dataclass(frozen=True)
class SolveResult:
    k: int
    value: int
    witness: tuple[int, ...]
    forced: tuple[int, ...]
    nodes_explored: int
    complete: bool

    def to_json_dict(self, g: Graph) -> dict:
        return {
            "schema": "1",
            "k": self.k,
            "value": self.value,
            "witness": [g.labels[v] for v in self.witness],
            "forced": [g.labels[v] for v in self.forced],
            "nodes_explored": self.nodes_explored,
            "complete": self.complete,
        }


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _bit_tuple(x: int) -> tuple[int, ...]:
    return tuple(_iter_bits(x))


def _single_vertex_result(k: int) -> SolveResult:
    if k >= 2:
        raise InfeasibleKError(k, None, 0)
    warnings.warn("single-vertex graph: the empty set vacuously resolves it; "
                  "value defined as 0", stacklevel=3)
    return SolveResult(k, 0, (), (), 0, True)


def _prepare(g: Graph, dm: DistanceMatrix, k: int) -> DistinguisherTable:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    table = distinguisher_table(g, dm)
    for x, y, bits in table.iter_pairs():
        size = bits.bit_count()
        if size < k:
            raise InfeasibleKError(k, (g.labels[x], g.labels[y]), size)
    return table


class _Budget:
    __slots__ = ("limit", "nodes", "exhausted")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            self.exhausted = True
        return self.exhausted


def solve_k_metric_dimension(g: Graph, dm: DistanceMatrix, k: int,
                             budget: Optional[int] = None) -> SolveResult:
    """Minimum cardinality of a k-resolving set, with witness.

    Contract: (1) every pair with |D(x, y)| = k forces all of D(x, y); a
    single pass is the fixpoint since forcing never changes any |D|.
    (2) branch-and-bound over the remaining useful vertices, branching on
    the vertex covering the most deficient pairs (ties by identifier),
    with lower bound = current size + a greedy disjoint-cover packing
    bound. (3) a second lexicographic pass extracts the least witness
    among minimum ones. ``budget`` caps total search nodes; on exhaustion
    the best known upper bound is returned flagged incomplete.
    """
    n = g.n
    if n == 1:
        return _single_vertex_result(k)
    table = _prepare(g, dm, k)
    pair_xy = []
    D = []
    for x, y, bits in table.iter_pairs():
        pair_xy.append((x, y))
        D.append(bits)

    forced = 0
    for bits in D:
        if bits.bit_count() == k:
            forced |= bits
    deficient = [i for i, bits in enumerate(D)
                 if (bits & forced).bit_count() < k]

    if not deficient:
        w = _bit_tuple(forced)
        return SolveResult(k, len(w), w, w, 0, True)

    # Per deficient pair: remaining need and the candidate vertices able
    # to cover it. Vertices covering no deficient pair never occur in a
    # minimum witness (dropping one keeps every pair covered), so they
    # are excluded from the search universe.
    defc0 = []
    cover_pos = []
    for i in deficient:
        defc0.append(k - (D[i] & forced).bit_count())
        cover_pos.append(D[i] & ~forced)
    npos = len(deficient)
    all_cand = 0
    for c in cover_pos:
        all_cand |= c
    vmask = {}
    for v in _iter_bits(all_cand):
        mask = 0
        vb = 1 << v
        for pos in range(npos):
            if cover_pos[pos] & vb:
                mask |= 1 << pos
        vmask[v] = mask

    forced_count = forced.bit_count()
    budget_state = _Budget(budget)

    def packing_bound(uncov: int, avail: int, defc: list[int]) -> Optional[int]:
        # Admissible lower bound on extra vertices: greedily pick
        # uncovered pairs whose available covers are pairwise disjoint;
        # each picked pair needs its full residual deficiency from its
        # own cover. Returns None when some pair cannot reach k at all.
        entries = []
        for pos in _iter_bits(uncov):
            c = cover_pos[pos] & avail
            pc = c.bit_count()
            if pc < defc[pos]:
                return None
            entries.append((pc, pos, c))
        entries.sort()
        used = 0
        bound = 0
        for _, pos, c in entries:
            if c & used:
                continue
            used |= c
            bound += defc[pos]
        return bound

    # Phase 1: exact minimum. The full vertex set is k-resolving
    # (feasibility was checked), so it seeds the incumbent.
    best_size = n
    best_bits = (1 << n) - 1

    def search(s_bits: int, size: int, defc: list[int], uncov: int,
               avail: int) -> None:
        nonlocal best_size, best_bits
        if budget_state.tick():
            return
        if not uncov:
            if size < best_size:
                best_size = size
                best_bits = s_bits
            return
        pb = packing_bound(uncov, avail, defc)
        if pb is None or size + pb >= best_size:
            return
        pick = -1
        pick_cov = -1
        for v in _iter_bits(avail):
            cov = (vmask[v] & uncov).bit_count()
            if cov > pick_cov:
                pick_cov = cov
                pick = v
        if pick_cov <= 0:
            return
        vb = 1 << pick
        hit = vmask[pick] & uncov
        defc2 = list(defc)
        uncov2 = uncov
        for pos in _iter_bits(hit):
            defc2[pos] -= 1
            if defc2[pos] == 0:
                uncov2 ^= 1 << pos
        search(s_bits | vb, size + 1, defc2, uncov2, avail & ~vb)
        if budget_state.exhausted:
            return
        search(s_bits, size, defc, uncov, avail & ~vb)

    search(forced, forced_count, defc0, (1 << npos) - 1, all_cand)

    forced_ids = _bit_tuple(forced)
    if budget_state.exhausted:
        return SolveResult(k, best_size, _bit_tuple(best_bits), forced_ids,
                           budget_state.nodes, False)

    value = best_size

    # Phase 2: lexicographically least witness of the proven minimum
    # size. Candidates are scanned in ascending identifier order with the
    # include branch first, which enumerates witnesses (forced set plus
    # chosen candidates) in lexicographic order of their sorted tuples;
    # the first completed one wins.
    cand_ids = sorted(vmask)
    suffix_bits = [0] * (len(cand_ids) + 1)
    for i in range(len(cand_ids) - 1, -1, -1):
        suffix_bits[i] = suffix_bits[i + 1] | (1 << cand_ids[i])

    found: list[int] = []

    def lex_search(idx: int, s_bits: int, size: int, defc: list[int],
                   uncov: int) -> bool:
        if budget_state.tick():
            return True
        if size == value:
            if not uncov:
                found.append(s_bits)
                return True
            return False
        avail = suffix_bits[idx]
        if size + avail.bit_count() < value:
            return False
        pb = packing_bound(uncov, avail, defc)
        if pb is None or size + pb > value:
            return False
        v = cand_ids[idx]
        vb = 1 << v
        hit = vmask[v] & uncov
        defc2 = list(defc)
        uncov2 = uncov
        for pos in _iter_bits(hit):
            defc2[pos] -= 1
            if defc2[pos] == 0:
                uncov2 ^= 1 << pos
        if lex_search(idx + 1, s_bits | vb, size + 1, defc2, uncov2):
            return True
        return lex_search(idx + 1, s_bits, size, defc, uncov)

    lex_search(0, forced, forced_count, defc0, (1 << npos) - 1)
    if budget_state.exhausted or not found:
        return SolveResult(k, best_size, _bit_tuple(best_bits), forced_ids,
                           budget_state.nodes, False)
    return SolveResult(k, value, _bit_tuple(found[0]), forced_ids,
                       budget_state.nodes, True)


def solve_exhaustive_oracle(g: Graph, dm: DistanceMatrix, k: int) -> SolveResult:
    """Independent oracle: enumerate subsets by increasing cardinality
    (lexicographic within each size) and return the first k-resolving
    one. Limited to n <= 16."""
    n = g.n
    if n > _ORACLE_MAX_N:
        raise ValueError(f"exhaustive oracle is limited to n <= {_ORACLE_MAX_N}, "
                         f"got n={n}")
    if n == 1:
        return _single_vertex_result(k)
    table = _prepare(g, dm, k)
    D = [bits for _, _, bits in table.iter_pairs()]
    tested = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            tested += 1
            s_bits = 0
            for v in combo:
                s_bits |= 1 << v
            if all((bits & s_bits).bit_count() >= k for bits in D):
                return SolveResult(k, size, combo, (), tested, True)
    raise AssertionError("feasibility was checked; the full set resolves")
