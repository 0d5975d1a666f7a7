from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import resolvekit as rk
from resolvekit import all_pairs_distances, level_of_label

from tests import oracles


@st.composite
def connected_graphs(draw, min_n=3, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = []
    tree = set()
    for i in range(1, n):
        p = draw(st.integers(0, i - 1))
        pairs.append((f"v{p}", f"v{i}"))
        tree.add((p, i))
    candidates = [e for e in combinations(range(n), 2) if e not in tree]
    extra = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=10)
                 if candidates else st.just([]))
    pairs.extend((f"v{i}", f"v{j}") for i, j in extra)
    return rk.build_graph(pairs)


# ---------------------------------------------------------------------------
# twins

def test_complete_graph_single_true_class():
    part = rk.twin_partition(rk.complete(5))
    assert len(part.classes) == 1
    assert part.classes[0].kind == "true"
    assert len(part.classes[0].members) == 5


def test_bf3_twin_classes_exact(bf3):
    part = rk.twin_partition(bf3)
    found = {frozenset(bf3.labels[v] for v in c.members): c.kind
             for c in part.nontrivial()}
    expected = {}
    for s in range(4):  # rows s and s+4 differ in the top bit
        row, other = format(s, "03b"), format(s + 4, "03b")
        expected[frozenset({f"[{row},0]", f"[{other},0]"})] = "false"
    for i in range(1, 5):  # last level: rows 2i-2 and 2i-1 differ in the last bit
        a, b = format(2 * i - 2, "03b"), format(2 * i - 1, "03b")
        expected[frozenset({f"[{a},3]", f"[{b},3]"})] = "false"
    assert found == expected
    assert len(part.twin_vertices()) == 16


def test_benes_twins_are_outer_and_middle_levels():
    g = rk.benes(3)
    twins = rk.twin_vertices(g)
    assert len(twins) == 24
    assert {level_of_label(g.labels[v]) for v in twins} == {0, 3, 6}
    # and nothing else: every level 0/3/6 vertex is in the set
    assert twins == {v for v in range(g.n)
                     if level_of_label(g.labels[v]) in (0, 3, 6)}


def test_silicate_twins_are_boundary_apex_pairs():
    g = rk.silicate(2)
    part = rk.twin_partition(g)
    nontrivial = part.nontrivial()
    assert len(nontrivial) == 12
    assert all(len(c.members) == 2 and c.kind == "true" for c in nontrivial)
    assert len(part.twin_vertices()) == 24
    for c in nontrivial:
        kinds = sorted(rk.silicate_kind(g.labels[v]) for v in c.members)
        assert kinds == ["apex", "hex"]


def test_path_has_no_twins():
    assert rk.twin_vertices(rk.path(4)) == frozenset()


def test_k23_all_twins():
    g = rk.complete_bipartite(2, 3)
    assert rk.twin_vertices(g) == frozenset(range(5))
    assert rk.all_vertices_twins(g)


def test_all_vertices_twins_examples(bf3):
    assert rk.all_vertices_twins(rk.join_complete_empty(2, 3))
    assert rk.all_vertices_twins(rk.cycle(4))
    assert not rk.all_vertices_twins(bf3)
    # the hub of a star has no twin
    assert not rk.all_vertices_twins(rk.join_complete_empty(1, 2))


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_twin_partition_matches_naive(g):
    part = rk.twin_partition(g)
    assert part.twin_vertices() == oracles.naive_twin_vertex_set(g)
    members = sorted(v for c in part.classes for v in c.members)
    assert members == list(range(g.n))  # a partition


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_twin_class_structure(g):
    part = rk.twin_partition(g)
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    for c in part.nontrivial():
        inside = [(u, v) for u, v in combinations(c.members, 2)]
        if c.kind == "true":
            assert all(v in nbrs[u] for u, v in inside)
        else:
            assert all(v not in nbrs[u] for u, v in inside)
    # between two classes: all edges or none
    for a, b in combinations(part.nontrivial(), 2):
        crossings = {v in nbrs[u] for u in a.members for v in b.members}
        assert len(crossings) == 1


# ---------------------------------------------------------------------------
# distinguisher table

def test_twin_pair_distinguishers():
    g = rk.complete_bipartite(2, 3)
    dm = all_pairs_distances(g)
    table = rk.distinguisher_table(g, dm)
    for c in rk.twin_partition(g).nontrivial():
        for u, v in combinations(c.members, 2):
            assert table.vertices(u, v) == (u, v)


def test_p3_outer_pair():
    g = rk.path(3)
    dm = all_pairs_distances(g)
    table = rk.distinguisher_table(g, dm)
    assert table.vertices(0, 2) == (0, 2)


@pytest.mark.parametrize("n", range(2, 11))
def test_adjacent_pairs_on_paths_distinguished_by_all(n):
    g = rk.path(n)
    table = rk.distinguisher_table(g, all_pairs_distances(g))
    for u, v in g.edge_list:
        assert table.size(u, v) == n


@given(connected_graphs())
@settings(max_examples=50, deadline=None)
def test_table_matches_naive_and_contains_endpoints(g):
    dm = all_pairs_distances(g)
    table = rk.distinguisher_table(g, dm)
    d = dm.d
    for x, y, bits in table.iter_pairs():
        expected = oracles.naive_distinguishers(d, x, y)
        assert set(table.vertices(x, y)) == expected
        assert bits.bit_count() == len(expected)
        assert {x, y} <= expected


@given(connected_graphs())
@settings(max_examples=50, deadline=None)
def test_size_two_iff_twins(g):
    table = rk.distinguisher_table(g, all_pairs_distances(g))
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    for x, y, bits in table.iter_pairs():
        twins = nbrs[x] == nbrs[y] or nbrs[x] | {x} == nbrs[y] | {y}
        assert (bits.bit_count() == 2) == twins


# ---------------------------------------------------------------------------
# k-resolving verification

def test_k3_full_set_is_2_resolving():
    g = rk.complete(3)
    dm = all_pairs_distances(g)
    assert rk.is_k_resolving(g, dm, range(3), 2)


def levels_set(g, levels):
    return [v for v in range(g.n) if level_of_label(g.labels[v]) in levels]


def test_bf3_outer_levels_fault_tolerant(bf3, bf3_dm):
    outer = levels_set(bf3, {0, 3})
    assert len(outer) == 16
    assert rk.is_k_resolving(bf3, bf3_dm, outer, 2)


def test_bf3_outer_levels_minus_one_fails(bf3, bf3_dm):
    outer = levels_set(bf3, {0, 3})
    check = rk.check_k_resolving(bf3, bf3_dm, outer[1:], 2)
    assert not check.ok
    x, y = check.violating_pair
    # the verifier's pair is confirmed deficient by an independent scan,
    # and it is a twin pair (the removed vertex broke its coverage)
    ok, naive_pair = oracles.naive_check(bf3_dm.d, outer[1:], 2)
    assert not ok and naive_pair == (x, y)
    assert {x, y} <= rk.twin_vertices(bf3)


def test_check_rejects_bad_members(bf3, bf3_dm):
    with pytest.raises(ValueError, match="out of range"):
        rk.check_k_resolving(bf3, bf3_dm, [0, 99], 2)
    with pytest.raises(ValueError, match="k must be >= 1"):
        rk.check_k_resolving(bf3, bf3_dm, [0], 0)


@given(connected_graphs(), st.sets(st.integers(0, 8), max_size=9),
       st.integers(1, 3))
@settings(max_examples=80, deadline=None)
def test_verifier_matches_naive(g, raw_members, k):
    members = {v for v in raw_members if v < g.n}
    dm = all_pairs_distances(g)
    check = rk.check_k_resolving(g, dm, members, k)
    ok, pair = oracles.naive_check(dm.d, members, k)
    assert check.ok == ok
    assert check.violating_pair == pair


@given(connected_graphs(), st.sets(st.integers(0, 8), max_size=9))
@settings(max_examples=80, deadline=None)
def test_removal_form_equivalence(g, raw_members):
    members = {v for v in raw_members if v < g.n}
    dm = all_pairs_distances(g)
    assert (rk.is_k_resolving(g, dm, members, 2)
            == rk.is_fault_tolerant_by_removal(g, dm, members))


@given(connected_graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_monotonicity(g, data):
    dm = all_pairs_distances(g)
    sup = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub = data.draw(st.sets(st.sampled_from(sorted(sup))))
    for k in (1, 2):
        if rk.is_k_resolving(g, dm, sub, k):
            assert rk.is_k_resolving(g, dm, sup, k)


# ---------------------------------------------------------------------------
# kappa

def test_kappa_twin_pair_graph_is_two():
    g = rk.complete_bipartite(2, 3)
    assert rk.kappa(g, all_pairs_distances(g)) == 2


def test_kappa_p3():
    g = rk.path(3)
    assert rk.kappa(g, all_pairs_distances(g)) == 2


def test_kappa_c5_is_four():
    # every pair of C_5 has exactly one equidistant vertex, so min |D| = 4
    g = rk.cycle(5)
    dm = all_pairs_distances(g)
    assert oracles.naive_kappa(dm.d) == 4
    assert rk.kappa(g, dm) == 4


def test_kappa_rejects_single_vertex():
    g = rk.path(1)
    with pytest.raises(ValueError):
        rk.kappa(g, all_pairs_distances(g))


@given(connected_graphs())
@settings(max_examples=50, deadline=None)
def test_kappa_matches_naive(g):
    dm = all_pairs_distances(g)
    assert rk.kappa(g, dm) == oracles.naive_kappa(dm.d)
    size, x, y = rk.min_distinguisher_pair(g, dm)
    assert size == rk.kappa(g, dm)
    assert len(oracles.naive_distinguishers(dm.d, x, y)) == size
