from collections import Counter

import pytest

import resolvekit as rk
from resolvekit import level_of_label, silicate_kind, silicate_radius_sq

from tests import oracles


@pytest.mark.parametrize("r", range(2, 8))
def test_butterfly_order_and_size(r):
    g = rk.butterfly(r)
    assert g.n == 2 ** r * (r + 1)
    assert g.m == r * 2 ** (r + 1)


@pytest.mark.parametrize("r", [3, 4])
def test_butterfly_degree_sequence(r):
    g = rk.butterfly(r)
    for v in range(g.n):
        level = level_of_label(g.labels[v])
        assert g.degree(v) == (2 if level in (0, r) else 4)


def test_butterfly_adjacency_convention(bf3):
    v = bf3.vertex("[000,0]")
    assert sorted(bf3.labels[u] for u in bf3.neighbors(v)) == ["[000,1]", "[100,1]"]
    # crossing between levels 2 and 3 toggles the least significant bit
    w = bf3.vertex("[000,2]")
    assert sorted(bf3.labels[u] for u in bf3.neighbors(w)) == [
        "[000,1]", "[000,3]", "[001,3]", "[010,1]"]


def test_butterfly_rejects_small_r():
    with pytest.raises(ValueError):
        rk.butterfly(1)


def test_butterfly_r2_warns():
    with pytest.warns(UserWarning, match="below the usual"):
        rk.butterfly(2)


@pytest.mark.parametrize("r", range(2, 7))
def test_benes_order_and_size(r):
    g = rk.benes(r)
    assert g.n == 2 ** r * (2 * r + 1)
    assert g.m == r * 2 ** (r + 2)


@pytest.mark.parametrize("r", [3, 4])
def test_benes_level_reflection_is_automorphism(r):
    g = rk.benes(r)
    image = {}
    for v, lab in enumerate(g.labels):
        row, level = lab[1:-1].split(",")
        image[v] = g.vertex(f"[{row},{2 * r - int(level)}]")
    assert all(g.has_edge(image[u], image[v]) for u, v in g.edge_list)


def test_benes_rejects_small_r():
    with pytest.raises(ValueError):
        rk.benes(1)


@pytest.mark.parametrize("n", range(1, 5))
def test_circumcoronene_counts(n):
    g = rk.circumcoronene(n)
    assert g.n == 6 * n * n
    assert g.m == 9 * n * n - 3 * n
    degrees = Counter(g.degree(v) for v in range(g.n))
    assert degrees[2] == 6 * n
    assert degrees[3] == g.n - 6 * n
    assert set(degrees) <= {2, 3}


def test_circumcoronene_n1_is_hexagon():
    g = rk.circumcoronene(1)
    assert g.n == 6 and g.m == 6
    assert all(g.degree(v) == 2 for v in range(6))


def test_circumcoronene_rejects_zero():
    with pytest.raises(ValueError):
        rk.circumcoronene(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_silicate_counts(n):
    g = rk.silicate(n)
    assert g.n == 15 * n * n + 3 * n
    assert g.m == 36 * n * n
    kinds = Counter(silicate_kind(lab) for lab in g.labels)
    assert kinds == {"hex": 6 * n * n, "sub": 9 * n * n - 3 * n, "apex": 6 * n}


@pytest.mark.parametrize("n", [1, 2])
def test_silicate_maximal_cliques_are_tetrahedra(n):
    g = rk.silicate(n)
    cliques = oracles.maximal_cliques(g)
    assert len(cliques) == 6 * n * n
    assert all(len(c) == 4 for c in cliques)
    # each original H_n vertex sits in exactly one tetrahedron
    hex_ids = [v for v in range(g.n) if silicate_kind(g.labels[v]) == "hex"]
    membership = Counter(v for c in cliques for v in c if v in set(hex_ids))
    assert all(membership[v] == 1 for v in hex_ids)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_silicate_apexes(n):
    g = rk.silicate(n)
    apexes = [v for v in range(g.n) if silicate_kind(g.labels[v]) == "apex"]
    assert len(apexes) == 6 * n
    assert all(g.degree(v) == 3 for v in apexes)


def test_silicate_radius_apex_ties_partner():
    g = rk.silicate(2)
    apex = next(lab for lab in g.labels if silicate_kind(lab) == "apex")
    partner = apex.replace("apex", "hex")
    assert silicate_radius_sq(apex) == silicate_radius_sq(partner)
    assert apex < partner  # label tie-break picks the apex


def test_silicate_label_helpers_reject_garbage():
    with pytest.raises(ValueError):
        silicate_kind("hn:(1,1)")
    with pytest.raises(ValueError):
        silicate_radius_sq("nonsense")
    with pytest.raises(ValueError):
        level_of_label("sl:hex:(1,1)")


@pytest.mark.parametrize("maker, args", [
    (rk.butterfly, (3,)), (rk.benes, (3,)), (rk.circumcoronene, (2,)),
    (rk.silicate, (2,)), (rk.path, (5,)), (rk.cycle, (6,)),
    (rk.complete, (5,)), (rk.complete_bipartite, (2, 3)),
    (rk.join_complete_empty, (2, 3)), (rk.join_complete_k1_kt, (2, 2)),
])
def test_generator_outputs_are_connected(maker, args):
    assert rk.is_connected(maker(*args))


def test_classical_complete():
    g = rk.complete(5)
    assert g.n == 5 and g.m == 10


def test_classical_complete_bipartite_degrees():
    g = rk.complete_bipartite(2, 3)
    assert g.n == 5 and g.m == 6
    assert sorted(g.degree(v) for v in range(g.n)) == [2, 2, 2, 3, 3]


def test_classical_join_complete_empty_star():
    g = rk.join_complete_empty(1, 2)
    assert g.n == 3 and g.m == 2
    assert sorted(g.degree(v) for v in range(3)) == [1, 1, 2]


def test_classical_join_k1_kt():
    g = rk.join_complete_k1_kt(2, 2)
    # K_2 joined with (K_1 u K_2): 5 vertices, 1 + 2*3 + 1 = 8 edges
    assert g.n == 5 and g.m == 8


def test_classical_dispatcher():
    assert rk.classical("cycle", 5).n == 5
    with pytest.raises(ValueError, match="unknown classical family"):
        rk.classical("mystery", 3)
    with pytest.raises(ValueError, match="parameter"):
        rk.classical("path", 1, 2)
    with pytest.raises(ValueError):
        rk.classical("cycle", 2)


def test_random_connected_graph_deterministic():
    a = rk.random_connected_graph(9, seed=42)
    b = rk.random_connected_graph(9, seed=42)
    assert a == b
    assert rk.is_connected(a)
    assert a.labels == tuple(f"v{i}" for i in range(9))


def test_single_vertex_families():
    assert rk.path(1).n == 1
    assert rk.complete(1).n == 1
    assert rk.random_connected_graph(1).n == 1
