"""Hypergraph primitives: colex indexing, links, shadow, connectivity."""

import random
from itertools import combinations
from math import comb

import pytest

from rcover.core import (
    Color,
    Coloring,
    Hypergraph3,
    PseudoPath,
    canon_triple,
    colex_index,
    colex_inverse,
    connected_components,
    connecting_path,
    tight_adjacent,
)
from rcover.errors import InvalidPairError, NotAnEdgeError

from conftest import random_hypergraph


# -- colex -------------------------------------------------------------------


def test_colex_smallest_triple():
    assert colex_index((0, 1, 2)) == 0


def test_colex_enumeration_position():
    # position of {1,2,3} read off an explicit colex enumeration for n=4
    order = sorted(combinations(range(4), 3), key=colex_index)
    assert order.index((1, 2, 3)) == 3
    assert colex_index((1, 2, 3)) == 3


def test_colex_roundtrip_n10():
    for t in combinations(range(10), 3):
        assert colex_inverse(colex_index(t)) == t


def test_colex_bijection_n50():
    indices = {colex_index(t) for t in combinations(range(50), 3)}
    assert indices == set(range(comb(50, 3)))


def test_colex_orders_match_iteration():
    # combinations(range(n), 3) in lexicographic order is NOT colex order
    idx = [colex_index(t) for t in sorted(combinations(range(5), 3), key=colex_index)]
    assert idx == list(range(comb(5, 3)))


def test_canon_triple():
    assert canon_triple(5, 2, 9) == (2, 5, 9)
    with pytest.raises(ValueError):
        canon_triple(1, 1, 2)


# -- shadow / link / active pairs ---------------------------------------------


def test_shadow_single_edge():
    h = Hypergraph3(3, [(0, 1, 2)])
    assert h.shadow() == {(0, 1), (0, 2), (1, 2)}


def test_shadow_empty():
    assert Hypergraph3(4, []).shadow() == set()


def test_shadow_complete_k5():
    assert len(Hypergraph3.complete(5).shadow()) == 10


def test_link_examples():
    h = Hypergraph3(4, [(0, 1, 2), (0, 1, 3)])
    assert h.link(0, 1) == {2, 3}
    assert h.link(2, 3) == set()
    k6 = Hypergraph3.complete(6)
    assert k6.link(1, 4) == {0, 2, 3, 5}


def test_link_same_vertex_error():
    h = Hypergraph3.complete(4)
    with pytest.raises(InvalidPairError):
        h.link(2, 2)


def test_active_pairs_equals_shadow_random(rng):
    for _ in range(100):
        h = random_hypergraph(12, rng.random(), rng)
        assert h.active_pairs() == h.shadow()


def test_link_shadow_symmetry_random(rng):
    # y in N(x)  <=>  x in N(y)  <=>  N(x,y) nonempty
    for _ in range(30):
        h = random_hypergraph(rng.randint(4, 15), 0.3, rng)
        for x in range(h.n):
            for y in range(x + 1, h.n):
                in_shadow = (x, y) in h.shadow()
                assert bool(h.link(x, y)) == in_shadow
                assert bool(h.neighbor_mask(x) >> y & 1) == in_shadow
                assert bool(h.neighbor_mask(y) >> x & 1) == in_shadow


# -- storage representations ---------------------------------------------------


def test_dense_and_sparse_storage_agree(rng):
    n = 8
    all_triples = list(combinations(range(n), 3))
    dense_edges = all_triples[: int(0.8 * len(all_triples))]
    sparse_edges = all_triples[: int(0.1 * len(all_triples))]
    dense = Hypergraph3(n, dense_edges)
    sparse = Hypergraph3(n, sparse_edges)
    assert dense.dense_storage and not sparse.dense_storage
    for h, edges in ((dense, dense_edges), (sparse, sparse_edges)):
        edge_set = set(edges)
        for t in all_triples:
            assert h.has_edge(t) == (t in edge_set)
        assert list(h.edges) == sorted(edges, key=colex_index)


def test_vertex_subset_validation():
    with pytest.raises(ValueError):
        Hypergraph3(4, [(0, 1, 2)], vertices=[0, 1])
    h = Hypergraph3(5, [(0, 1, 2)], vertices=[0, 1, 2, 4])
    assert h.t == 4
    assert h.induced([0, 1, 2]).edge_count == 1
    assert h.induced([0, 1, 4]).edge_count == 0


# -- tight adjacency -----------------------------------------------------------


def test_tight_adjacent_examples():
    assert tight_adjacent((0, 1, 2), (1, 2, 3))
    assert not tight_adjacent((0, 1, 2), (0, 1, 2))
    assert not tight_adjacent((0, 1, 2), (2, 3, 4))


# -- connected components --------------------------------------------------------


def _closure_components(h):
    """Independent oracle: reflexive-transitive closure of tight adjacency
    computed on the full boolean adjacency matrix."""
    edges = list(h.edges)
    m = len(edges)
    adj = [[i == j for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if tight_adjacent(edges[i], edges[j]):
                adj[i][j] = adj[j][i] = True
    changed = True
    while changed:
        changed = False
        for i in range(m):
            for j in range(m):
                if adj[i][j]:
                    for k in range(m):
                        if adj[j][k] and not adj[i][k]:
                            adj[i][k] = True
                            changed = True
    comps = []
    seen = set()
    for i in range(m):
        if i in seen:
            continue
        group = frozenset(edges[j] for j in range(m) if adj[i][j])
        seen.update(j for j in range(m) if adj[i][j])
        comps.append(group)
    return set(comps)


def test_components_complete_k5():
    comps = connected_components(Hypergraph3.complete(5))
    assert len(comps) == 1
    assert len(comps[0]) == 10


def test_components_two_singletons():
    comps = connected_components(Hypergraph3(6, [(0, 1, 2), (3, 4, 5)]))
    assert sorted(len(c) for c in comps) == [1, 1]


def test_components_sizes_two_one():
    comps = connected_components(Hypergraph3(8, [(0, 1, 2), (1, 2, 3), (5, 6, 7)]))
    assert sorted(len(c) for c in comps) == [1, 2]


def test_components_partition_property(rng):
    for _ in range(25):
        h = random_hypergraph(8, 0.25, rng)
        comps = connected_components(h)
        flat = [e for c in comps for e in c]
        assert sorted(flat) == sorted(h.edges)  # disjoint cover of the edge set
        assert {frozenset(c) for c in comps} == _closure_components(h)


# -- connecting paths --------------------------------------------------------------


def test_connecting_path_same_edge():
    h = Hypergraph3.complete(5)
    p = connecting_path(h, (0, 1, 2), (0, 1, 2))
    assert p.edges == ((0, 1, 2),)
    assert p.length == 1


def test_connecting_path_adjacent():
    h = Hypergraph3(4, [(0, 1, 2), (1, 2, 3)])
    p = connecting_path(h, (0, 1, 2), (1, 2, 3))
    assert p.edges == ((0, 1, 2), (1, 2, 3))


def test_connecting_path_disconnected():
    h = Hypergraph3(6, [(0, 1, 2), (3, 4, 5)])
    assert connecting_path(h, (0, 1, 2), (3, 4, 5)) is None


def test_connecting_path_not_an_edge():
    h = Hypergraph3.complete(4)
    with pytest.raises(NotAnEdgeError):
        connecting_path(h, (0, 1, 2), (4, 5, 6))


def _bfs_distance(h, e, f):
    """Independent layered distance over tight adjacency."""
    if e == f:
        return 1
    edges = list(h.edges)
    frontier = {e}
    seen = {e}
    dist = 1
    while frontier:
        dist += 1
        nxt = set()
        for g in frontier:
            for other in edges:
                if other not in seen and tight_adjacent(g, other):
                    if other == f:
                        return dist
                    nxt.add(other)
                    seen.add(other)
        frontier = nxt
    return None


def test_connecting_path_shortest_and_valid(rng):
    for _ in range(20):
        h = random_hypergraph(7, 0.35, rng)
        edges = list(h.edges)
        if len(edges) < 2:
            continue
        e, f = rng.sample(edges, 2)
        p = connecting_path(h, e, f)
        expected = _bfs_distance(h, e, f)
        if p is None:
            assert expected is None
        else:
            assert p.is_valid()
            assert p.edges[0] == e and p.edges[-1] == f
            assert p.length == expected


def test_pseudo_path_validity():
    assert PseudoPath(((0, 1, 2), (1, 2, 3))).is_valid()
    assert not PseudoPath(((0, 1, 2), (2, 3, 4))).is_valid()
    assert not PseudoPath(()).is_valid()


# -- colorings ----------------------------------------------------------------------


def test_coloring_partition():
    h = Hypergraph3.complete(5)
    red = [t for i, t in enumerate(h.edges) if i % 2 == 0]
    col = Coloring(h, red)
    assert col.red | col.blue == set(h.edges)
    assert not col.red & col.blue
    for t in h.edges:
        assert col.color_of(t) is (Color.RED if t in col.red else Color.BLUE)
    assert col.subhypergraph(Color.RED).edge_count == len(red)


def test_coloring_rejects_foreign_edges():
    h = Hypergraph3(4, [(0, 1, 2)])
    with pytest.raises(ValueError):
        Coloring(h, [(0, 1, 3)])
