from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import has_perfect_matching, nx_planar, perm_code, two_cuts
from planarlab.canon import canonical_code, graph_classes, is_isomorphic, order_preserving_induced_copies
from planarlab.connectivity import components_of, decompose, minimal_two_cut
from planarlab.graphs import (LabeledGraph, PlanarMultigraph, complete_graph, cycle_graph,
                              disjoint_union, empty_graph, from_graph6, multigraph_from_json,
                              multigraph_to_json, octahedron, pairs_in_order, path_graph, petersen,
                              star_graph, to_graph6)
from planarlab.matching import perfect_matching
from planarlab.planar_table import planar_table
from planarlab.planarity import NonPlanarWitness, RotationEmbedding, embed, faces


@st.composite
def multigraphs(draw, max_n=7, max_m=14):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = [(draw(st.integers(1, n)), draw(st.integers(1, n))) for _ in range(m)]
    return PlanarMultigraph.from_edges(n, edges)


@st.composite
def simple_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return LabeledGraph.from_mask(n, mask)


# ---------------------------------------------------------------- types and codecs


def test_labeled_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 4)])


def test_multigraph_degree_counts_loop_twice():
    g = PlanarMultigraph.from_edges(2, [(1, 1), (1, 2), (1, 2)])
    assert g.degrees == (4, 2)
    assert not g.is_simple()


@given(simple_graphs(max_n=9))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_graph6(to_graph6(g, header=True)) == g


def test_graph6_known_strings():
    # reference strings from the standard format description
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(empty_graph(1)) == "@"
    assert from_graph6("Bw") == complete_graph(3)


@given(multigraphs())
def test_json_round_trip(g):
    assert multigraph_from_json(multigraph_to_json(g)) == g


# ---------------------------------------------------------------- planarity


def test_embed_examples():
    k4 = embed(complete_graph(4))
    assert isinstance(k4, RotationEmbedding) and k4.face_count() == 4
    assert sorted(len(f) for f in faces(k4)) == [3, 3, 3, 3]
    k5 = embed(complete_graph(5))
    assert isinstance(k5, NonPlanarWitness) and k5.kind == "K5"
    c6 = PlanarMultigraph.from_edges(6, list(cycle_graph(6).edges) + [(1, 2)])
    e = embed(c6)
    assert isinstance(e, RotationEmbedding) and e.face_count() == 3


def test_faces_examples():
    tri = embed(complete_graph(3))
    assert sorted(len(f) for f in faces(tri)) == [3, 3]
    tree = embed(star_graph(3))
    assert [len(f) for f in faces(tree)] == [6]


def test_petersen_witness_is_k33():
    w = embed(petersen())
    assert isinstance(w, NonPlanarWitness) and w.kind == "K33"
    assert not nx_planar(10, w.edges)


@settings(max_examples=300, deadline=None)
@given(multigraphs())
def test_embed_agrees_with_networkx(g):
    e = embed(g)
    assert isinstance(e, RotationEmbedding) == nx_planar(g.n, g.edges)
    if isinstance(e, RotationEmbedding):
        assert e.euler_ok()
        walks = faces(e)
        darts = [d for w in walks for d in w]
        assert sorted(darts) == list(range(2 * g.m))
        assert sum(len(w) for w in walks) == 2 * g.m
    else:
        assert not nx_planar(g.n, e.edges)
        assert set(e.edges) <= set(g.support().edges)


def test_planar_table_matches_networkx_n6():
    tab = planar_table(6)
    rng = random.Random(5)
    pairs = pairs_in_order(6)
    for mask in rng.sample(range(len(tab)), 1500):
        es = [p for k, p in enumerate(pairs) if mask >> k & 1]
        assert bool(tab[mask]) == nx_planar(6, es)


def test_planar_counts_frozen():
    # labeled planar graph counts; n <= 4 all graphs, n = 5 only K5 fails
    assert [int(planar_table(n).sum()) for n in range(1, 8)] == \
        [1, 2, 8, 64, 1023, 32071, 1823707]


# ---------------------------------------------------------------- connectivity


def test_decompose_examples():
    r = decompose(path_graph(3).to_multigraph())
    assert r.cut_edge_pairs(path_graph(3).to_multigraph()) == {(1, 2), (2, 3)}
    assert r.cut_vertices == {2}
    two = disjoint_union(complete_graph(3), complete_graph(3)).to_multigraph()
    r = decompose(two)
    assert len(r.components) == 2 and not r.cut_edges and not r.cut_vertices
    bow = PlanarMultigraph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    r = decompose(bow)
    assert r.cut_vertices == {3} and r.blocks == ((1, 2, 3), (3, 4, 5))


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=7, max_m=10))
def test_decompose_invariants(g):
    r = decompose(g)
    base = len(components_of(list(range(1, g.n + 1)), g.edges))
    for i in r.cut_edges:
        rest = [e for k, e in enumerate(g.edges) if k != i]
        assert len(components_of(list(range(1, g.n + 1)), rest)) == base + 1
    for a in range(len(r.blocks)):
        for b in range(a + 1, len(r.blocks)):
            shared = set(r.blocks[a]) & set(r.blocks[b])
            assert len(shared) <= 1 and shared <= r.cut_vertices
    ids = sorted(i for be in r.block_edges for i in be)
    assert ids == [i for i, (u, v) in enumerate(g.edges) if u != v]


def test_minimal_two_cut_examples():
    assert minimal_two_cut(complete_graph(4).to_multigraph()) is None
    u, v, side = minimal_two_cut(cycle_graph(5).to_multigraph())
    assert len(side) == 1
    two_k4 = PlanarMultigraph.from_edges(6, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                                             (1, 5), (1, 6), (2, 5), (2, 6), (5, 6)])
    assert minimal_two_cut(two_k4) == (1, 2, (3, 4))
    with pytest.raises(ValueError):
        minimal_two_cut(path_graph(3).to_multigraph())


def test_minimal_two_cut_matches_pair_scan():
    for g in graph_classes(6):
        if not g.is_connected() or decompose(g.to_multigraph()).cut_vertices:
            continue
        cuts = two_cuts(6, g.edges)
        got = minimal_two_cut(g.to_multigraph())
        if not cuts:
            assert got is None
        else:
            assert got is not None and len(got[2]) == min(c[2] for c in cuts)


# ---------------------------------------------------------------- matching


def test_matching_examples():
    assert perfect_matching(complete_graph(4)).size() == 2
    assert perfect_matching(cycle_graph(5)) is None
    m = perfect_matching(petersen())
    assert m is not None and m.size() == 5
    assert all(petersen().has_edge(*p) for p in m.pairs)


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=10))
def test_matching_agrees_with_brute_force(g):
    got = perfect_matching(g)
    want = has_perfect_matching(g.n, [(u - 1, v - 1) for u, v in g.edges])
    assert (got is not None) == want
    if got is not None:
        used = [x for p in got.pairs for x in p]
        assert len(used) == len(set(used)) == g.n


# ---------------------------------------------------------------- canonical codes


def test_canonical_examples():
    p3 = path_graph(3)
    assert canonical_code(p3) == canonical_code(p3.relabel({1: 2, 2: 1, 3: 3}))
    assert canonical_code(complete_graph(3)) != canonical_code(p3)
    codes = {canonical_code(LabeledGraph.from_mask(4, x)) for x in range(64)}
    assert len(codes) == 11


def test_class_counts_frozen():
    # unlabeled graph counts on n = 1..7 vertices
    assert [len(graph_classes(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_canonical_code_matches_permutation_oracle_n5():
    seen: dict = {}
    for x in range(1 << 10):
        g = LabeledGraph.from_mask(5, x)
        seen.setdefault(perm_code(5, g.edges), set()).add(canonical_code(g))
    assert all(len(v) == 1 for v in seen.values())
    assert len({c for v in seen.values() for c in v}) == len(seen) == 34


@settings(max_examples=40, deadline=None)
@given(simple_graphs(max_n=6))
def test_canonical_code_permutation_invariant(g):
    code = canonical_code(g)
    for perm in permutations(range(1, g.n + 1)):
        assert canonical_code(g.relabel(dict(zip(range(1, g.n + 1), perm)))) == code


def test_canonical_bound():
    with pytest.raises(ValueError):
        canonical_code(empty_graph(11))
    assert is_isomorphic(octahedron(), octahedron().relabel({i: 7 - i for i in range(1, 7)}))


def test_order_preserving_copies_examples():
    k2 = complete_graph(2)
    assert order_preserving_induced_copies(k2, complete_graph(3)) == [(1, 2), (1, 3), (2, 3)]
    assert order_preserving_induced_copies(path_graph(3), complete_graph(3)) == []
    assert order_preserving_induced_copies(k2, path_graph(3)) == [(1, 2), (2, 3)]
