from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import completes_to_four_regular, nx_planar
from planarlab.canon import graph_classes
from planarlab.connectivity import block_structure, components_of, two_cut_scan
from planarlab.fourreg import (Augmentation, DiscrepancyMap, brute_force_oracle,
                               discrepancy_satisfiable, four_embeddable, is_four_embeddable,
                               l3_gadget, l5_gadget, lemma2_satisfiable, regular_supergraph,
                               satisfy_discrepancy, stage4_step, validate_regular,
                               witness_to_simple)
from planarlab.fourreg.stage4 import solve
from planarlab.graphs import (LabeledGraph, PlanarMultigraph, complete_graph, cycle_graph,
                              octahedron, path_graph, star_graph)

K4 = complete_graph(4).to_multigraph()
K5_MINUS_E = LabeledGraph(5, complete_graph(5).edges - {(1, 2)})


def _check_witness(h: PlanarMultigraph, f, m: PlanarMultigraph) -> None:
    """Independent witness check: contains h, degree deg_h + f, planar support."""
    assert not Counter(h.edges) - Counter(m.edges)
    assert m.n == h.n
    assert all(m.degree(v) == h.degree(v) + f[v - 1] for v in range(1, h.n + 1))
    assert nx_planar(m.n, m.edges)


# ---------------------------------------------------------------- decisions


def test_four_embeddable_examples():
    assert not is_four_embeddable(K5_MINUS_E).embeddable
    assert is_four_embeddable(octahedron()).embeddable
    r = is_four_embeddable(complete_graph(4), want_witness=True)
    assert r.embeddable and set(r.multigraph.degrees) == {4}
    assert validate_regular(r.simple, 4, complete_graph(4))
    with pytest.raises(ValueError):
        is_four_embeddable(star_graph(5))
    with pytest.raises(ValueError):
        is_four_embeddable(complete_graph(5))


def test_cut_edge_pieces():
    # K4 plus a pendant vertex, and two K4s joined by a cut edge
    h = LabeledGraph.from_edges(5, list(complete_graph(4).edges) + [(4, 5)])
    assert four_embeddable(h) == brute_force_oracle(h) == completes_to_four_regular(5, h.edges)
    k4 = list(complete_graph(4).edges)
    h = LabeledGraph.from_edges(8, k4 + [(a + 4, b + 4) for a, b in k4] + [(4, 5)])
    assert four_embeddable(h) == completes_to_four_regular(8, h.edges)
    # K5-e is the obstruction; hanging it on a cut edge keeps the answer no
    g = LabeledGraph.from_edges(6, list(K5_MINUS_E.edges) + [(1, 6)])
    assert not four_embeddable(g) and not completes_to_four_regular(6, g.edges)


def test_multigraph_inputs_match_oracle():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 5)
        edges = []
        for _ in range(rng.randint(0, 2 * n)):
            u, v = rng.randint(1, n), rng.randint(1, n)
            edges.append((u, v))
        g = PlanarMultigraph.from_edges(n, edges)
        if g.max_degree() > 4:
            continue
        assert four_embeddable(g) == completes_to_four_regular(n, g.edges), g


@pytest.mark.parametrize("n", range(1, 6))
def test_simple_classes_match_oracle(n):
    for g in graph_classes(n):
        if g.max_degree() > 4 or not nx_planar(n, g.edges):
            continue
        assert is_four_embeddable(g).embeddable == completes_to_four_regular(n, g.edges), g


# ---------------------------------------------------------------- discrepancy maps


def test_satisfy_discrepancy_examples():
    w = satisfy_discrepancy(K4, (1, 1, 1, 1))
    assert w is not None
    _check_witness(K4, (1, 1, 1, 1), w.graph)
    k3 = complete_graph(3).to_multigraph()
    w = satisfy_discrepancy(k3, (2, 2, 2))
    assert w is not None
    _check_witness(k3, (2, 2, 2), w.graph)


def test_discrepancy_map_validation():
    with pytest.raises(ValueError):
        DiscrepancyMap(K4, (1, 0, 0, 0))             # odd sum
    with pytest.raises(ValueError):
        DiscrepancyMap(K4, (2, 0, 0, 0))             # exceeds 4 - deg
    with pytest.raises(ValueError):
        DiscrepancyMap(K4, (1, 1, 0, 0), even=True)  # f + deg odd
    assert DiscrepancyMap.full(K4).f == (1, 1, 1, 1)
    assert satisfy_discrepancy(K4, (0, 0, 0, 0)) is not None


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.integers(2, 5), st.integers(0, 10**6))
def test_discrepancy_on_blocks_matches_oracle(n, seed):
    rng = random.Random(seed)
    gs = [g for g in graph_classes(n)
          if g.is_connected() and g.max_degree() <= 4 and nx_planar(n, g.edges)]
    g = rng.choice(gs).to_multigraph()
    vs = list(range(1, n + 1))
    assume(n == 2 or not block_structure(vs, g.edges).cut_vertices)
    f = [rng.randint(0, 4 - d) for d in g.degrees]
    if sum(f) % 2:
        k = next((i for i, x in enumerate(f) if x > 0), None)
        assume(k is not None)
        f[k] -= 1
    want = completes_to_four_regular(n, g.edges, f)
    assert discrepancy_satisfiable(g, tuple(f)) == want
    w = satisfy_discrepancy(g, tuple(f))
    assert (w is not None) == want
    if w is not None:
        _check_witness(g, f, w.graph)


# ---------------------------------------------------------------- augmentations


def _red_oracle(a: Augmentation) -> bool:
    return completes_to_four_regular(a.red.n, a.red.edges, list(a.red_f.f))


def test_lemma2_examples():
    assert lemma2_satisfiable(K4, Augmentation.trivial(K4, (1, 1, 1, 1))) is not None
    a = Augmentation(K4, ("C", "A", "A", "A", "A", "A"), (1, 1, 0, 0))
    w = lemma2_satisfiable(K4, a)
    assert w is not None
    _check_witness(a.red, a.red_f.f, w.graph)
    # a diamond with nothing left to absorb its two open edge-ends elsewhere
    a = Augmentation(K4, ("D", "A", "A", "A", "A", "A"), (0, 0, 0, 0))
    assert lemma2_satisfiable(K4, a) is None and not _red_oracle(a)
    # a bare edge doubled by a diamond is never satisfiable
    dbl = PlanarMultigraph.from_edges(4, list(K4.edges) + [(1, 2)])
    a = Augmentation(dbl, ("D",) + ("A",) * 6, (0, 0, 1, 1))
    assert lemma2_satisfiable(dbl, a) is None and not _red_oracle(a)
    with pytest.raises(ValueError):
        lemma2_satisfiable(cycle_graph(4).to_multigraph(),
                           Augmentation.trivial(cycle_graph(4).to_multigraph(), (0, 0, 0, 0)))


def test_augmentation_validation():
    with pytest.raises(ValueError):
        Augmentation(K4, ("A",) * 5, (0,) * 4)
    with pytest.raises(ValueError):
        Augmentation(K4, ("E",) + ("A",) * 5, (0,) * 4)
    with pytest.raises(AssertionError):
        Augmentation(K4, ("B",) + ("A",) * 5, (0,) * 4)     # odd red sum
    a = Augmentation(K4, ("D", "C", "B", "B", "A", "A"), (0, 0, 0, 0))
    assert [len(a.edge_map[i]) for i in range(6)] == [5, 1, 1, 1, 0, 0]
    assert a.red.n == 4 + 8


BASES = [g.to_multigraph() for n in range(3, 6) for g in graph_classes(n)
         if g.is_connected() and g.max_degree() <= 4 and nx_planar(n, g.edges)
         and not block_structure(list(range(1, n + 1)), list(g.edges)).cut_vertices]


@st.composite
def augmentations(draw):
    b = draw(st.sampled_from(BASES))
    if draw(st.booleans()):
        # double one edge whose ends still have room
        room = [e for e in b.edges if b.degree(e[0]) < 4 and b.degree(e[1]) < 4]
        if room:
            b = b.add_edges([draw(st.sampled_from(room))])
    types = []
    for _ in range(b.m):
        t = draw(st.sampled_from("AAABCD"))
        if t == "D" and "D" in types:
            t = "A"                                  # keep the oracle instance small
        types.append(t)
    f = [draw(st.integers(0, 4 - d)) for d in b.degrees]
    odd = (sum(f) + sum({"A": 0, "B": 1, "C": 2, "D": 2}[t] for t in types)) % 2
    if odd:
        k = next((i for i, x in enumerate(f) if x > 0), None)
        if k is not None:
            f[k] -= 1
        else:
            types[types.index("B")] = "A" if "B" in types else types[0]
    return b, tuple(types), tuple(f)


@settings(max_examples=150, deadline=None)
@given(augmentations())
def test_stage4_matches_oracle(data):
    b, types, f = data
    try:
        a = Augmentation(b, types, f)
    except AssertionError:
        assume(False)
    want = _red_oracle(a)
    assert solve(a.piece()) == want
    if two_cut_scan(list(range(1, b.n + 1)), list(b.edges)) is None:
        w = lemma2_satisfiable(b, a)
        assert (w is not None) == want
        if w is not None:
            _check_witness(a.red, a.red_f.f, w.graph)
    else:
        step = stage4_step(b, a)
        assert step.kind in ("split", "done", "base") and step.cut is not None
        if step.kind == "split":
            step.next_piece.check()                   # parity and inequality carried over


def _random_two_cut_bases(rng, count):
    """Loopless cut-vertex-free planar multigraphs (max multiplicity 2) that have a 2-cut."""
    out = 0
    while out < count:
        n = rng.randint(4, 6)
        es = [tuple(sorted(rng.sample(range(1, n + 1), 2))) for _ in range(rng.randint(n, 2 * n))]
        b = PlanarMultigraph.from_edges(n, es)
        vs = list(range(1, n + 1))
        if (b.max_degree() > 4 or max(Counter(b.edges).values()) > 2
                or len(components_of(vs, b.edges)) != 1
                or block_structure(vs, b.edges).cut_vertices
                or two_cut_scan(vs, list(b.edges)) is None or not nx_planar(n, b.edges)):
            continue
        out += 1
        yield b


def test_stage4_cases_seen():
    # every case of the 2-cut step is reached, and each agrees with the oracle
    rng = random.Random(3)
    seen: Counter = Counter()
    for b in _random_two_cut_bases(rng, 3000):
        types = tuple(rng.choice("AAABC") for _ in range(b.m))
        f = tuple(rng.randint(0, 4 - d) for d in b.degrees)
        try:
            a = Augmentation(b, types, f)
        except AssertionError:
            continue
        step = stage4_step(b, a)
        seen[step.case] += 1
        if seen[step.case] <= 25:
            assert solve(a.piece()) == _red_oracle(a), (b, types, f)
    assert set(seen) == {"a(i)", "a(ii)", "b(i)", "b(ii)", "c-small", "c/a(i)", "c/a(ii)"}


@pytest.mark.parametrize("edges,types,f,case", [
    ([(1, 3), (1, 3), (1, 4), (2, 3), (2, 4)], "BCAAC", (1, 2, 1, 1), "b(i)"),
    ([(1, 2), (1, 2), (1, 3), (2, 4), (3, 4)], "AAACA", (1, 1, 0, 2), "b(ii)"),
    ([(1, 3), (1, 3), (1, 4), (2, 3), (2, 4), (2, 4)], "CAAAAB", (1, 1, 0, 1), "c-small"),
    ([(1, 2), (1, 5), (1, 5), (2, 3), (2, 5), (3, 4), (3, 4), (4, 5)], "BBBBAABA",
     (1, 1, 0, 1, 0), "c/a(i)"),
    ([(1, 2), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5), (3, 5)], "CACAAAC", (1, 1, 1, 0, 1),
     "c/a(ii)"),
])
def test_stage4_case_examples(edges, types, f, case):
    b = PlanarMultigraph.from_edges(len(f), edges)
    a = Augmentation(b, tuple(types), f)
    step = stage4_step(b, a)
    assert step.case == case
    assert solve(a.piece()) == _red_oracle(a)
    if step.kind == "split":
        step.next_piece.check()


def test_stage4_rejects_cut_vertices():
    with pytest.raises(ValueError):
        b = path_graph(3).to_multigraph()
        stage4_step(b, Augmentation.trivial(b, (0, 0, 0)))


# ---------------------------------------------------------------- simple witnesses


def test_witness_to_simple_sizes():
    c4 = cycle_graph(4)
    g = witness_to_simple(PlanarMultigraph.from_edges(4, list(c4.edges) * 2), c4)
    assert g.n == 28 and validate_regular(g, 4, c4)
    k1 = LabeledGraph(1)
    g = witness_to_simple(PlanarMultigraph.from_edges(1, [(1, 1), (1, 1)]), k1)
    assert g.n == 13 and validate_regular(g, 4, k1)
    with pytest.raises(ValueError):
        witness_to_simple(K4, complete_graph(4))      # not 4-regular


@pytest.mark.parametrize("n", range(1, 6))
def test_simple_witnesses_over_classes(n):
    for h in graph_classes(n):
        if h.max_degree() > 4 or not nx_planar(n, h.edges):
            continue
        r = is_four_embeddable(h, want_witness=True)
        if r.embeddable:
            assert nx_planar(r.simple.n, r.simple.edges)
            assert set(r.simple.degrees) == {4} and h.edges <= r.simple.edges


def test_regularisation_gadgets():
    g, root = l3_gadget()
    assert nx_planar(g.n, g.edges) and g.degree(root) == 2
    assert all(g.degree(v) == 3 for v in range(1, g.n + 1) if v != root)
    g, root = l5_gadget()
    assert nx_planar(g.n, g.edges) and g.degree(root) == 4
    assert all(g.degree(v) == 5 for v in range(1, g.n + 1) if v != root)


def test_regular_supergraph_examples():
    k2 = complete_graph(2)
    g = regular_supergraph(k2, 3)
    assert g.n == 22 and validate_regular(g, 3, k2)
    g = regular_supergraph(k2, 5)
    assert g.n == 2 + 8 * 25 and validate_regular(g, 5, k2)
    assert nx_planar(g.n, g.edges)
    with pytest.raises(ValueError):
        regular_supergraph(star_graph(4), 3)
    with pytest.raises(ValueError):
        regular_supergraph(k2, 4)
