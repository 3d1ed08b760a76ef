"""Simple-graph wrappers: edge gadgets and regularisation gadgets.

witness_to_simple replaces each added multigraph edge uv by the 6-vertex
gadget: the path u-a-b-c-d-v plus two vertices t, s each joined to a, b,
c and d.  Every gadget vertex has degree 4, and u, v each gain one edge,
exactly as the replaced edge gave them.

For 3- and 5-regular supergraphs, each vertex v receives D - deg(v)
copies of a gadget L_D in which every vertex has degree D except one
attachment vertex of degree D - 1.
"""

from __future__ import annotations

from collections import Counter

from ..graphs import LabeledGraph, PlanarMultigraph, complete_graph, icosahedron
from ..planarity import is_planar
from .algorithm import multiset_difference


def witness_to_simple(g: PlanarMultigraph, h: LabeledGraph) -> LabeledGraph:
    if g.n != h.n or not g.contains(h):
        raise ValueError("multigraph must contain h on the same vertex set")
    if any(d != 4 for d in g.degrees):
        raise ValueError("multigraph must be 4-regular")
    if not is_planar(g):
        raise ValueError("multigraph must be planar")
    edges = list(h.edges)
    nxt = g.n + 1
    for u, v in multiset_difference(g, h):
        a, b, c, d, t, s = range(nxt, nxt + 6)
        nxt += 6
        edges += [(u, a), (a, b), (b, c), (c, d), (d, v)]
        edges += [(t, x) for x in (a, b, c, d)] + [(s, x) for x in (a, b, c, d)]
    return LabeledGraph.from_edges(nxt - 1, edges)


def l3_gadget() -> tuple[LabeledGraph, int]:
    """K4 with one edge subdivided; the subdivision vertex (5) has degree 2."""
    g = complete_graph(4)
    es = [e for e in g.edges if e != (1, 2)] + [(1, 5), (5, 2)]
    return LabeledGraph.from_edges(5, es), 5


def l5_gadget() -> tuple[LabeledGraph, int]:
    """Two icosahedra minus an edge, joined through one new vertex (25)."""
    ico = icosahedron()
    drop = (1, 2)
    base = [e for e in ico.edges if e != drop]
    es = [(a, b) for a, b in base] + [(a + 12, b + 12) for a, b in base]
    c = 25
    es += [(c, 1), (c, 2), (c, 13), (c, 14)]
    return LabeledGraph.from_edges(25, es), c


def regular_supergraph(h: LabeledGraph, d2: int) -> LabeledGraph:
    if d2 not in (3, 5):
        raise ValueError("only D2 in {3, 5} is supported")
    if h.max_degree() > d2:
        raise ValueError(f"maximum degree exceeds {d2}")
    if not is_planar(h):
        raise ValueError("input graph is not planar")
    gadget, root = l3_gadget() if d2 == 3 else l5_gadget()
    edges = list(h.edges)
    nxt = h.n + 1
    for v in range(1, h.n + 1):
        for _ in range(d2 - h.degree(v)):
            off = nxt - 1
            edges += [(a + off, b + off) for a, b in gadget.edges]
            edges.append((v, root + off))
            nxt += gadget.n
    return LabeledGraph.from_edges(nxt - 1, edges)


def validate_regular(g: LabeledGraph, d: int, h: LabeledGraph | None = None) -> bool:
    """d-regular, planar, and (if given) containing h on its original labels."""
    if any(x != d for x in g.degrees) or not is_planar(g):
        return False
    if h is not None:
        if g.n < h.n or not h.edges <= g.edges:
            return False
    return True


def degree_profile(g: LabeledGraph) -> Counter:
    return Counter(g.degrees)
