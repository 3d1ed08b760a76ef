"""Components, bridges, cut vertices, blocks and minimal 2-vertex-cuts.

The internal helpers work on an arbitrary vertex list and an edge list
(edge id = list position), so the 4-regular machinery can call them on
pieces with non-contiguous labels.  Loops are ignored for connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Edge, PlanarMultigraph


@dataclass(frozen=True)
class BlockStructure:
    blocks: list[list[int]]          # edge ids per block (non-loop edges)
    bridges: list[int]               # edge ids
    cut_vertices: set                # articulation points


def incidence(vertices: Iterable, edges: Sequence[Edge]) -> dict:
    inc: dict = {v: [] for v in vertices}
    for i, (u, v) in enumerate(edges):
        if u == v:
            continue
        inc[u].append((v, i))
        inc[v].append((u, i))
    return inc


def components_of(vertices: Sequence, edges: Sequence[Edge]) -> list[list]:
    """Connected components, each sorted, listed by least vertex."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    comps = [sorted(g) for g in groups.values()]
    comps.sort(key=lambda c: c[0])
    return comps


def block_structure(vertices: Sequence, edges: Sequence[Edge]) -> BlockStructure:
    """Hopcroft-Tarjan biconnected components on a multigraph (iterative DFS)."""
    inc = incidence(vertices, edges)
    disc: dict = {}
    low: dict = {}
    blocks: list[list[int]] = []
    bridges: list[int] = []
    estack: list[int] = []
    t = 0
    for root in vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            v, pe, it = stack[-1]
            pushed = False
            for w, eid in it:
                if eid == pe:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append(eid)
                    stack.append((w, eid, iter(inc[w])))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    estack.append(eid)
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                blk = []
                while True:
                    e = estack.pop()
                    blk.append(e)
                    if e == pe:
                        break
                blocks.append(sorted(blk))
            if low[v] > disc[p]:
                bridges.append(pe)
    count: dict = {}
    for blk in blocks:
        for x in {y for e in blk for y in edges[e]}:
            count[x] = count.get(x, 0) + 1
    cuts = {x for x, c in count.items() if c >= 2}
    return BlockStructure(blocks, sorted(bridges), cuts)


def has_cut_vertex(vertices: Sequence, edges: Sequence[Edge]) -> bool:
    return bool(block_structure(vertices, edges).cut_vertices)


def two_cut_scan(vertices: Sequence, edges: Sequence[Edge]):
    """Minimal 2-vertex-cut by exhaustive pair scan.

    Returns (u, v, side) with side a smallest component of G - {u, v},
    minimised over all cuts, ties by lexicographically least (u, v) and then
    by least vertex of the side.  None when no 2-cut exists.
    """
    vs = sorted(vertices)
    best = None
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            rest = [x for x in vs if x != u and x != v]
            if len(rest) < 2:
                continue
            sub = [e for e in edges if u not in e and v not in e]
            comps = components_of(rest, sub)
            if len(comps) < 2:
                continue
            side = min(comps, key=lambda c: (len(c), c[0]))
            key = (len(side), u, v)
            if best is None or key < best[0]:
                best = (key, (u, v, tuple(side)))
    return None if best is None else best[1]


# ---------------------------------------------------------------- public API


@dataclass(frozen=True)
class ConnectivityReport:
    components: tuple[tuple[int, ...], ...]
    cut_edges: tuple[int, ...]               # edge ids into host.edges
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]      # vertex sets, sorted by least vertex
    block_edges: tuple[tuple[int, ...], ...]  # edge ids (non-loop) of each block

    def cut_edge_pairs(self, g: PlanarMultigraph) -> set[Edge]:
        return {g.edges[i] for i in self.cut_edges}


def decompose(g: PlanarMultigraph) -> ConnectivityReport:
    vs = list(range(1, g.n + 1))
    bs = block_structure(vs, g.edges)
    comps = components_of(vs, g.edges)
    covered = set()
    pieces = []
    for blk in bs.blocks:
        verts = sorted({x for e in blk for x in g.edges[e]})
        covered.update(verts)
        pieces.append((tuple(verts), tuple(blk)))
    for v in vs:
        if v not in covered:
            pieces.append(((v,), ()))
    pieces.sort(key=lambda p: (p[0][0], p[0]))
    return ConnectivityReport(
        components=tuple(tuple(c) for c in comps),
        cut_edges=tuple(bs.bridges),
        cut_vertices=frozenset(bs.cut_vertices),
        blocks=tuple(p[0] for p in pieces),
        block_edges=tuple(p[1] for p in pieces),
    )


def minimal_two_cut(g: PlanarMultigraph) -> tuple[int, int, tuple[int, ...]] | None:
    vs = list(range(1, g.n + 1))
    if len(components_of(vs, g.edges)) > 1:
        raise ValueError("minimal_two_cut requires a connected graph")
    if block_structure(vs, g.edges).cut_vertices:
        raise ValueError("minimal_two_cut requires a graph without cut vertices")
    return two_cut_scan(vs, g.edges)

