"""Blue graphs, augmentations and their red graphs.

A ``Piece`` is a blue multigraph B (edge ids kept explicitly, since pieces
are cut out of larger graphs) together with an augmentation: a type per
edge and f on the blue vertices.  Edge types:

    A  bare edge
    B  one placed vertex w with f(w) = 1
    C  one placed vertex w with f(w) = 2
    D  a diamond: the edge becomes u-a-b-c-v and p, q are each joined to
       a, b, c; f(a) = f(b) = f(c) = 0 and f(p) = f(q) = 1

The red graph R is never needed for the decisions: every face of R is a
face of B with the placed vertices spliced into its boundary.  It is built
explicitly only for witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

TYPE_SUM = {"A": 0, "B": 1, "C": 2, "D": 2}


@dataclass
class Piece:
    verts: tuple[int, ...]
    edges: dict[int, tuple[int, int]]
    etype: dict[int, str]
    f: dict[int, int]

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges.values())

    def f_sum(self) -> int:
        return sum(self.f.values()) + sum(TYPE_SUM[t] for t in self.etype.values())

    def edge_list(self) -> list[tuple[int, int]]:
        return [self.edges[e] for e in sorted(self.edges)]

    def next_eid(self) -> int:
        return max(self.edges, default=-1) + 1

    def check(self) -> None:
        """Discrepancy inequality on blue vertices and parity of the red sum."""
        for v in self.verts:
            if self.f[v] < 0 or self.f[v] > 4 - self.degree(v):
                raise AssertionError(f"discrepancy inequality fails at {v}")
        if self.f_sum() % 2:
            raise AssertionError("discrepancy parity fails")


@dataclass
class RedGraph:
    verts: list[int]
    edges: list[tuple[int, int]]
    f: dict[int, int]
    parts: dict[int, tuple[int, ...]]          # blue eid -> placed vertices
    part_edges: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)


def red_graph(p: Piece, first_new: int | None = None) -> RedGraph:
    nxt = (max(p.verts) + 1) if first_new is None else first_new
    verts = list(p.verts)
    f = dict(p.f)
    edges: list[tuple[int, int]] = []
    parts: dict[int, tuple[int, ...]] = {}
    part_edges: dict[int, list[tuple[int, int]]] = {}
    for eid in sorted(p.edges):
        u, v = p.edges[eid]
        t = p.etype[eid]
        if t == "A":
            es = [(u, v)]
            parts[eid] = ()
        elif t in "BC":
            w = nxt
            nxt += 1
            verts.append(w)
            f[w] = 1 if t == "B" else 2
            es = [(u, w), (w, v)]
            parts[eid] = (w,)
        else:
            a, b, c, pp, q = range(nxt, nxt + 5)
            nxt += 5
            verts += [a, b, c, pp, q]
            f.update({a: 0, b: 0, c: 0, pp: 1, q: 1})
            es = [(u, a), (a, b), (b, c), (c, v),
                  (pp, a), (pp, b), (pp, c), (q, a), (q, b), (q, c)]
            parts[eid] = (a, b, c, pp, q)
        edges += es
        part_edges[eid] = es
    return RedGraph(verts, edges, f, parts, part_edges)


def side_vertices(etype: str, part: tuple[int, ...], forward: bool) -> list[int]:
    """Placed vertices seen from one side of a blue edge (demand vertices only)."""
    if etype == "A":
        return []
    if etype in "BC":
        return [part[0]]
    return [part[3]] if forward else [part[4]]
