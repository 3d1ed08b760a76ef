"""Structural counters and appearance locators.

Patterns are always presented on 1..|h| and matched through the increasing
bijection onto a site W; no relabelings of the pattern are searched.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb
from typing import Iterable, Sequence

from .connectivity import components_of
from .graphs import Edge, LabeledGraph, norm_edge
from .planarity import RotationEmbedding, embed

KINDS = ("appearance", "two_appearance", "six_appearance")
MODES = ("vertex_disjoint", "totally_edge_disjoint", "totally_vertex_disjoint")
GOOD_DEGREE = 6          # good triangles have a vertex of degree <= 6
SHORT_CYCLE = 6


@dataclass(frozen=True)
class StructureCensus:
    pendant_edges: int
    short_cycles: tuple[frozenset[Edge], ...]
    good_triangles: tuple[tuple[int, int, int], ...]
    isolated_vertices: int


@dataclass(frozen=True)
class AppearanceRecord:
    kind: str
    pattern: LabeledGraph
    site: tuple[int, ...]
    boundary: tuple[Edge, ...]           # crossing edges, written (inside, outside)
    total_vertices: frozenset[int]
    total_edges: frozenset[Edge]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "site": list(self.site),
            "boundary": [list(e) for e in self.boundary],
            "total_vertices": sorted(self.total_vertices),
            "total_edges": [list(e) for e in sorted(self.total_edges)],
        }


# ---------------------------------------------------------------- counters


def pendant_edges(g: LabeledGraph) -> int:
    return sum(1 for u, v in g.edges if g.degree(u) == 1 or g.degree(v) == 1)


def short_cycles(g: LabeledGraph, max_len: int = SHORT_CYCLE) -> list[frozenset[Edge]]:
    """Distinct cycles of length 3..max_len, as edge sets.

    Each cycle is grown from its least vertex s through larger vertices only,
    and kept once by requiring the second vertex to be below the last.
    """
    adj = g.adj
    out = []

    def grow(path: list[int]) -> None:
        s, last = path[0], path[-1]
        if len(path) >= 3 and s in adj[last] and path[1] < last:
            cyc = path + [s]
            out.append(frozenset(norm_edge(cyc[i], cyc[i + 1]) for i in range(len(path))))
        if len(path) == max_len:
            return
        for w in sorted(adj[last]):
            if w > s and w not in path:
                path.append(w)
                grow(path)
                path.pop()

    for s in range(1, g.n + 1):
        grow([s])
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def triangles(g: LabeledGraph) -> list[tuple[int, int, int]]:
    adj = g.adj
    return [(a, b, c) for a, b in sorted(g.edges) for c in sorted(adj[a] & adj[b]) if c > b]


def good_triangles(g: LabeledGraph) -> list[tuple[int, int, int]]:
    return [t for t in triangles(g) if min(g.degree(x) for x in t) <= GOOD_DEGREE]


def structure_census(g: LabeledGraph) -> StructureCensus:
    return StructureCensus(
        pendant_edges(g),
        tuple(short_cycles(g)),
        tuple(good_triangles(g)),
        sum(1 for d in g.degrees if d == 0),
    )


# ---------------------------------------------------------------- sites


def connected_sets(g: LabeledGraph, k: int) -> list[tuple[int, ...]]:
    """All vertex sets of size k inducing a connected subgraph, sorted."""
    if k <= 0 or k > g.n:
        return []
    adj = g.adj
    found: set[frozenset[int]] = set()

    def extend(cur: frozenset[int], frontier: frozenset[int], low: int) -> None:
        if len(cur) == k:
            found.add(cur)
            return
        for w in sorted(frontier):
            if w > low:
                extend(cur | {w}, (frontier | adj[w]) - cur - {w}, low)

    # grow from the least vertex of the set; only larger vertices join
    for s in range(1, g.n + 1):
        extend(frozenset([s]), frozenset(x for x in adj[s] if x > s), s)
    return sorted(tuple(sorted(w)) for w in found)


def _crossing(g: LabeledGraph, w: Sequence[int]) -> list[Edge]:
    ws = set(w)
    return sorted((x, y) for x in w for y in g.adj[x] if y not in ws)


def _matches(h: LabeledGraph, g: LabeledGraph, w: Sequence[int]) -> bool:
    k = h.n
    return all(((w[i], w[j]) in g.edges) == ((i + 1, j + 1) in h.edges)
               for i in range(k) for j in range(i + 1, k))


def _inner_edges(g: LabeledGraph, w: Sequence[int]) -> frozenset[Edge]:
    ws = set(w)
    return frozenset(e for e in g.edges if e[0] in ws and e[1] in ws)


def _record(kind, h, g, w, cross) -> AppearanceRecord:
    tv = frozenset(w) | {y for _, y in cross}
    te = _inner_edges(g, w) | {norm_edge(x, y) for x, y in cross}
    return AppearanceRecord(kind, h, tuple(w), tuple(cross), tv, te)


def _need_connected(h: LabeledGraph) -> None:
    if h.n == 0 or not h.is_connected():
        raise ValueError("pattern must be a connected graph on 1..|h|")


def appearance_sites(g: LabeledGraph, k: int, rooted: bool = True) -> list[AppearanceRecord]:
    """Appearances of every connected order-k graph: connected W with one crossing edge.

    With rooted=False the root clause (crossing edge at min W) is dropped;
    the result is then a label-free superset of the rooted sites.
    """
    out = []
    for w in connected_sets(g, k):
        cross = _crossing(g, w)
        if len(cross) == 1 and (not rooted or cross[0][0] == w[0]):
            out.append(_record("appearance", g.induced(w), g, w, cross))
    return out


def find_appearances(h: LabeledGraph, g: LabeledGraph) -> list[AppearanceRecord]:
    _need_connected(h)
    if h.n >= g.n:
        return []
    return [r for r in appearance_sites(g, h.n) if _matches(h, g, r.site)]


def find_appearances_filtered(h: LabeledGraph, g: LabeledGraph, d1: int) -> list[AppearanceRecord]:
    return [r for r in find_appearances(h, g)
            if all(g.degree(x) > d1 for x in r.boundary[0])]


def two_appearance_sites(g: LabeledGraph, k: int) -> list[AppearanceRecord]:
    out = []
    for w in connected_sets(g, k):
        cross = _crossing(g, w)
        if len(cross) != 2:
            continue
        (r1, v1), (r2, v2) = cross
        if r1 != r2 and v1 != v2 and not g.has_edge(v1, v2):
            out.append(_record("two_appearance", g.induced(w), g, w, cross))
    return out


def find_two_appearances(j: LabeledGraph, g: LabeledGraph) -> list[AppearanceRecord]:
    _need_connected(j)
    return [r for r in two_appearance_sites(g, j.n) if _matches(j, g, r.site)]


def _six_pattern(g: LabeledGraph, cross: list[Edge]) -> bool:
    """Crossing edges form the alternating hexagon r1 v1 r2 v2 r3 v3, some v_i adjacent to the others."""
    if len(cross) != 6:
        return False
    rs = sorted({x for x, _ in cross})
    vs = sorted({y for _, y in cross})
    if len(rs) != 3 or len(vs) != 3:
        return False
    # each side has degree 2 into the other and the bipartite graph is K33 minus a matching = C6
    if any(sum(1 for x, _ in cross if x == r) != 2 for r in rs):
        return False
    if any(sum(1 for _, y in cross if y == v) != 2 for v in vs):
        return False
    if len(components_of(rs + vs, cross)) != 1:
        return False
    return any(all(g.has_edge(v, u) for u in vs if u != v) for v in vs)


def six_appearance_sites(g: LabeledGraph, k: int) -> list[AppearanceRecord]:
    out = []
    for w in connected_sets(g, k):
        cross = _crossing(g, w)
        if _six_pattern(g, cross):
            out.append(_record("six_appearance", g.induced(w), g, w, cross))
    return out


def find_six_appearances(t: LabeledGraph, g: LabeledGraph) -> list[AppearanceRecord]:
    _need_connected(t)
    if g.n < t.n + 3:
        return []
    return [r for r in six_appearance_sites(g, t.n) if _matches(t, g, r.site)]


# ---------------------------------------------------------------- disjoint families


def _conflicts(records: Sequence[AppearanceRecord], mode: str) -> list[int]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    key = {
        "vertex_disjoint": lambda r: frozenset(r.site),
        "totally_edge_disjoint": lambda r: r.total_edges,
        "totally_vertex_disjoint": lambda r: r.total_vertices,
    }[mode]
    sets = [key(r) for r in records]
    nb = [0] * len(records)
    for i, j in combinations(range(len(records)), 2):
        if sets[i] & sets[j]:
            nb[i] |= 1 << j
            nb[j] |= 1 << i
    return nb


def max_disjoint_family(records: Sequence[AppearanceRecord], mode: str) -> list[AppearanceRecord]:
    """Exact maximum pairwise-disjoint subfamily (branch and bound on the conflict graph)."""
    recs = list(records)
    nb = _conflicts(recs, mode)
    best = [0]

    def search(cand: int, chosen: int) -> None:
        if cand == 0:
            if chosen.bit_count() > best[0].bit_count():
                best[0] = chosen
            return
        if chosen.bit_count() + cand.bit_count() <= best[0].bit_count():
            return
        v = (cand & -cand).bit_length() - 1
        if nb[v] & cand == 0:      # no conflicts left: always take it
            search(cand & ~(1 << v), chosen | 1 << v)
            return
        search(cand & ~(1 << v) & ~nb[v], chosen | 1 << v)
        search(cand & ~(1 << v), chosen)

    search((1 << len(recs)) - 1, 0)
    return [r for i, r in enumerate(recs) if best[0] >> i & 1]


# ---------------------------------------------------------------- intersection bounds


def intersection_counts(records: Sequence[AppearanceRecord], by: str = "edges") -> list[int]:
    """For each record, how many other records share a total edge (or vertex)."""
    sets = [r.total_edges if by == "edges" else r.total_vertices for r in records]
    return [sum(1 for j, t in enumerate(sets) if j != i and s & t) for i, s in enumerate(sets)]


def appearance_intersection_violations(g: LabeledGraph, k: int, rooted: bool = True) -> list[AppearanceRecord]:
    """Appearances of order k whose total edge set meets more than k others."""
    recs = appearance_sites(g, k, rooted)
    return [r for r, c in zip(recs, intersection_counts(recs)) if c > k]


def lambda_bound(j: int) -> int:
    """(j+2) C(j+2, j) C(5 + 5^2 + ... + 5^(j+1), j+1)."""
    s = sum(5 ** i for i in range(1, j + 2))
    return (j + 2) * comb(j + 2, j) * comb(s, j + 1)


def two_appearance_max_intersections(g: LabeledGraph, j: int) -> int:
    recs = two_appearance_sites(g, j)
    return max(intersection_counts(recs, by="vertices"), default=0)


def six_appearance_bound(t: int) -> int:
    return 2 * comb(t + 3, 3)


# ---------------------------------------------------------------- short cycles and faces


def face_sizes(g: LabeledGraph, emb: RotationEmbedding | None = None) -> list[int]:
    """Face sizes of a plane embedding of g, outer faces of the components merged.

    Per component the largest face is taken as the outer one; all of them,
    plus isolated vertices, share one face of the whole drawing.
    """
    if emb is None:
        e = embed(g)
        if not isinstance(e, RotationEmbedding):
            raise ValueError("graph is not planar")
        emb = e
    walks = emb.faces()
    comp_of = {}
    for i, c in enumerate(components_of(list(range(1, g.n + 1)), emb.host.edges)):
        for v in c:
            comp_of[v] = i
    per: dict[int, list[int]] = {}
    for w in walks:
        per.setdefault(comp_of[emb.tail(w[0])], []).append(len(w))
    sizes, outer = [], 0
    for c in sorted(per):
        s = sorted(per[c])
        outer += s.pop()
        sizes += s
    return sorted(sizes + [outer])


def low_degree_count(g: LabeledGraph, d: int = 2) -> int:
    return sum(1 for x in g.degrees if x <= d)


@dataclass(frozen=True)
class ShortCycleCheck:
    n: int
    low_degree: int
    k: float
    cycles: int
    cycle_bound: int
    short_faces: int
    face_bound: float

    @property
    def applies(self) -> bool:
        return self.k < 1 / 15

    @property
    def ok(self) -> bool:
        return not self.applies or (self.cycles >= self.cycle_bound and self.short_faces >= self.face_bound)


def short_cycle_check(g: LabeledGraph) -> ShortCycleCheck:
    """Test the short-cycle bound with the tightest k = (#vertices of degree <= 2) / n."""
    n = g.n
    low = low_degree_count(g)
    k = low / n if n else 0.0
    cyc = len(short_cycles(g))
    faces = sum(1 for s in face_sizes(g) if s <= SHORT_CYCLE)
    return ShortCycleCheck(n, low, k, cyc, ceil((1 - 15 * k) / 28 * n - 1e-12),
                           faces, (1 - 15 * k) / 14 * n)


# ---------------------------------------------------------------- fixtures


def plant_six_appearance(g: LabeledGraph, face: tuple[int, int, int],
                         t: LabeledGraph, outer: tuple[int, int, int]) -> LabeledGraph:
    """Put a copy of t inside the facial triangle face = (v1, v2, v3).

    outer lists the three vertices of t (an outer face of t) that become
    r1, r2, r3; the copy is joined so that the crossing edges are
    r1v1, v1r2, r2v2, v2r3, r3v3, v3r1.  New vertices are g.n+1..g.n+|t|.
    """
    v1, v2, v3 = face
    if not (g.has_edge(v1, v2) and g.has_edge(v2, v3) and g.has_edge(v1, v3)):
        raise ValueError("face must be a triangle of g")
    off = g.n
    r1, r2, r3 = (x + off for x in outer)
    edges: list[Iterable[int]] = list(g.edges) + [(a + off, b + off) for a, b in t.edges]
    edges += [(r1, v1), (v1, r2), (r2, v2), (v2, r3), (r3, v3), (v3, r1)]
    return LabeledGraph.from_edges(g.n + t.n, edges)
