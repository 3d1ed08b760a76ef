"""Core graph value types and their text encodings.

Two types carry everything: ``LabeledGraph`` (simple, labels 1..n) and
``PlanarMultigraph`` (loops and parallel edges allowed).  Both are frozen
and hashable.  Edge masks use the graph6 bit order, so the mask of a graph
on n-1 vertices is a prefix of the mask of the same graph on n vertices.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def pair_index(i: int, j: int) -> int:
    """Bit index of the pair {i, j} (1-based labels, i != j) in graph6 order."""
    if i > j:
        i, j = j, i
    j0 = j - 1
    return j0 * (j0 - 1) // 2 + (i - 1)


def pairs_in_order(n: int) -> list[Edge]:
    """All pairs of 1..n listed in edge-mask bit order."""
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on vertices 1..n."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        es = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop {e} in simple graph")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            es.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledGraph":
        return cls(n, frozenset(norm_edge(int(u), int(v)) for u, v in edges))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "LabeledGraph":
        pairs = pairs_in_order(n)
        return cls(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def mask(self) -> int:
        out = 0
        for u, v in self.edges:
            out |= 1 << pair_index(u, v)
        return out

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return {v: frozenset(s) for v, s in nb.items()}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.adj[v]) for v in range(1, self.n + 1))

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def add_edge(self, u: int, v: int) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges | {norm_edge(u, v)})

    def non_edges(self) -> list[Edge]:
        return [p for p in pairs_in_order(self.n) if p not in self.edges]

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        comps = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            stack, comp = [s], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def induced(self, vertices: Sequence[int]) -> "LabeledGraph":
        """Induced subgraph relabelled by the increasing bijection onto 1..k."""
        vs = sorted(vertices)
        pos = {v: i + 1 for i, v in enumerate(vs)}
        return LabeledGraph(
            len(vs),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def relabel(self, perm: dict[int, int]) -> "LabeledGraph":
        return LabeledGraph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def to_multigraph(self) -> "PlanarMultigraph":
        return PlanarMultigraph(self.n, tuple(sorted(self.edges)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class PlanarMultigraph:
    """Multigraph on 1..n; ``edges`` is a sorted tuple so multiplicity is kept.

    Edge ids are positions in ``edges``.  A loop (v, v) adds 2 to deg(v).
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        es = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            es.append(norm_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "PlanarMultigraph":
        return cls(n, tuple(norm_edge(int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg[1:])

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def loops(self) -> list[Edge]:
        return [e for e in self.edges if e[0] == e[1]]

    def support(self) -> LabeledGraph:
        """Underlying simple graph (loops dropped, parallels merged)."""
        return LabeledGraph(self.n, frozenset(e for e in self.edges if e[0] != e[1]))

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)

    def contains(self, other: "PlanarMultigraph | LabeledGraph") -> bool:
        """Edge multiset containment on a shared vertex set."""
        if isinstance(other, LabeledGraph):
            other = other.to_multigraph()
        if other.n != self.n:
            return False
        mine = self.multiplicity
        return all(mine[e] >= c for e, c in other.multiplicity.items())

    def add_edges(self, extra: Iterable[Edge]) -> "PlanarMultigraph":
        return PlanarMultigraph(self.n, self.edges + tuple(norm_edge(*e) for e in extra))

    def is_connected(self) -> bool:
        return len(self.support().components) <= 1


# ---------------------------------------------------------------- graph6


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: LabeledGraph, header: bool = False) -> str:
    pairs = pairs_in_order(g.n)
    bits = [1 if p in g.edges else 0 for p in pairs]
    bits += [0] * (-len(bits) % 6)
    data = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        data.append(x)
    s = "".join(chr(63 + x) for x in data)
    return (">>graph6<<" + s) if header else s


def from_graph6(s: str) -> LabeledGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(v < 0 or v > 63 for v in vals):
        raise ValueError(f"invalid graph6 string {s!r}")
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        if len(vals) < 8:
            raise ValueError("truncated graph6 header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    pairs = pairs_in_order(n)
    need = (len(pairs) + 5) // 6
    if len(rest) != need:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {need}")
    edges = []
    for k, p in enumerate(pairs):
        if rest[k // 6] >> (5 - k % 6) & 1:
            edges.append(p)
    return LabeledGraph(n, frozenset(edges))


# ---------------------------------------------------------------- JSON


def multigraph_to_json(g: PlanarMultigraph | LabeledGraph) -> str:
    if isinstance(g, LabeledGraph):
        g = g.to_multigraph()
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True)


def multigraph_from_json(text: str | dict) -> PlanarMultigraph:
    obj = json.loads(text) if isinstance(text, str) else text
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed multigraph JSON: {exc}") from exc
    return PlanarMultigraph.from_edges(n, edges)


# ---------------------------------------------------------------- small named graphs


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset(pairs_in_order(n)))


def cycle_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n)


def star_graph(k: int) -> LabeledGraph:
    """K_{1,k} with centre 1."""
    return LabeledGraph.from_edges(k + 1, [(1, i) for i in range(2, k + 2)])


def octahedron() -> LabeledGraph:
    return LabeledGraph.from_edges(6, [p for p in pairs_in_order(6) if p not in {(1, 2), (3, 4), (5, 6)}])


def icosahedron() -> LabeledGraph:
    # top 1, upper ring 2..6, lower ring 7..11, bottom 12
    es = []
    for i in range(5):
        up, up2 = 2 + i, 2 + (i + 1) % 5
        lo, lo2 = 7 + i, 7 + (i + 1) % 5
        es += [(1, up), (up, up2), (lo, lo2), (12, lo), (up, lo), (up2, lo)]
    return LabeledGraph.from_edges(12, es)


def petersen() -> LabeledGraph:
    es = [(i, i % 5 + 1) for i in range(1, 6)]
    es += [(i, i + 5) for i in range(1, 6)]
    es += [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return LabeledGraph.from_edges(10, es)


def disjoint_union(*gs: LabeledGraph) -> LabeledGraph:
    off, es = 0, []
    for g in gs:
        es += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return LabeledGraph.from_edges(off, es)
