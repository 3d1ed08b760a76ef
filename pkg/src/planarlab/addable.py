"""Addable non-edges, add(n, m) by exhaustive class scan, and spine graphs.

A non-edge e of a planar G is addable when G + e is still planar; add(G)
is the set of these and add(n, m) the minimum of |add(G)| over P(n, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .canon import graph_classes
from .errors import BoundExceeded, EmptyClass, max_n
from .graphs import LabeledGraph, norm_edge
from .planarity import is_planar


def max_planar_edges(n: int) -> int:
    return n * (n - 1) // 2 if n < 3 else 3 * n - 6


@dataclass(frozen=True)
class AddableSet:
    host: LabeledGraph
    nonedges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.nonedges)


@dataclass(frozen=True)
class MinAddCertificate:
    n: int
    m: int
    value: int
    witness: LabeledGraph


@dataclass(frozen=True)
class SpineParams:
    core: int              # triangulation vertices: 2 base vertices plus a path
    inserted: int = 0      # new vertices subdividing spine lines
    isolated: int = 0
    extra_edge: bool = False   # edge from a new vertex to a base vertex

    def __post_init__(self) -> None:
        if self.core < 4:
            raise ValueError("core must be at least 4")
        if self.inserted < 0 or self.isolated < 0:
            raise ValueError("inserted and isolated must be non-negative")
        if self.extra_edge and self.inserted == 0:
            raise ValueError("the extra edge needs an inserted vertex")

    @property
    def spine_lines(self) -> int:
        return self.core - 2

    @property
    def n(self) -> int:
        return self.core + self.inserted + self.isolated

    @property
    def m(self) -> int:
        return 3 * self.core - 6 + self.inserted + int(self.extra_edge)


def addable_set(g: LabeledGraph) -> AddableSet:
    if not is_planar(g):
        raise ValueError("addable_set needs a planar graph")
    out = frozenset(e for e in g.non_edges() if is_planar(g.add_edge(*e)))
    return AddableSet(g, out)


def lower_bound_add(n: int, m: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    best = 0
    if m < n:
        best = max(best, math.ceil((n + m) * (n - m - 1) / 2))
    if n >= 6 and m >= 8:
        best = max(best, math.ceil(3 * (3 * n - 6 - m) / 2))
    return best


def planar_classes(n: int, m: int | None = None) -> list[LabeledGraph]:
    return [g for g in graph_classes(n) if (m is None or g.m == m) and is_planar(g)]


def min_addable(n: int, m: int) -> MinAddCertificate:
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if m > max_planar_edges(n):
        raise EmptyClass(f"P({n},{m}) is empty")
    if n > max_n():
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {max_n()} (set PLANARLAB_MAX_N)")
    best = None
    for g in planar_classes(n, m):
        k = len(addable_set(g))
        if best is None or k < best[0]:
            best = (k, g)
    if best is None:  # pragma: no cover - every 0 <= m <= 3n-6 is realisable
        raise EmptyClass(f"P({n},{m}) is empty")
    return MinAddCertificate(n, m, best[0], best[1])


def spine_params_for(n: int, m: int) -> SpineParams:
    """The m >= 2n-3 recipe: floor((m-n)/2)+3 core vertices, the rest on spine lines."""
    if not (2 * n - 3 <= m <= 3 * n - 6) or n < 4:
        raise ValueError("recipe needs n >= 4 and 2n-3 <= m <= 3n-6")
    core = (m - n) // 2 + 3
    inserted = -(-(3 * n - m) // 2) - 3
    return SpineParams(core, inserted, 0, (m - n) % 2 == 1)


def build_spine_graph(p: SpineParams) -> LabeledGraph:
    """Base vertices 1, 2; path 3..core each joined to both; then new vertices."""
    k = p.core - 2
    path = list(range(3, 3 + k))
    edges = [(1, 2)]
    edges += [(path[i], path[i + 1]) for i in range(k - 1)]
    edges += [(b, c) for c in path for b in (1, 2)]
    # spine lines: path edges first, the base edge last
    lines = [(path[i], path[i + 1]) for i in range(k - 1)] + [(1, 2)]
    loads: list[list[int]] = [[] for _ in lines]
    nxt = p.core + 1
    for j in range(p.inserted):
        loads[j % len(lines)].append(nxt)
        nxt += 1
    for (x, y), new in zip(lines, loads):
        if not new:
            continue
        edges.remove(norm_edge(x, y))
        chain = [x] + new + [y]
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    if p.extra_edge:
        first = next((new for (x, y), new in zip(lines, loads) if new and (x, y) != (1, 2)), None)
        if first is None:
            raise ValueError("no new vertex on a non-base spine line for the extra edge")
        edges.append((first[0], 1))
    return LabeledGraph.from_edges(p.n, edges)


def spine_bound(n: int, m: int) -> int:
    return math.ceil(3 * (3 * n - 6 - m) / 2)
