"""Canonical labelling for small graphs and isomorphism-class generation.

canonical_code uses colour refinement followed by individualisation of the
first non-singleton cell, branching over its members; the code is the
least adjacency string over all leaves of the search tree.  Refinement is
label-invariant, so the minimum is an isomorphism invariant, and each leaf
is an actual relabelling, so equal codes imply isomorphism.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations

from .graphs import LabeledGraph, pairs_in_order

DEFAULT_CANON_BOUND = 10


def canon_bound() -> int:
    return int(os.environ.get("PLANARLAB_CANON_MAX_N", DEFAULT_CANON_BOUND))


def _refine(cells: list[list[int]], adj: list[set[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for k, c in enumerate(cells):
            for v in c:
                cell_of[v] = k
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {}
            for v in c:
                cnt = [0] * len(cells)
                for w in adj[v]:
                    cnt[cell_of[w]] += 1
                sig[v] = tuple(cnt)
            for s in sorted(set(sig.values())):
                new.append([v for v in c if sig[v] == s])
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_code(order: list[int], adj: list[set[int]]) -> int:
    n = len(order)
    code = 0
    for j in range(n):
        for i in range(j):
            code <<= 1
            # invert so that the min code lists edges first (stable tie order)
            if order[j] not in adj[order[i]]:
                code |= 1
    return code


def _search(cells, adj, best):
    cells = _refine(cells, adj)
    k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if k is None:
        code = _leaf_code([c[0] for c in cells], adj)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    # twins (equal open or closed neighbourhoods) are swapped by an
    # automorphism fixing the current partition, so one branch suffices
    tried: list[int] = []
    for v in cells[k]:
        if any(adj[v] - {u} == adj[u] - {v} for u in tried):
            continue
        tried.append(v)
        split = cells[:k] + [[v], [w for w in cells[k] if w != v]] + cells[k + 1:]
        _search(split, adj, best)


def canonical_int(n: int, adj: list[set[int]]) -> int:
    if n == 0:
        return 0
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(len(adj[v]), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    best = [None]
    _search(cells, adj, best)
    return best[0]


def canonical_code(g: LabeledGraph, bound: int | None = None) -> bytes:
    bound = canon_bound() if bound is None else bound
    if g.n > bound:
        raise ValueError(f"canonical_code bound exceeded: n={g.n} > {bound}")
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u - 1].add(v - 1)
        adj[v - 1].add(u - 1)
    c = canonical_int(g.n, adj)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + c.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: LabeledGraph) -> LabeledGraph:
    """The representative graph whose adjacency string is the canonical code."""
    code = canonical_code(g)
    n = code[0]
    c = int.from_bytes(code[1:], "big")
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(n):
        for i in range(j):
            if not (c >> k) & 1:
                edges.append((i + 1, j + 1))
            k -= 1
    return LabeledGraph.from_edges(n, edges)


def is_isomorphic(a: LabeledGraph, b: LabeledGraph) -> bool:
    return a.n == b.n and a.m == b.m and sorted(a.degrees) == sorted(b.degrees) \
        and canonical_code(a) == canonical_code(b)


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[LabeledGraph, ...]:
    """One canonical representative per isomorphism class on n vertices."""
    if n == 0:
        return (LabeledGraph(0),)
    if n == 1:
        return (LabeledGraph(1),)
    seen: dict[bytes, LabeledGraph] = {}
    for h in graph_classes(n - 1):
        base = list(h.edges)
        for k in range(n):
            for nb in combinations(range(1, n), k):
                g = LabeledGraph.from_edges(n, base + [(x, n) for x in nb])
                code = canonical_code(g)
                if code not in seen:
                    seen[code] = g
    return tuple(canonical_form(g) for _, g in sorted(seen.items()))


def order_preserving_induced_copies(h: LabeledGraph, g: LabeledGraph) -> list[tuple[int, ...]]:
    """All W with the increasing bijection 1..|h| -> W an isomorphism h -> g[W]."""
    k = h.n
    if k > g.n:
        return []
    hp = [(i, j) for i, j in pairs_in_order(k)]
    hset = h.edges
    out = []
    for w in combinations(range(1, g.n + 1), k):
        if all(((w[i - 1], w[j - 1]) in g.edges) == ((i, j) in hset) for i, j in hp):
            out.append(w)
    return out
