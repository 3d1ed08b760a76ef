"""Brute-force 4-regular completion, independent of the Stage machinery.

A 4-regular planar multigraph M on V(h) containing h has a planar simple
support, and (for n >= 3) that support lies in some maximal planar graph
T on the same vertex set.  Conversely any multiset of T-edges and loops is
planar.  So h completes iff for some triangulation T containing supp(h),
the residual degrees 4 - deg can be met exactly by T-edges and loops.
Planarity here is networkx's, not ours.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx
import numpy as np

from ..graphs import LabeledGraph, PlanarMultigraph, pair_index, pairs_in_order

ORACLE_MAX_N = 7


@lru_cache(maxsize=None)
def maximal_planar_masks(n: int) -> np.ndarray:
    """Edge masks of all labeled maximal planar graphs on n vertices."""
    pairs = pairs_in_order(n)
    if n <= 2:
        return np.array([(1 << len(pairs)) - 1], dtype=np.uint64)
    target = 3 * n - 6
    out = []
    # grow from planar graphs on fewer edges would be faster; this is cached
    for missing in combinations(range(len(pairs)), len(pairs) - target):
        drop = set(missing)
        g = nx.Graph()
        g.add_nodes_from(range(1, n + 1))
        g.add_edges_from(p for k, p in enumerate(pairs) if k not in drop)
        if nx.check_planarity(g)[0]:
            out.append(sum(1 << k for k in range(len(pairs)) if k not in drop))
    return np.array(out, dtype=np.uint64)


def _feasible(n: int, nbrs: list[list[int]], res: tuple[int, ...], memo: dict) -> bool:
    if res in memo:
        return memo[res]
    v = next((i for i, r in enumerate(res) if r > 0), None)
    if v is None:
        return True
    ok = False
    r = list(res)
    if r[v] >= 2:
        r[v] -= 2
        ok = _feasible(n, nbrs, tuple(r), memo)
        r[v] += 2
    if not ok:
        for w in nbrs[v]:
            if r[w] > 0:
                r[v] -= 1
                r[w] -= 1
                ok = _feasible(n, nbrs, tuple(r), memo)
                r[v] += 1
                r[w] += 1
                if ok:
                    break
    memo[res] = ok
    return ok


def brute_force_oracle(h: PlanarMultigraph | LabeledGraph) -> bool:
    """Is h contained in a 4-regular planar multigraph on V(h)?"""
    if isinstance(h, LabeledGraph):
        h = h.to_multigraph()
    return brute_force_satisfiable(h, tuple(4 - d for d in h.degrees))


def brute_force_satisfiable(h: PlanarMultigraph, res: tuple[int, ...]) -> bool:
    """Can exactly res(v) new edge-ends be added at each v keeping planarity?"""
    n = h.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle size bound exceeded: n={n} > {ORACLE_MAX_N}")
    res = tuple(res)
    if any(r < 0 for r in res) or sum(res) % 2:
        return False
    supp = h.support()
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(supp.edges)
    if not nx.check_planarity(g)[0]:
        return False
    smask = 0
    for u, v in supp.edges:
        smask |= 1 << pair_index(u, v)
    tris = maximal_planar_masks(n)
    hits = tris[(tris & np.uint64(smask)) == np.uint64(smask)]
    pairs = pairs_in_order(n)
    for t in hits:
        t = int(t)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for k, (a, b) in enumerate(pairs):
            if t >> k & 1:
                nbrs[a - 1].append(b - 1)
                nbrs[b - 1].append(a - 1)
        if _feasible(n, nbrs, res, {}):
            return True
    return False
