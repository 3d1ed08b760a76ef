"""Maximum matching in general graphs (Edmonds' blossom algorithm, O(V^3))."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graphs import LabeledGraph


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]

    def size(self) -> int:
        return len(self.pairs)


def max_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Mate array over vertices 0..n-1 (-1 = unmatched)."""
    mate = [-1] * n
    for root in range(n):
        if mate[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        blossom = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        found = -1
        while q and found == -1:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        found = to
                        break
                    used[mate[to]] = True
                    q.append(mate[to])
        v = found
        while v != -1:
            pv = parent[v]
            ppv = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = ppv
    return mate


def perfect_matching(g: LabeledGraph) -> Matching | None:
    """A perfect matching of g, or None."""
    if g.n % 2:
        return None
    adj = [sorted(w - 1 for w in g.adj[v]) for v in range(1, g.n + 1)]
    mate = max_matching(g.n, adj)
    if any(x == -1 for x in mate):
        return None
    return Matching(frozenset((i + 1, mate[i] + 1) for i in range(g.n) if i < mate[i]))
