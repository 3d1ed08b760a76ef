"""Exhaustive planarity over all labeled graphs on n <= 8 vertices.

Independent of the path-addition embedder: list every labeled subdivision
of K5 and K3,3 that fits on n vertices as an edge mask, then close upward
over supersets.  By Kuratowski's theorem the closed set is exactly the
non-planar graphs.  Masks use the graph6 bit order of ``pairs_in_order``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .graphs import pair_index

MAX_TABLE_N = 8


def _subdivisions(base_edges: list[tuple[int, int]], branch: tuple[int, ...], spare: list[int]):
    """Masks of all subdivisions of the base graph placed on `branch`."""
    out = set()
    ne = len(base_edges)
    for k in range(len(spare) + 1):
        for extra in combinations(spare, k):
            for ordering in permutations(extra):
                # cut the ordering into ne (possibly empty) consecutive runs
                for cuts in combinations(range(k + ne - 1), ne - 1):
                    runs, prev, idx = [], -1, 0
                    bounds = list(cuts) + [k + ne - 1]
                    for c in bounds:
                        ln = c - prev - 1
                        runs.append(ordering[idx:idx + ln])
                        idx += ln
                        prev = c
                    mask = 0
                    for (a, b), run in zip(base_edges, runs):
                        path = [branch[a]] + list(run) + [branch[b]]
                        for x, y in zip(path, path[1:]):
                            mask |= 1 << pair_index(x, y)
                    out.add(mask)
    return out


@lru_cache(maxsize=None)
def kuratowski_masks(n: int) -> tuple[int, ...]:
    verts = list(range(1, n + 1))
    masks: set[int] = set()
    k5 = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    for br in combinations(verts, 5):
        spare = [v for v in verts if v not in br]
        masks |= _subdivisions(k5, br, spare)
    for six in combinations(verts, 6):
        spare = [v for v in verts if v not in six]
        for left in combinations(six, 3):
            if six[0] not in left:
                continue
            right = tuple(v for v in six if v not in left)
            masks |= _subdivisions(k33, left + right, spare)
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def planar_table(n: int) -> np.ndarray:
    """Boolean array over all 2^C(n,2) edge masks: True iff planar."""
    if n > MAX_TABLE_N:
        raise ValueError(f"planarity table bound exceeded: n={n} > {MAX_TABLE_N}")
    ne = n * (n - 1) // 2
    bad = np.zeros(1 << ne, dtype=bool)
    for m in kuratowski_masks(n):
        bad[m] = True
    for b in range(ne):
        view = bad.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    out = ~bad
    out.flags.writeable = False
    return out


def planar_masks(n: int) -> np.ndarray:
    """Sorted uint32 array of the planar edge masks on n labeled vertices."""
    return np.flatnonzero(planar_table(n)).astype(np.uint32)


def incidence_masks(n: int) -> list[int]:
    """incidence_masks(n)[v-1] has the bits of all pairs containing v."""
    out = []
    for v in range(1, n + 1):
        m = 0
        for w in range(1, n + 1):
            if w != v:
                m |= 1 << pair_index(v, w)
        out.append(m)
    return out


def degree_matrix(n: int, masks: np.ndarray) -> np.ndarray:
    """(len(masks), n) degree array."""
    out = np.empty((len(masks), n), dtype=np.uint8)
    for v, inc in enumerate(incidence_masks(n)):
        out[:, v] = np.bitwise_count(masks & np.uint32(inc))
    return out


def component_labels(n: int, masks: np.ndarray) -> np.ndarray:
    """Label propagation: label[:, v] = least vertex index in v's component."""
    lab = np.tile(np.arange(n, dtype=np.uint8), (len(masks), 1))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for _ in range(max(n - 1, 0)):
        changed = False
        for k, (i, j) in enumerate(pairs):
            has = (masks >> np.uint32(k)) & np.uint32(1)
            sel = has.astype(bool)
            lo = np.minimum(lab[:, i], lab[:, j])
            upd = sel & ((lab[:, i] != lo) | (lab[:, j] != lo))
            if upd.any():
                changed = True
                lab[upd, i] = lo[upd]
                lab[upd, j] = lo[upd]
        if not changed:
            break
    return lab


def component_counts(n: int, masks: np.ndarray) -> np.ndarray:
    if n == 0:
        return np.zeros(len(masks), dtype=np.uint8)
    lab = component_labels(n, masks)
    return (lab == np.arange(n, dtype=np.uint8)).sum(axis=1).astype(np.uint8)

