"""Seeded random planar graphs for the test harness and experiments.

Two samplers: an exact uniform draw from a small labeled class (via the
census masks), and a random greedy edge-insertion process for larger n.
Neither is meant to model the uniform random planar graph at scale.
"""

from __future__ import annotations

import random

from .census import ClassConstraints, class_masks
from .graphs import LabeledGraph, pairs_in_order
from .planarity import is_planar

DEFAULT_SEED = 20240601


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def uniform_from_class(c: ClassConstraints, rng: random.Random) -> LabeledGraph:
    masks = class_masks(c)
    if len(masks) == 0:
        raise ValueError(f"class {c} is empty")
    return LabeledGraph.from_mask(c.n, int(masks[rng.randrange(len(masks))]))


def greedy_planar(n: int, rng: random.Random, max_degree: int | None = None,
                  target_m: int | None = None) -> LabeledGraph:
    """Insert random pairs while planarity (and the degree cap) allow, up to target_m edges."""
    pairs = pairs_in_order(n)
    rng.shuffle(pairs)
    top = 3 * n - 6 if n >= 3 else n * (n - 1) // 2
    target = top if target_m is None else min(target_m, top)
    deg = [0] * (n + 1)
    g = LabeledGraph(n)
    for u, v in pairs:
        if g.m >= target:
            break
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        h = g.add_edge(u, v)
        if is_planar(h):
            g = h
            deg[u] += 1
            deg[v] += 1
    return g


def random_relabel(g: LabeledGraph, rng: random.Random) -> LabeledGraph:
    perm = list(range(1, g.n + 1))
    rng.shuffle(perm)
    return g.relabel(dict(zip(range(1, g.n + 1), perm)))
