"""Exhaustive censuses of labeled planar graph classes at small n.

Every labeled graph on 1..n is an edge mask; the planar ones come from the
Kuratowski table.  Degree windows, edge counts and all predicates are
evaluated on whole mask arrays at once.  Probabilities are exact Fractions.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Sequence

import numpy as np

from .errors import BoundExceeded, EmptyClass, max_n
from .graphs import LabeledGraph, complete_graph, cycle_graph, from_graph6, pair_index, \
    pairs_in_order, path_graph, star_graph, to_graph6
from .planar_table import MAX_TABLE_N, component_labels, degree_matrix, planar_masks

MAX_PATTERN = 7
SLACK = 1e-12
GAMMA_L = 27.2268       # labeled planar growth constant, quoted as a target only


@dataclass(frozen=True)
class ClassConstraints:
    """P(n, d1, d2, D1, D2), optionally sliced to m edges; None means unconstrained."""

    n: int
    m: int | None = None
    d1: int = 0
    d2: int | None = None
    D1: int = 0
    D2: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.d2 is not None and self.d1 > self.d2:
            raise ValueError("need d1 <= d2")
        if self.D2 is not None and self.D1 > self.D2:
            raise ValueError("need D1 <= D2")
        if self.m is not None and self.m < 0:
            raise ValueError("m must be non-negative")

    @property
    def unconstrained(self) -> bool:
        return self.m is None and self.d1 == 0 and self.d2 is None and self.D1 == 0 and self.D2 is None


@dataclass(frozen=True)
class Predicate:
    """connected | kappa_leq(l) | has_component_iso(H) | has_subgraph_iso(H) | has_induced_order_preserving(H)"""

    kind: str
    arg: int | LabeledGraph | None = None

    KINDS = ("connected", "kappa_leq", "has_component_iso", "has_subgraph_iso",
             "has_induced_order_preserving")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown predicate {self.kind!r}")
        if self.kind == "kappa_leq" and not isinstance(self.arg, int):
            raise ValueError("kappa_leq needs an integer")
        if self.kind.startswith("has_"):
            if not isinstance(self.arg, LabeledGraph):
                raise ValueError(f"{self.kind} needs a pattern graph")
            if not 1 <= self.arg.n <= MAX_PATTERN:
                raise ValueError(f"pattern order must be in 1..{MAX_PATTERN}")

    @property
    def name(self) -> str:
        if self.arg is None:
            return self.kind
        if isinstance(self.arg, LabeledGraph):
            return f"{self.kind}:{to_graph6(self.arg)}"
        return f"{self.kind}:{self.arg}"

    @classmethod
    def parse(cls, text: str) -> "Predicate":
        kind, _, arg = text.partition(":")
        if kind == "connected":
            return cls(kind)
        if kind == "kappa_leq":
            return cls(kind, int(arg))
        return cls(kind, from_graph6(arg))


@dataclass(frozen=True)
class CensusRow:
    constraints: ClassConstraints
    total: int
    connected: int
    kappa_histogram: dict[int, int] = field(default_factory=dict)
    predicate_counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        c = self.constraints
        return {
            "n": c.n, "m": c.m, "d1": c.d1, "d2": c.d2, "D1": c.D1, "D2": c.D2,
            "total": self.total, "connected": self.connected,
            "kappa_histogram": {str(k): v for k, v in sorted(self.kappa_histogram.items())},
            "predicate_counts": dict(sorted(self.predicate_counts.items())),
        }


# ---------------------------------------------------------------- enumeration


def check_bound(n: int, allow_large: bool = False) -> None:
    if n > MAX_TABLE_N:
        raise BoundExceeded(f"n={n} is beyond the planarity table ({MAX_TABLE_N})")
    if n > max_n() and not allow_large:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {max_n()} "
                            "(set PLANARLAB_MAX_N or pass the long-running flag)")


@lru_cache(maxsize=None)
def _planar(n: int) -> tuple[np.ndarray, np.ndarray]:
    masks = planar_masks(n)
    return masks, np.bitwise_count(masks).astype(np.uint8)


def shard_range(n: int, shard: int, shards: int) -> tuple[int, int]:
    """Contiguous mask range of one shard; with shards a power of two this fixes the high bits."""
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("need 0 <= shard < shards")
    size = 1 << (n * (n - 1) // 2)
    return shard * size // shards, (shard + 1) * size // shards


def class_masks(c: ClassConstraints, shard: int = 0, shards: int = 1,
                allow_large: bool = False) -> np.ndarray:
    """Sorted edge masks of every labeled member of the class (in one shard)."""
    check_bound(c.n, allow_large)
    masks, ms = _planar(c.n)
    lo, hi = shard_range(c.n, shard, shards)
    a, b = np.searchsorted(masks, [lo, hi])
    masks, ms = masks[a:b], ms[a:b]
    if c.m is not None:
        keep = ms == c.m
        masks = masks[keep]
    if not (c.d1 == 0 and c.d2 is None and c.D1 == 0 and c.D2 is None):
        deg = degree_matrix(c.n, masks)
        lo_d, hi_d = deg.min(axis=1), deg.max(axis=1)
        keep = (lo_d >= c.d1) & (hi_d >= c.D1)
        if c.d2 is not None:
            keep &= lo_d <= c.d2
        if c.D2 is not None:
            keep &= hi_d <= c.D2
        masks = masks[keep]
    return masks


def enumerate_class(c: ClassConstraints, visitor: Callable[[int], None] | None = None,
                    shard: int = 0, shards: int = 1, allow_large: bool = False) -> int:
    """Visit every labeled graph of the class once (as an edge mask); return the count."""
    masks = class_masks(c, shard, shards, allow_large)
    if visitor is not None:
        for x in masks.tolist():
            visitor(x)
    return len(masks)


def class_graphs(c: ClassConstraints) -> list[LabeledGraph]:
    return [LabeledGraph.from_mask(c.n, x) for x in class_masks(c).tolist()]


# ---------------------------------------------------------------- predicates


def _submasks(n: int, masks: np.ndarray, sub: Sequence[int]) -> np.ndarray:
    """Edge masks of the induced subgraphs on `sub`, relabeled increasingly."""
    out = np.zeros(len(masks), dtype=np.uint32)
    for k, (a, b) in enumerate(pairs_in_order(len(sub))):
        bit = (masks >> np.uint32(pair_index(sub[a - 1], sub[b - 1]))) & np.uint32(1)
        out |= bit << np.uint32(k)
    return out


@lru_cache(maxsize=None)
def _iso_table(h: LabeledGraph) -> np.ndarray:
    """Over all edge masks on |h| vertices: True iff the graph is isomorphic to h."""
    k = h.n
    tab = np.zeros(1 << (k * (k - 1) // 2), dtype=bool)
    for perm in permutations(range(1, k + 1)):
        tab[h.relabel(dict(zip(range(1, k + 1), perm))).mask] = True
    return tab


@lru_cache(maxsize=None)
def _contains_table(h: LabeledGraph) -> np.ndarray:
    """True iff the graph has a spanning subgraph isomorphic to h (upward closure)."""
    tab = _iso_table(h).copy()
    ne = h.n * (h.n - 1) // 2
    for b in range(ne):
        view = tab.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return tab


def evaluate(p: Predicate, n: int, masks: np.ndarray, kappa: np.ndarray,
             labels: np.ndarray | None = None) -> np.ndarray:
    """Boolean array: does each graph satisfy the predicate?"""
    if p.kind == "connected":
        return kappa == 1
    if p.kind == "kappa_leq":
        return kappa <= p.arg
    h: LabeledGraph = p.arg  # type: ignore[assignment]
    k = h.n
    out = np.zeros(len(masks), dtype=bool)
    if k > n:
        return out
    if p.kind == "has_induced_order_preserving":
        for sub in combinations(range(1, n + 1), k):
            out |= _submasks(n, masks, sub) == np.uint32(h.mask)
        return out
    if p.kind == "has_subgraph_iso":
        tab = _contains_table(h)
        for sub in combinations(range(1, n + 1), k):
            out |= tab[_submasks(n, masks, sub)]
        return out
    # component isomorphic to h: sub is a whole component and induces a copy of h
    if labels is None:
        labels = component_labels(n, masks)
    tab = _iso_table(h)
    size = np.stack([(labels == labels[:, [v]]).sum(axis=1) for v in range(n)], axis=1)
    for sub in combinations(range(1, n + 1), k):
        idx = [v - 1 for v in sub]
        same = (labels[:, idx] == labels[:, [idx[0]]]).all(axis=1) & (size[:, idx[0]] == k)
        out |= same & tab[_submasks(n, masks, sub)]
    return out


def census_row(c: ClassConstraints, predicates: Sequence[Predicate] = (), shard: int = 0,
               shards: int = 1, allow_large: bool = False) -> CensusRow:
    masks = class_masks(c, shard, shards, allow_large)
    labels = component_labels(c.n, masks)
    kappa = (labels == np.arange(c.n, dtype=np.uint8)).sum(axis=1)
    hist = {int(k): int(v) for k, v in zip(*np.unique(kappa, return_counts=True))}
    counts = {p.name: int(evaluate(p, c.n, masks, kappa, labels).sum()) for p in predicates}
    return CensusRow(c, len(masks), hist.get(1, 0), hist, counts)


def merge_rows(rows: Sequence[CensusRow]) -> CensusRow:
    if not rows:
        raise ValueError("nothing to merge")
    c = rows[0].constraints
    if any(r.constraints != c for r in rows):
        raise ValueError("rows describe different classes")
    hist: dict[int, int] = {}
    counts: dict[str, int] = {}
    for r in rows:
        for k, v in r.kappa_histogram.items():
            hist[k] = hist.get(k, 0) + v
        for k, v in r.predicate_counts.items():
            counts[k] = counts.get(k, 0) + v
    return CensusRow(c, sum(r.total for r in rows), sum(r.connected for r in rows),
                     dict(sorted(hist.items())), dict(sorted(counts.items())))


def probability(c: ClassConstraints, predicate: Predicate, allow_large: bool = False) -> Fraction:
    row = census_row(c, [predicate], allow_large=allow_large)
    if row.total == 0:
        raise EmptyClass(f"class {c} is empty")
    return Fraction(row.predicate_counts[predicate.name], row.total)


# ---------------------------------------------------------------- kappa inequalities


@dataclass(frozen=True)
class DominanceReport:
    n: int
    total: int
    kappa_histogram: dict[int, int]
    p_connected: Fraction
    mean_kappa: Fraction
    checks: tuple[tuple[str, float, float, bool], ...]   # (label, value, bound, ok)

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    @property
    def violations(self) -> list[tuple[str, float, float, bool]]:
        return [c for c in self.checks if not c[3]]


def poisson_cdf_shift(l: int) -> float:
    """P[1 + X <= l] for X ~ Poisson(1)."""
    return sum(math.exp(-1) / math.factorial(k) for k in range(l))


def kappa_dominance_check(n: int, allow_large: bool = False) -> DominanceReport:
    row = census_row(ClassConstraints(n), allow_large=allow_large)
    hist, total = row.kappa_histogram, row.total
    p_conn = Fraction(row.connected, total)
    mean = Fraction(sum(k * v for k, v in hist.items()), total)
    checks = [
        ("P[connected] >= 1/e", float(p_conn), math.exp(-1), float(p_conn) >= math.exp(-1) - SLACK),
        ("E[kappa] <= 2", float(mean), 2.0, mean <= 2),
    ]
    cum = 0
    for l in range(1, n + 1):
        cum += hist.get(l, 0)
        p = Fraction(cum, total)
        bound = poisson_cdf_shift(l)
        checks.append((f"P[kappa <= {l}] >= P[1+Po(1) <= {l}]", float(p), bound,
                       float(p) >= bound - SLACK))
    return DominanceReport(n, total, hist, p_conn, mean, tuple(checks))


# ---------------------------------------------------------------- trend tables

TABLES = ("component_table", "connectivity_table", "subgraph_table", "kappa_bounds")
COMPONENT_PATTERNS = (("K1", LabeledGraph(1)), ("K2", complete_graph(2)),
                      ("P3", path_graph(3)), ("K3", complete_graph(3)))
SUBGRAPH_PATTERNS = (("K3", complete_graph(3)), ("C4", cycle_graph(4)),
                     ("K1_3", star_graph(3)), ("K4", complete_graph(4)))


def _frac(num: int, den: int) -> str:
    f = Fraction(num, den)
    return f"{f.numerator}/{f.denominator}"


def _median(hist: dict[int, int], total: int) -> float:
    """Median of the kappa distribution (mean of the two middle values for even totals)."""
    def kth(k: int) -> int:
        acc = 0
        for v in sorted(hist):
            acc += hist[v]
            if acc > k:
                return v
        raise AssertionError
    if total % 2:
        return float(kth(total // 2))
    return (kth(total // 2 - 1) + kth(total // 2)) / 2


def trend_tables(n_max: int, which: str, allow_large: bool = False) -> str:
    """Exact finite-n probabilities as CSV, labeled as an empirical probe."""
    if which not in TABLES:
        raise ValueError(f"table must be one of {TABLES}")
    for n in range(1, n_max + 1):
        check_bound(n, allow_large)
    buf = io.StringIO()
    buf.write("# EMPIRICAL PROBE: exact probabilities over labeled planar graphs at small n;\n")
    buf.write("# no limiting or asymptotic statement is asserted by these numbers.\n")
    if which == "kappa_bounds":
        buf.write(f"# growth column targets the labeled planar growth constant {GAMMA_L}\n")
        buf.write("n,total,growth_root,p_connected,p_connected_float,mean_kappa,median_kappa\n")
        for n in range(1, n_max + 1):
            row = census_row(ClassConstraints(n), allow_large=allow_large)
            mean = Fraction(sum(k * v for k, v in row.kappa_histogram.items()), row.total)
            growth = (row.total / math.factorial(n)) ** (1 / n)
            buf.write(f"{n},{row.total},{growth:.6f},{_frac(row.connected, row.total)},"
                      f"{row.connected / row.total:.6f},{mean.numerator}/{mean.denominator},"
                      f"{_median(row.kappa_histogram, row.total)}\n")
        return buf.getvalue()
    pats: tuple = ()
    if which == "connectivity_table":
        buf.write("n,m,total,connected,p_connected,p_connected_float,median_kappa\n")
    else:
        pats = COMPONENT_PATTERNS if which == "component_table" else SUBGRAPH_PATTERNS
        kind = "has_component_iso" if which == "component_table" else "has_subgraph_iso"
        buf.write("n,m,total," + ",".join(f"p_{name}" for name, _ in pats) + "\n")
    for n in range(1, n_max + 1):
        top = n * (n - 1) // 2 if n < 3 else 3 * n - 6
        for m in range(top + 1):
            c = ClassConstraints(n, m)
            if which == "connectivity_table":
                row = census_row(c, allow_large=allow_large)
                buf.write(f"{n},{m},{row.total},{row.connected},{_frac(row.connected, row.total)},"
                          f"{row.connected / row.total:.6f},{_median(row.kappa_histogram, row.total)}\n")
            else:
                preds = [Predicate(kind, h) for _, h in pats]
                row = census_row(c, preds, allow_large=allow_large)
                cells = [_frac(row.predicate_counts[p.name], row.total) for p in preds]
                buf.write(f"{n},{m},{row.total}," + ",".join(cells) + "\n")
    return buf.getvalue()
