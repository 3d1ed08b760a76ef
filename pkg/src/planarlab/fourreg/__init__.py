"""Deciding whether a planar graph lies in a 4-regular planar graph."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import PlanarMultigraph
from ..planarity import RotationEmbedding, embed
from .algorithm import (
    DiscrepancyMap,
    FourRegResult,
    SatisfyingWitness,
    UnsupportedInstance,
    discrepancy_satisfiable,
    four_embeddable,
    is_four_embeddable,
    satisfy_discrepancy,
)
from .gadgets import l3_gadget, l5_gadget, regular_supergraph, validate_regular, witness_to_simple
from .oracle import brute_force_oracle
from .pieces import TYPE_SUM, Piece, red_graph
from .solver import brute_small, lemma2, witness_ok
from .stage4 import Step
from .stage4 import stage4_step as _stage4_step


@dataclass(frozen=True)
class Augmentation:
    """Edge types (A/B/C/D per base edge id) and f on the base vertices."""

    base: PlanarMultigraph
    etypes: tuple[str, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.etypes) != self.base.m or len(self.f) != self.base.n:
            raise ValueError("augmentation sizes do not match the base graph")
        if any(t not in TYPE_SUM for t in self.etypes):
            raise ValueError("edge types must be A, B, C or D")
        if any(u == v for u, v in self.base.edges):
            raise ValueError("augmentation bases are loopless")
        self.piece().check()

    @classmethod
    def trivial(cls, base: PlanarMultigraph, f) -> "Augmentation":
        return cls(base, ("A",) * base.m, tuple(f))

    def piece(self) -> Piece:
        n = self.base.n
        return Piece(tuple(range(1, n + 1)), dict(enumerate(self.base.edges)),
                     dict(enumerate(self.etypes)), {v: self.f[v - 1] for v in range(1, n + 1)})

    @property
    def edge_map(self) -> dict[int, tuple[int, ...]]:
        """Base edge id -> placed red vertices (empty for Type A)."""
        return red_graph(self.piece(), self.base.n + 1).parts

    @property
    def red(self) -> PlanarMultigraph:
        r = red_graph(self.piece(), self.base.n + 1)
        return PlanarMultigraph.from_edges(len(r.verts), r.edges)

    @property
    def red_f(self) -> DiscrepancyMap:
        r = red_graph(self.piece(), self.base.n + 1)
        red = PlanarMultigraph.from_edges(len(r.verts), r.edges)
        return DiscrepancyMap(red, tuple(r.f[v] for v in range(1, len(r.verts) + 1)))


def _to_witness(n_red: int, edges) -> SatisfyingWitness:
    g = PlanarMultigraph.from_edges(n_red, edges)
    e = embed(g)
    if not isinstance(e, RotationEmbedding):  # pragma: no cover
        raise AssertionError("witness is not planar")
    return SatisfyingWitness(g, e)


def lemma2_satisfiable(b: PlanarMultigraph, a: Augmentation) -> SatisfyingWitness | None:
    """Satisfy (R, f_R) for a base without 2-vertex-cuts; witness on V(R)."""
    from ..connectivity import two_cut_scan

    if a.base != b:
        raise ValueError("augmentation is for another base graph")
    p = a.piece()
    if b.n >= 2 and two_cut_scan(list(p.verts), p.edge_list()) is not None:
        raise ValueError("base graph has a 2-vertex-cut")
    out = lemma2(p)
    if out is None:
        return None
    return _to_witness(a.red.n, out)


def stage4_step(b: PlanarMultigraph, a: Augmentation) -> Step:
    from ..connectivity import block_structure, components_of

    vs = list(range(1, b.n + 1))
    if a.base != b:
        raise ValueError("augmentation is for another base graph")
    if len(components_of(vs, b.edges)) != 1 or block_structure(vs, b.edges).cut_vertices:
        raise ValueError("stage4_step needs a connected base without cut vertices")
    return _stage4_step(a.piece())


__all__ = [
    "Augmentation", "DiscrepancyMap", "FourRegResult", "SatisfyingWitness", "Step",
    "UnsupportedInstance", "brute_force_oracle", "brute_small", "discrepancy_satisfiable",
    "four_embeddable", "is_four_embeddable", "l3_gadget", "l5_gadget", "lemma2",
    "lemma2_satisfiable", "regular_supergraph", "satisfy_discrepancy", "stage4_step",
    "validate_regular", "witness_ok", "witness_to_simple",
]
