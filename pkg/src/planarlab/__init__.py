"""Planar-graph combinatorics: addable edges, appearance detectors,
exhaustive small-n censuses, and 4-regular planar embeddability."""

from __future__ import annotations

from .addable import (
    AddableSet,
    MinAddCertificate,
    SpineParams,
    addable_set,
    build_spine_graph,
    lower_bound_add,
    min_addable,
    spine_params_for,
)
from .canon import canonical_code, graph_classes, is_isomorphic, order_preserving_induced_copies
from .census import (
    CensusRow,
    ClassConstraints,
    Predicate,
    census_row,
    enumerate_class,
    kappa_dominance_check,
    probability,
    trend_tables,
)
from .connectivity import ConnectivityReport, decompose, minimal_two_cut
from .detectors import (
    AppearanceRecord,
    StructureCensus,
    find_appearances,
    find_appearances_filtered,
    find_six_appearances,
    find_two_appearances,
    max_disjoint_family,
    structure_census,
)
from .errors import BoundExceeded, EmptyClass
from .fourreg import brute_force_oracle, is_four_embeddable, regular_supergraph
from .graphs import LabeledGraph, PlanarMultigraph, from_graph6, to_graph6
from .matching import Matching, perfect_matching
from .planarity import NonPlanarWitness, RotationEmbedding, embed, faces, is_planar

__version__ = "0.1.0"

__all__ = [
    "AddableSet", "AppearanceRecord", "BoundExceeded", "CensusRow", "ClassConstraints",
    "ConnectivityReport", "EmptyClass", "LabeledGraph", "Matching", "MinAddCertificate",
    "NonPlanarWitness", "PlanarMultigraph", "Predicate", "RotationEmbedding", "SpineParams",
    "StructureCensus", "addable_set", "brute_force_oracle", "build_spine_graph",
    "canonical_code", "census_row", "decompose", "embed", "enumerate_class", "faces",
    "find_appearances", "find_appearances_filtered", "find_six_appearances",
    "find_two_appearances", "from_graph6", "graph_classes", "is_four_embeddable",
    "is_isomorphic", "is_planar", "kappa_dominance_check", "lower_bound_add",
    "max_disjoint_family", "min_addable", "minimal_two_cut", "order_preserving_induced_copies",
    "perfect_matching", "probability", "regular_supergraph", "spine_params_for",
    "structure_census", "to_graph6", "trend_tables",
]
