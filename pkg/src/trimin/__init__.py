"""Minimum number of triangles in a graph with n vertices and e edges.

Small-graph toolkit: Turán arithmetic, the extremal profile and construction
H*(n, e), the structured candidate families, limiting density curves, an
exhaustive oracle for n <= 9 and partition diagnostics.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .analyze import (
    PartitionAnalysis,
    check_partition_properties,
    kpartite_gap_bound,
    ls_identities,
    max_cut_partition,
)
from .canon import CanonicalForm, canonical_form, is_isomorphic
from .curves import g3_lambda, goodman_bound, sample_curves, sandwich_check
from .errors import TriminError
from .extremal import ExtremalProfile, build_h_star, extremal_profile, h_of, h_star_delta
from .families import FamilyId, enumerate_family, family_membership
from .graph import Graph, build_graph, count_cliques, count_triangles
from .graph6 import decode, encode
from .oracle import enumerate_graphs, g3_bruteforce, kpartite_min, local_search_upper, verify_conjecture
from .symmetrise import symmetrise_h0
from .turan import TuranSpec, c_compare, c_lambda, k_index, k_lambda, turan, turan_number

__all__ = [
    "CanonicalForm", "ExtremalProfile", "FamilyId", "Graph", "PartitionAnalysis", "TriminError",
    "TuranSpec", "build_graph", "build_h_star", "c_compare", "c_lambda", "canonical_form",
    "check_partition_properties", "count_cliques", "count_triangles", "decode", "encode",
    "enumerate_family", "enumerate_graphs", "extremal_profile", "family_membership",
    "g3_bruteforce", "g3_lambda", "goodman_bound", "h_of", "h_star_delta", "is_isomorphic",
    "k_index", "k_lambda", "kpartite_gap_bound", "kpartite_min", "local_search_upper",
    "ls_identities", "max_cut_partition", "sample_curves", "sandwich_check", "symmetrise_h0",
    "turan", "turan_number", "verify_conjecture",
]
