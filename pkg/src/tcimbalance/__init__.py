"""Exact imbalance minimisation for graphs with a known twin cover."""

from .dp import enumerate_reachable_specs, solve_xp
from .graph import (
    CliqueClass, CliqueInfo, Decomposition, Graph, SuccinctGraph, TwinCover,
    classify_clique, compress_to_succinct, expand_succinct, find_min_twin_cover,
    validate_twin_cover,
)
from .ilp import build_ilp, solve_fpt, solve_ilp_model
from .layout import (
    CleanPlacement, SpecPair, build_layout_from_placement, clique_total_and_excess,
    excess_closed_form, gamma, imbalance_from_spec, imbalance_of_layout, is_clean,
    spec_of_placement,
)
from .oracle import brute_force_all, brute_force_clean
from .succinct import (
    Certificate, iota, lower_bound, reduce_partition, solve_k1, verify_certificate,
)

__all__ = [
    "CleanPlacement", "Certificate", "CliqueClass", "CliqueInfo", "Decomposition",
    "Graph", "SpecPair", "SuccinctGraph", "TwinCover", "brute_force_all",
    "brute_force_clean", "build_ilp", "build_layout_from_placement", "classify_clique",
    "clique_total_and_excess", "compress_to_succinct", "enumerate_reachable_specs",
    "excess_closed_form", "expand_succinct", "find_min_twin_cover", "gamma",
    "imbalance_from_spec", "imbalance_of_layout", "iota", "is_clean", "lower_bound",
    "reduce_partition", "solve_fpt", "solve_ilp_model", "solve_k1", "solve_xp",
    "spec_of_placement", "validate_twin_cover", "verify_certificate",
]
