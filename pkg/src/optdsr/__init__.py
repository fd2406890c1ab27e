"""Optimization variant of dominating set reconfiguration under TAR(k)."""

from .graph import (
    Graph,
    closed_neighborhood,
    closed_neighborhood_set,
    degeneracy,
    is_dominating,
    is_minimal,
    is_vertex_cover,
    min_vertex_cover,
    private_neighbors,
)
from .tar import Instance, Move, MoveKind, Solution, apply_move, validate_sequence
from .preprocess import classify, instance_from_dominating_set_problem
from .oracle import VcrInstance, oracle_solve, reachable_sets, vcr_oracle_solve
from .kernel import domination_core, exists_small_ds, fpt_ds_solve, reduce_r1
from .vc import fpt_vc_solve, special_neighbors
from .classes import build_cotree, canonical_ds_cograph, canonical_ds_interval, canonical_ds_tree, class_solve

__version__ = "0.1.0"

__all__ = [
    "Graph", "closed_neighborhood", "closed_neighborhood_set", "degeneracy", "is_dominating",
    "is_minimal", "is_vertex_cover", "min_vertex_cover", "private_neighbors",
    "Instance", "Move", "MoveKind", "Solution", "apply_move", "validate_sequence",
    "classify", "instance_from_dominating_set_problem",
    "VcrInstance", "oracle_solve", "reachable_sets", "vcr_oracle_solve",
    "domination_core", "exists_small_ds", "fpt_ds_solve", "reduce_r1",
    "fpt_vc_solve", "special_neighbors",
    "build_cotree", "canonical_ds_cograph", "canonical_ds_interval", "canonical_ds_tree",
    "class_solve",
]
