"""Exact two-path flows on an undirected cycle.

Thin re-export of the compiled extension; rationals cross the boundary as
"p" or "p/q" strings so nothing is rounded.
"""

from ._cycleflow import (
    ArcPath,
    Commodity,
    CycleFlowError,
    CycleInstance,
    DominanceWitness,
    FlowAssignment,
    __version__,
    check_violation,
    clockwise_path,
    configuration,
    counterexample_k3,
    edge_flows,
    parse_flow,
    parse_instance,
    path_dominates,
    path_flow,
    paths_of,
    search_grid,
    search_random,
    serialize_flow,
    serialize_instance,
    verify_random,
    witness_constructive,
    witnesses_bruteforce,
)

__all__ = [
    "ArcPath",
    "Commodity",
    "CycleFlowError",
    "CycleInstance",
    "DominanceWitness",
    "FlowAssignment",
    "__version__",
    "check_violation",
    "clockwise_path",
    "configuration",
    "counterexample_k3",
    "edge_flows",
    "parse_flow",
    "parse_instance",
    "path_dominates",
    "path_flow",
    "paths_of",
    "search_grid",
    "search_random",
    "serialize_flow",
    "serialize_instance",
    "verify_random",
    "witness_constructive",
    "witnesses_bruteforce",
]
