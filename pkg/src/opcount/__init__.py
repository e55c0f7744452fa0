"""Exact counting and verification toolkit for maximal outerplanar graphs.

Counts independent sets and k-dominating sets (by brute force and by
dynamic programming over the weak dual tree), enumerates triangulations
and free trees, and machine-checks the structural inequalities relating
the two counts.
"""

from .graph import (
    Graph,
    GraphError,
    Graph6Error,
    VertexConstraint,
    constrain,
    graph_from_graph6,
    graph_to_graph6,
)
from .mop import DualTree, Mop, MopError, MopPartition
from .oracle import (
    DomProfile,
    ISProfile,
    OracleError,
    count_is,
    count_kds,
    count_kds_all,
    dom_profile,
    dom_profile_of,
    is_from_profiles,
    is_profile,
    is_profile_of,
    kds_from_profiles,
    oracle_ceiling,
)
from .dp import count_is_fast, count_kds_fast, count_on_tree
from .generate import (
    GenerationError,
    enumerate_free_trees,
    enumerate_mops,
    enumerate_mops_canonical,
    free_tree_counts,
    random_mop,
    random_outerplanar_from_mop,
    rng_for,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "Graph6Error", "VertexConstraint", "constrain",
    "graph_from_graph6", "graph_to_graph6",
    "DualTree", "Mop", "MopError", "MopPartition",
    "DomProfile", "ISProfile", "OracleError",
    "count_is", "count_kds", "count_kds_all",
    "dom_profile", "dom_profile_of", "is_from_profiles", "is_profile",
    "is_profile_of", "kds_from_profiles", "oracle_ceiling",
    "count_is_fast", "count_kds_fast", "count_on_tree",
    "GenerationError", "enumerate_free_trees", "enumerate_mops",
    "enumerate_mops_canonical", "free_tree_counts", "random_mop",
    "random_outerplanar_from_mop", "rng_for",
]
