"""Exact normalized volumes of flow polytopes of directed multigraphs.

Four independent evaluations of the same integer: reduction-tree leaf
counting, triangular-array counting, lattice-flow counting, and constant
terms of truncated Laurent expansions, plus the closed-form products and
bijections that tie them together.
"""

from .arrays import count_a, count_b, count_btilde
from .catalanotope import f_closed, f_recurrence, k_set
from .ctlaurent import ct_volume, stability_check
from .errors import (
    FlowvolError,
    GraphFormatError,
    MultiplicityViolation,
    NodeCapExceeded,
    TruncationUnstable,
)
from .families import complete, cry_graph, multipath, narayana_family, path, rary_graph
from .formulas import catalan, cry_product, kirillov_alternate, narayana, pmn_product, rary_count
from .kostant import kostant, lidskii_vector, volume_via_kostant
from .multigraph import Multigraph, indegree_profile, restrict, tilde_extend
from .reduction import inseq_algorithm1, inseq_parallel, leaf_count, reduce_pair

__version__ = "0.1.0"

__all__ = [
    "Multigraph",
    "FlowvolError",
    "GraphFormatError",
    "MultiplicityViolation",
    "NodeCapExceeded",
    "TruncationUnstable",
    "catalan",
    "complete",
    "count_a",
    "count_b",
    "count_btilde",
    "cry_graph",
    "cry_product",
    "ct_volume",
    "f_closed",
    "f_recurrence",
    "indegree_profile",
    "inseq_algorithm1",
    "inseq_parallel",
    "k_set",
    "kirillov_alternate",
    "kostant",
    "leaf_count",
    "lidskii_vector",
    "multipath",
    "narayana",
    "narayana_family",
    "path",
    "pmn_product",
    "rary_count",
    "rary_graph",
    "reduce_pair",
    "restrict",
    "stability_check",
    "tilde_extend",
    "volume_via_kostant",
]
