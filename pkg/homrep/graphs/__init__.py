from homrep.graphs.canonical import CanonicalCode, canonical, decode, isomorphic
from homrep.graphs.enumeration import enumerate_labeled, iter_labeled, iter_level
from homrep.graphs.labeled import (
    LabeledGraph,
    add_labeled_isolated,
    disjoint_union,
    glue,
    label_first_nodes,
    relabel,
    restrict_labels,
    single_edge_graph,
    unit_graph,
    unlabel,
)
from homrep.graphs.multigraph import (
    MultiGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_multigraph,
)

__all__ = [
    "CanonicalCode", "LabeledGraph", "MultiGraph",
    "add_labeled_isolated", "canonical", "complete_graph", "cycle_graph",
    "decode", "disjoint_union", "empty_graph", "enumerate_labeled", "glue",
    "isomorphic", "iter_labeled", "iter_level", "label_first_nodes", "path_graph", "random_multigraph",
    "relabel", "restrict_labels", "single_edge_graph", "unit_graph", "unlabel",
]
