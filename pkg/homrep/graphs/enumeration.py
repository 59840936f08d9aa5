# enumeration.py

import logging
from itertools import islice

from homrep.graphs.canonical import canonical
from homrep.graphs.labeled import LabeledGraph
from homrep.graphs.multigraph import MultiGraph
from homrep.utilities.errors import ContractViolation

logger = logging.getLogger(__name__)


def _add_edge(g, u, v):
    graph = g.graph
    return LabeledGraph(MultiGraph.from_edges(graph.node_count, graph.edge_list() + [(u, v)]), g.labels)


def iter_level(labels, node_count, max_edges, multi=False):
    """
    Yield (edge_count, classes) for graphs with exactly `node_count` nodes and
    labels exactly `labels`, one isomorphism class per canonical code, sorted
    by code within each edge count.
    """
    labels = sorted(set(labels))
    if node_count < len(labels):
        return
    base = LabeledGraph(MultiGraph(node_count), tuple((label, i) for i, label in enumerate(labels)))
    pairs = [(u, v) for u in range(node_count) for v in range(u + 1, node_count)]
    level = {canonical(base): base}
    for m in range(max_edges + 1):
        if not level:
            return
        ordered = [code.graph() for code in sorted(level)]
        yield m, ordered
        if m == max_edges:
            return
        following = {}
        for g in ordered:
            for u, v in pairs:
                if not multi and g.graph.multiplicity(u, v):
                    continue
                child = _add_edge(g, u, v)
                code = canonical(child)
                if code not in following:
                    following[code] = child
        level = following


def iter_labeled(labels, max_nodes, max_edges, multi=False):
    """Lazily yield one representative per class, ordered by (nodes, edges, code)."""
    labels = sorted(set(labels))
    if max_nodes < len(labels):
        raise ContractViolation(f"max_nodes={max_nodes} is smaller than the label set {labels}")
    for n in range(len(labels), max_nodes + 1):
        for _, graphs in iter_level(labels, n, max_edges, multi):
            yield from graphs


def enumerate_labeled(labels, max_nodes, max_edges, multi=False, max_count=None):
    graphs = list(islice(iter_labeled(labels, max_nodes, max_edges, multi), max_count))
    logger.debug(f"enumerated {len(graphs)} classes for labels={sorted(set(labels))} "
                 f"max_nodes={max_nodes} max_edges={max_edges} multi={multi}")
    return graphs
