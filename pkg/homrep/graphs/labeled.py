# labeled.py

from dataclasses import dataclass

from homrep.graphs.multigraph import MultiGraph
from homrep.utilities.errors import ContractViolation


@dataclass(frozen=True)
class LabeledGraph:
    """
    A multigraph with an injective partial labeling by positive integers.

    `labels` is a sorted tuple of (label, node) pairs. A k-labeled graph is
    the case where the label set is {1..k}.
    """

    graph: MultiGraph
    labels: tuple = ()

    def __post_init__(self):
        seen_nodes = set()
        previous = 0
        for label, node in self.labels:
            if not isinstance(label, int) or label < 1:
                raise ContractViolation(f"labels must be positive integers, got {label!r}")
            if label <= previous:
                raise ContractViolation("label pairs must be sorted by label and distinct")
            if not (0 <= node < self.graph.node_count):
                raise ContractViolation(f"label {label} points at missing node {node}")
            if node in seen_nodes:
                raise ContractViolation(f"node {node} carries two labels")
            seen_nodes.add(node)
            previous = label

    @classmethod
    def make(cls, graph, labels=None):
        labels = labels or {}
        return cls(graph, tuple(sorted(labels.items())))

    @property
    def label_set(self):
        return frozenset(label for label, _ in self.labels)

    @property
    def label_map(self):
        return dict(self.labels)

    @property
    def node_count(self):
        return self.graph.node_count

    @property
    def edge_count(self):
        return self.graph.edge_count

    def labeled_nodes(self):
        return {node for _, node in self.labels}

    def node_labels(self):
        return {node: label for label, node in self.labels}


def glue(g1, g2):
    """Disjoint union with same-labeled nodes identified."""
    labels1 = g1.label_map
    labels2 = g2.node_labels()
    mapping = []
    next_node = g1.graph.node_count
    merged = dict(labels1)
    for node in range(g2.graph.node_count):
        label = labels2.get(node)
        if label is not None and label in labels1:
            mapping.append(labels1[label])
            continue
        mapping.append(next_node)
        if label is not None:
            merged[label] = next_node
        next_node += 1
    edges = g1.graph.edge_list() + [(mapping[u], mapping[v]) for u, v in g2.graph.edge_list()]
    return LabeledGraph(MultiGraph.from_edges(next_node, edges), tuple(sorted(merged.items())))


def restrict_labels(g, labels):
    keep = set(labels)
    return LabeledGraph(g.graph, tuple((label, node) for label, node in g.labels if label in keep))


def unlabel(g):
    return LabeledGraph(g.graph, ())


def relabel(g, mapping):
    """Rename labels by an injective map; labels missing from the map keep their name."""
    renamed = {mapping.get(label, label): node for label, node in g.labels}
    if len(renamed) != len(g.labels):
        raise ContractViolation(f"relabeling {mapping} is not injective on labels {sorted(g.label_set)}")
    return LabeledGraph(g.graph, tuple(sorted(renamed.items())))


def add_labeled_isolated(g, labels):
    """Extend g by one isolated node for every label in `labels` it does not carry yet."""
    missing = sorted(set(labels) - g.label_set)
    if not missing:
        return g
    n = g.graph.node_count
    merged = dict(g.labels)
    for offset, label in enumerate(missing):
        merged[label] = n + offset
    return LabeledGraph(g.graph.add_isolated(len(missing)), tuple(sorted(merged.items())))


def disjoint_union(g1, g2):
    shared = g1.label_set & g2.label_set
    if shared:
        raise ContractViolation(f"disjoint union of graphs sharing labels {sorted(shared)}")
    return glue(g1, g2)


def _label_first(graph, labels):
    labels = sorted(labels)
    if len(labels) > graph.node_count:
        raise ContractViolation(f"{len(labels)} labels on a graph with {graph.node_count} nodes")
    return LabeledGraph(graph, tuple((label, i) for i, label in enumerate(labels)))


def unit_graph(labels):
    """U_S: |S| isolated nodes carrying the labels of S."""
    return _label_first(MultiGraph(len(set(labels))), labels)


def single_edge_graph(labels, u, v):
    """k_uv: the labels of S with one edge between the nodes labeled u and v."""
    labels = sorted(set(labels) | {u, v})
    index = {label: i for i, label in enumerate(labels)}
    return _label_first(MultiGraph.from_edges(len(labels), [(index[u], index[v])]), labels)


def label_first_nodes(graph, k):
    """Label the first min(k, n) nodes of graph with 1..min(k, n)."""
    return _label_first(graph, range(1, min(k, graph.node_count) + 1))
