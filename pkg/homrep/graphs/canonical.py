# canonical.py
#
# Canonical codes for labeled multigraphs up to label-preserving isomorphism.
# Colour refinement splits nodes by label and neighbourhood; any cell that is
# still not a singleton is individualized node by node, and the smallest edge
# code over all leaves of that search tree is the canonical one.

from dataclasses import dataclass
from functools import lru_cache

from homrep.graphs.labeled import LabeledGraph
from homrep.graphs.multigraph import MultiGraph
from homrep.utilities.errors import GraphParseError


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Printable code `n|label:node,...|u-v*m,...`; decodes to the canonical representative."""

    text: str

    def __str__(self):
        return self.text

    @property
    def bytes(self):
        return self.text.encode("ascii")

    def graph(self):
        return decode(self.text)


def _refine(colors, adj):
    while True:
        signatures = [
            (colors[v], tuple(sorted((colors[w], m) for w, m in adj[v].items())))
            for v in range(len(colors))
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[sig] for sig in signatures]
        if len(ranks) == len(set(colors)):
            return refined
        colors = refined


def _leaf_code(colors, edges):
    position = colors  # discrete colouring: colour == position
    return tuple(sorted(
        (min(position[u], position[v]), max(position[u], position[v]), m) for u, v, m in edges
    ))


def _search(colors, adj, edges):
    colors = _refine(colors, adj)
    n = len(colors)
    if len(set(colors)) == n:
        return _leaf_code(colors, edges), colors
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    best = None
    for v in range(n):
        if colors[v] != target:
            continue
        split = [2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)]
        code, leaf = _search(split, adj, edges)
        if best is None or code < best[0]:
            best = (code, leaf)
    return best


@lru_cache(maxsize=262144)
def canonical(g: LabeledGraph) -> CanonicalCode:
    graph = g.graph
    labeled = g.node_labels()
    adj = graph.adjacency()
    # isolated unlabeled nodes are interchangeable; they go to the end
    core = [v for v in range(graph.node_count) if v in labeled or adj[v]]
    isolated = graph.node_count - len(core)
    sub = graph.induced(core)
    index = {v: i for i, v in enumerate(core)}
    sub_labels = {index[v]: label for v, label in labeled.items()}
    sub_adj = sub.adjacency()
    initial = [(0, sub_labels[v]) if v in sub_labels else (1, 0) for v in range(sub.node_count)]
    ranks = {c: i for i, c in enumerate(sorted(set(initial)))}
    if sub.node_count:
        edge_code, leaf = _search([ranks[c] for c in initial], sub_adj, sub.edges)
    else:
        edge_code, leaf = (), []
    label_part = sorted((label, leaf[v]) for v, label in sub_labels.items())
    text = "|".join([
        str(sub.node_count + isolated),
        ",".join(f"{label}:{pos}" for label, pos in label_part),
        ",".join(f"{u}-{v}*{m}" for u, v, m in edge_code),
    ])
    return CanonicalCode(text)


def isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    return canonical(g1) == canonical(g2)


@lru_cache(maxsize=262144)
def decode(text: str) -> LabeledGraph:
    try:
        n_part, label_part, edge_part = text.split("|")
        n = int(n_part)
        labels = []
        for token in filter(None, label_part.split(",")):
            label, node = token.split(":")
            labels.append((int(label), int(node)))
        edges = []
        for token in filter(None, edge_part.split(",")):
            pair, mult = token.split("*")
            u, v = pair.split("-")
            edges.append((int(u), int(v), int(mult)))
        return LabeledGraph(MultiGraph(n, tuple(sorted(edges))), tuple(sorted(labels)))
    except ValueError as e:
        raise GraphParseError(f"malformed canonical code: {e}", token=text) from e
