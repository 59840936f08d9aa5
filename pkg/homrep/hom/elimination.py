# elimination.py
#
# hom(G, H) by eliminating the nodes of G one at a time. Every node carries a
# unary factor alpha and every parallel class a binary factor beta**m; when a
# node is eliminated the factors touching it are multiplied and summed over
# its state, leaving one factor on its neighbours. The order is greedy
# min-degree on the interaction graph.

import logging
from fractions import Fraction
from itertools import product

import networkx

from homrep.hom.hom_engine import hom

logger = logging.getLogger(__name__)

DEFAULT_MAX_TABLE_ENTRIES = 10 ** 7


def make_clique(graph, nodes):
    for v1 in nodes:
        for v2 in nodes:
            if v1 != v2:
                graph.add_edge(v1, v2)


def eliminate_node(graph, v):
    make_clique(graph, list(graph[v]))
    graph.remove_node(v)


def min_degree_order(graph):
    """Greedy min-degree elimination order of a networkx graph; ties go to the smaller node."""
    graph = graph.copy()
    order = []
    while len(graph) > 0:
        _, u = min((len(graph[u]), u) for u in graph)
        eliminate_node(graph, u)
        order.append(u)
    return order


class _Factor:
    __slots__ = ("scope", "table")

    def __init__(self, scope, table):
        self.scope = scope
        self.table = table


def _interaction_graph(g):
    graph = networkx.Graph()
    graph.add_nodes_from(range(g.node_count))
    graph.add_edges_from((u, v) for u, v, _ in g.edges)
    return graph


def _sum_out(v, factors, d):
    scope = sorted({x for f in factors for x in f.scope} - {v})
    full = scope + [v]
    position = {x: i for i, x in enumerate(full)}
    lookups = [(f.table, [position[x] for x in f.scope]) for f in factors]
    table = {}
    for states in product(range(d), repeat=len(full)):
        w = Fraction(1)
        for values, index in lookups:
            w *= values.get(tuple(states[i] for i in index), 0)
            if not w:
                break
        if w:
            key = states[:-1]
            table[key] = table.get(key, 0) + w
    return _Factor(tuple(scope), table)


def hom_fast(g, h, max_table_entries=DEFAULT_MAX_TABLE_ENTRIES):
    if hasattr(g, "graph"):
        g = g.graph
    d = h.d
    factors = [_Factor((v,), {(i,): h.alpha[i] for i in range(d)}) for v in range(g.node_count)]
    for u, v, m in g.edges:
        factors.append(_Factor((u, v), {(i, j): h.beta[i][j] ** m for i in range(d) for j in range(d)}))

    interaction = _interaction_graph(g)
    for v in min_degree_order(interaction):
        touching = [f for f in factors if v in f.scope]
        width = len({x for f in touching for x in f.scope})
        if d ** width > max_table_entries:
            logger.warning(f"elimination table of {d}^{width} entries exceeds {max_table_entries}; "
                           f"falling back to brute force")
            return hom(g, h)
        factors = [f for f in factors if v not in f.scope]
        factors.append(_sum_out(v, touching, d))

    total = Fraction(1)
    for f in factors:
        total *= f.table.get((), 0)
    return total
