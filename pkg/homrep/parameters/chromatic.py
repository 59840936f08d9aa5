# chromatic.py
#
# Chromatic polynomial by deletion-contraction on the simple support, with
# connected components split off, pendant nodes peeled and trees closed in
# one step. Values are memoized per (normalized graph, x).

from fractions import Fraction
from functools import lru_cache

import networkx

from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import parse_rational


def _normal_form(nodes, edges):
    index = {v: i for i, v in enumerate(sorted(nodes))}
    return len(index), tuple(sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in edges))


def _contract(n, edges, u, v):
    """Merge v into u; the u-v edge disappears and parallels collapse."""
    merged = set()
    for a, b in edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return _normal_form([w for w in range(n) if w != v], merged)


@lru_cache(maxsize=200000)
def _chromatic(n, edges, x):
    if not edges:
        return x ** n
    graph = networkx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)

    isolated = [v for v in graph if graph.degree[v] == 0]
    if isolated:
        rest = [v for v in graph if graph.degree[v] > 0]
        return x ** len(isolated) * _chromatic(*_normal_form(rest, edges), x)

    components = list(networkx.connected_components(graph))
    if len(components) > 1:
        result = Fraction(1)
        for component in components:
            result *= _chromatic(*_normal_form(component, graph.subgraph(component).edges()), x)
        return result

    if len(edges) == n - 1:
        return x * (x - 1) ** (n - 1)

    u = min(graph, key=lambda w: (graph.degree[w], w))
    if graph.degree[u] == 1:
        rest = [w for w in graph if w != u]
        return (x - 1) * _chromatic(*_normal_form(rest, graph.subgraph(rest).edges()), x)

    v = min(graph[u])
    deleted = tuple(e for e in edges if e != (min(u, v), max(u, v)))
    return _chromatic(n, deleted, x) - _chromatic(*_contract(n, edges, u, v), x)


def chromatic(g, x):
    """p(G, x): proper x-colourings for integer x, extended polynomially."""
    x = parse_rational(x)
    simple = g.simple_support()
    return _chromatic(simple.node_count, tuple((u, v) for u, v, _ in simple.edges), x)


@lru_cache(maxsize=None)
def stirling2(k, j):
    """Partitions of a k-set into exactly j blocks."""
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    return j * stirling2(k - 1, j) + stirling2(k - 1, j - 1)


def bell_bounded(k, q):
    """Partitions of a k-set into at most q blocks."""
    if k < 0 or q < 0:
        raise ContractViolation(f"bell_bounded needs k, q >= 0, got k={k} q={q}")
    return sum(stirling2(k, j) for j in range(min(k, q) + 1))
