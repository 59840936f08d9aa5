# matchings.py

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from homrep.utilities.errors import ContractViolation


def _count_perfect(graph):
    adj = graph.adjacency()

    @lru_cache(maxsize=None)
    def count(remaining):
        if not remaining:
            return 1
        v = min(remaining)
        total = 0
        for w, m in adj[v].items():
            if w in remaining:
                total += m * count(remaining - {v, w})
        return total

    return count(frozenset(range(graph.node_count)))


def perfect_matchings(g):
    """Number of perfect matchings; parallel edges are distinct edges."""
    if g.node_count % 2:
        return Fraction(0)
    return Fraction(_count_perfect(g))


def partial_matchings(g, covered):
    """
    Matchings of a labeled graph covering every unlabeled node and exactly the
    labeled nodes whose labels are in `covered`.
    """
    covered = set(covered)
    if not covered <= g.label_set:
        raise ContractViolation(f"labels {sorted(covered - g.label_set)} are not labels of the graph")
    labels = g.node_labels()
    keep = [v for v in range(g.graph.node_count) if v not in labels or labels[v] in covered]
    return perfect_matchings(g.graph.induced(keep))


def label_subsets(k):
    """Subsets of {1..k} ordered by bitmask."""
    return [frozenset(i + 1 for i in range(k) if mask >> i & 1) for mask in range(2 ** k)]


def matching_factorization(rows, k):
    """
    Matrices N (rows x subsets) and W (subsets x subsets) with slice = N W N^T:
    N[i][X] counts matchings of row i covering the labels X, and W pairs
    complementary subsets.
    """
    subsets = label_subsets(k)
    full = frozenset(range(1, k + 1))
    n_matrix = [[partial_matchings(g, x) for x in subsets] for g in rows]
    w_matrix = [[Fraction(int(x | y == full and not x & y)) for y in subsets] for x in subsets]
    return n_matrix, w_matrix


def brute_force_perfect_matchings(g):
    """Reference count over all edge subsets of size n/2."""
    edges = g.edge_list()
    n = g.node_count
    if n % 2:
        return 0
    total = 0
    for chosen in combinations(range(len(edges)), n // 2):
        touched = [node for i in chosen for node in edges[i]]
        if len(set(touched)) == n:
            total += 1
    return total
