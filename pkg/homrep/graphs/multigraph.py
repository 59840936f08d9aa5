# multigraph.py

from collections import Counter
from dataclasses import dataclass

from homrep.utilities.errors import ContractViolation


@dataclass(frozen=True)
class MultiGraph:
    """
    A finite loop-free multigraph on nodes 0..node_count-1.

    Edges are stored as a sorted tuple of (u, v, multiplicity) with u < v,
    one entry per parallel class.
    """

    node_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.node_count < 0:
            raise ContractViolation(f"negative node count {self.node_count}")
        previous = None
        for entry in self.edges:
            u, v, mult = entry
            if u == v:
                raise ContractViolation(f"loop at node {u}; graphs are loop-free")
            if not (0 <= u < v < self.node_count):
                raise ContractViolation(f"edge ({u},{v}) out of range for {self.node_count} nodes")
            if mult < 1:
                raise ContractViolation(f"edge ({u},{v}) has multiplicity {mult}")
            if previous is not None and (u, v) <= previous:
                raise ContractViolation("edge classes must be sorted and distinct; use MultiGraph.from_edges")
            previous = (u, v)

    @classmethod
    def from_edges(cls, node_count, edge_list=()):
        counts = Counter()
        for u, v in edge_list:
            if u == v:
                raise ContractViolation(f"loop at node {u}; graphs are loop-free")
            counts[(min(u, v), max(u, v))] += 1
        return cls(node_count, tuple((u, v, m) for (u, v), m in sorted(counts.items())))

    @property
    def edge_count(self):
        return sum(m for _, _, m in self.edges)

    def edge_list(self):
        """Edges expanded by multiplicity."""
        return [(u, v) for u, v, m in self.edges for _ in range(m)]

    def multiplicity(self, u, v):
        a, b = min(u, v), max(u, v)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 0

    def adjacency(self):
        adj = [dict() for _ in range(self.node_count)]
        for u, v, m in self.edges:
            adj[u][v] = m
            adj[v][u] = m
        return adj

    def degrees(self):
        deg = [0] * self.node_count
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        return deg

    def is_simple(self):
        return all(m == 1 for _, _, m in self.edges)

    def simple_support(self):
        return MultiGraph(self.node_count, tuple((u, v, 1) for u, v, _ in self.edges))

    def add_isolated(self, count=1):
        return MultiGraph(self.node_count + count, self.edges)

    def disjoint_union(self, other):
        shift = self.node_count
        return MultiGraph.from_edges(
            self.node_count + other.node_count,
            self.edge_list() + [(u + shift, v + shift) for u, v in other.edge_list()],
        )

    def relabel_nodes(self, permutation):
        """Apply a node permutation given as a sequence old -> new."""
        return MultiGraph(
            self.node_count,
            tuple(sorted(
                (min(permutation[u], permutation[v]), max(permutation[u], permutation[v]), m)
                for u, v, m in self.edges
            )),
        )

    def induced(self, nodes):
        nodes = sorted(nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return MultiGraph(
            len(nodes),
            tuple((index[u], index[v], m) for u, v, m in self.edges if u in index and v in index),
        )

    def key(self):
        """Exact structural key (not isomorphism invariant) used for memoization."""
        return f"{self.node_count}|" + ",".join(f"{u}-{v}*{m}" for u, v, m in self.edges)


def complete_graph(n):
    return MultiGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n):
    return MultiGraph(n)


def path_graph(n):
    return MultiGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ContractViolation(f"cycle needs at least 3 nodes, got {n}")
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def random_multigraph(rng, max_nodes, max_edges, multi=True, min_nodes=0):
    """Seeded random multigraph: uniform node count, uniform edge count, uniform pairs."""
    n = int(rng.integers(min_nodes, max_nodes + 1))
    if n < 2:
        return MultiGraph(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if multi:
        m = int(rng.integers(0, max_edges + 1))
        chosen = [pairs[int(i)] for i in rng.integers(0, len(pairs), size=m)]
    else:
        m = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
        chosen = [pairs[int(i)] for i in rng.choice(len(pairs), size=m, replace=False)]
    return MultiGraph.from_edges(n, chosen)
