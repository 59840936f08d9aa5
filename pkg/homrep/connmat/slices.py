# slices.py
#
# Finite slices of connection matrices: rows are k-labeled graphs and entry
# (i, j) is f evaluated on the glued product of rows i and j.

import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from homrep.config import SliceBudget, get_settings
from homrep.connmat.exact import exact_rank, psd_check
from homrep.engine.evaluation_engine import get_engine
from homrep.graphs.canonical import canonical
from homrep.graphs.enumeration import enumerate_labeled
from homrep.graphs.labeled import glue, relabel
from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectionSlice:
    k: int
    rows: tuple
    entries: tuple

    @property
    def size(self):
        return len(self.rows)

    def codes(self):
        return [canonical(g).text for g in self.rows]

    def rank(self):
        return exact_rank(self.entries)

    def psd(self):
        return psd_check(self.entries)

    def submatrix(self, indices):
        return [[self.entries[i][j] for j in indices] for i in indices]

    def to_tsv(self):
        codes = self.codes()
        lines = ["\t".join(["code"] + codes)]
        for code, row in zip(codes, self.entries):
            lines.append("\t".join([code] + [format_rational(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({
            "k": self.k,
            "rows": self.codes(),
            "entries": [[format_rational(v) for v in row] for row in self.entries],
        })


def default_rows(k, max_nodes=None, max_edges=None, multi=False, budget=None):
    budget = budget or get_settings().slice_budget
    max_nodes = k + budget.extra_nodes if max_nodes is None else max_nodes
    max_edges = k + budget.extra_edges if max_edges is None else max_edges
    return enumerate_labeled(range(1, k + 1), max_nodes, max_edges, multi, max_count=budget.max_rows)


def _check_rows(rows, k):
    labels = frozenset(range(1, k + 1))
    codes = set()
    for g in rows:
        if g.label_set != labels:
            raise ContractViolation(f"row {canonical(g)} is not {k}-labeled")
        code = canonical(g)
        if code in codes:
            raise ContractViolation(f"rows are not pairwise non-isomorphic: {code} repeats")
        codes.add(code)


def slice_from_rows(f, rows, k, engine=None):
    rows = tuple(rows)
    _check_rows(rows, k)
    pairs = [(i, j) for i in range(len(rows)) for j in range(i, len(rows))]
    values = get_engine(engine).map(lambda ij: f(glue(rows[ij[0]], rows[ij[1]])), pairs,
                                    desc=f"M({f.name},{k})")
    entries = [[Fraction(0)] * len(rows) for _ in rows]
    for (i, j), value in zip(pairs, values):
        entries[i][j] = entries[j][i] = value
    return ConnectionSlice(k, rows, tuple(tuple(row) for row in entries))


def build_slice(f, k, max_nodes=None, max_edges=None, multi=None, rows=None, budget=None, engine=None):
    if multi is None:
        multi = f.multi_sensitive
    if rows is None:
        if max_nodes is not None and max_nodes < k:
            raise ContractViolation(f"max_nodes={max_nodes} is smaller than k={k}")
        rows = default_rows(k, max_nodes, max_edges, multi, budget)
    return slice_from_rows(f, rows, k, engine)


@dataclass(frozen=True)
class RankBound:
    """Certified lower bound on the rank of M(f, k) from a finite slice."""

    k: int
    rank: int
    rows: int
    saturated: bool
    max_nodes: int
    max_edges: int
    truncated: bool = False


def rank_profile(f, k_max, budget=None, multi=None, engine=None):
    """
    For each k <= k_max, the exact rank of the slice within budget. The bound
    is marked saturated when the full size level one node and one edge
    smaller already has the same rank. A slice cut short by max_rows never
    counts as saturated, and max_nodes/max_edges report what its rows reach.
    """
    budget = budget or get_settings().slice_budget
    if multi is None:
        multi = f.multi_sensitive
    profile = []
    for k in range(k_max + 1):
        max_nodes, max_edges = k + budget.extra_nodes, k + budget.extra_edges
        cap = None if budget.max_rows is None else budget.max_rows + 1
        rows = enumerate_labeled(range(1, k + 1), max_nodes, max_edges, multi, max_count=cap)
        truncated = cap is not None and len(rows) == cap
        if truncated:
            rows = rows[:budget.max_rows]
        current = slice_from_rows(f, rows, k, engine)
        rank = current.rank()
        smaller = [i for i, g in enumerate(current.rows)
                   if g.node_count <= max_nodes - 1 and g.edge_count <= max_edges - 1]
        saturated = not truncated and exact_rank(current.submatrix(smaller)) == rank
        if truncated:
            logger.warning(f"M({f.name},{k}) cut at {budget.max_rows} rows; rank {rank} is not certified saturated")
        elif not saturated:
            logger.warning(f"rank of M({f.name},{k}) still grows at the budget edge ({rank} on {current.size} rows)")
        reached_nodes = max((g.node_count for g in current.rows), default=k)
        reached_edges = max((g.edge_count for g in current.rows), default=0)
        profile.append(RankBound(k, rank, current.size, saturated, reached_nodes, reached_edges, truncated))
    return profile


@dataclass(frozen=True)
class MultiplicativityReport:
    value_at_empty: Fraction
    rank: int
    psd: bool
    nonzero: bool

    @property
    def multiplicative(self):
        return self.value_at_empty == 1 and self.rank <= 1 and self.psd and self.nonzero


def multiplicativity_check(f, budget=None, engine=None):
    """f(K_0) = 1 and a rank-one positive M(f, 0) slice."""
    current = build_slice(f, 0, budget=budget, engine=engine)
    nonzero = any(v != 0 for row in current.entries for v in row)
    return MultiplicativityReport(
        value_at_empty=current.entries[0][0] if current.size else Fraction(0),
        rank=current.rank(),
        psd=current.psd().is_psd,
        nonzero=nonzero,
    )


def separated_rows(rows_k, rows_l, k):
    """Rows for k + l labels: a k-row next to an l-row shifted to labels k+1..k+l."""
    shifted = [relabel(g, {label: label + k for label in g.label_set}) for g in rows_l]
    return [glue(a, b) for a in rows_k for b in shifted]


def kronecker(a, b):
    return [[x * y for x in row_a for y in row_b] for row_a in a for row_b in b]


def is_anchored(g):
    """Every component of g contains a labeled node."""
    adj = g.graph.adjacency()
    seen = set(g.labeled_nodes())
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.node_count


def separated_tensor_check(f, k, l, rows_k=None, rows_l=None, engine=None):
    """
    The separated part of M(f, k+l) equals the Kronecker product of the k-
    and l-slices. Default rows are restricted to graphs whose components all
    carry labels, so that distinct pairs give non-isomorphic products.
    """
    if rows_k is None:
        rows_k = [g for g in enumerate_labeled(range(1, k + 1), k + 2, k + 2) if is_anchored(g)]
    if rows_l is None:
        rows_l = [g for g in enumerate_labeled(range(1, l + 1), l + 2, l + 2) if is_anchored(g)]
    slice_k = build_slice(f, k, rows=rows_k, engine=engine)
    slice_l = build_slice(f, l, rows=rows_l, engine=engine)
    combined = build_slice(f, k + l, rows=separated_rows(slice_k.rows, slice_l.rows, k), engine=engine)
    expected = kronecker(slice_k.entries, slice_l.entries)
    return [list(row) for row in combined.entries] == expected
