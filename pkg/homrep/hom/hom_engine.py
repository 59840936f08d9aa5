# hom_engine.py
#
# Exact weighted homomorphism sums. A map phi: V(G) -> [d] has weight
# prod_u alpha[phi(u)] * prod_{uv} beta[phi(u)][phi(v)]; parallel edges raise
# the beta factor to the multiplicity.

import json
import logging
from fractions import Fraction
from itertools import product

from pydantic import ValidationError

from homrep.graphs.labeled import LabeledGraph
from homrep.models.models import WeightedTarget
from homrep.utilities.errors import ContractViolation, GraphParseError
from homrep.utilities.utils import parse_rational

logger = logging.getLogger(__name__)

ONE = Fraction(1)
ZERO = Fraction(0)


def _beta_powers(h, graph):
    powers = {}
    for _, _, m in graph.edges:
        if m not in powers:
            powers[m] = [[b ** m for b in row] for row in h.beta]
    return powers


def _weighted_sum(graph, h, fixed):
    """Sum of map weights over all maps extending the node -> state dict `fixed`."""
    n = graph.node_count
    free = [v for v in range(n) if v not in fixed]
    powers = _beta_powers(h, graph)
    state = [0] * n
    for v, s in fixed.items():
        state[v] = s
    total = ZERO
    for states in product(range(h.d), repeat=len(free)):
        for v, s in zip(free, states):
            state[v] = s
        w = ONE
        for v in range(n):
            w *= h.alpha[state[v]]
        if not w:
            continue
        for u, v, m in graph.edges:
            w *= powers[m][state[u]][state[v]]
            if not w:
                break
        total += w
    return total


def hom(g, h):
    if isinstance(g, LabeledGraph):
        g = g.graph
    return _weighted_sum(g, h, {})


def hom_pinned(g, h, phi):
    """Sum over extensions of the label -> state assignment `phi`."""
    if set(phi) != set(g.label_set):
        raise ContractViolation(
            f"assignment covers labels {sorted(phi)} but the graph is labeled {sorted(g.label_set)}"
        )
    fixed = {}
    labels = g.label_map
    for label, s in phi.items():
        if not (0 <= s < h.d):
            raise ContractViolation(f"state {s} for label {label} is outside [0, {h.d})")
        fixed[labels[label]] = s
    return _weighted_sum(g.graph, h, fixed)


def pinned_vector(g, h):
    """All pinned values of g keyed by the state tuple in increasing label order."""
    labels = sorted(g.label_set)
    return {
        states: hom_pinned(g, h, dict(zip(labels, states)))
        for states in product(range(h.d), repeat=len(labels))
    }


def connection_decomposition(rows, h):
    """
    Rank-one pieces of the connection slice of hom(., h) on k-labeled rows:
    entry (i, j) equals the sum over phi of x_i(phi) x_j(phi) / prod alpha(phi).
    Returns (phi, vector, scale) triples with scale = 1 / prod alpha(phi).
    """
    if not rows:
        return []
    labels = sorted(rows[0].label_set)
    vectors = [pinned_vector(g, h) for g in rows]
    pieces = []
    for states in product(range(h.d), repeat=len(labels)):
        scale = ONE
        for s in states:
            scale /= h.alpha[s]
        pieces.append((states, [v[states] for v in vectors], scale))
    return pieces


def random_target(rng, d, max_denominator=10, twin_free=False, separated=False, positive_beta=False):
    """
    Seeded random target with positive rational alpha and symmetric rational
    beta. `separated` additionally asks for distinct weighted degrees
    sum_j alpha_j beta_ij, which pendant edges already tell apart.
    """
    for _ in range(1000):
        alpha = [Fraction(int(rng.integers(1, max_denominator + 1)), int(rng.integers(1, max_denominator + 1)))
                 for _ in range(d)]
        low = 1 if positive_beta else -max_denominator
        beta = [[ZERO] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                value = Fraction(int(rng.integers(low, max_denominator + 1)),
                                 int(rng.integers(1, max_denominator + 1)))
                beta[i][j] = beta[j][i] = value
        target = WeightedTarget.build(alpha, beta)
        if twin_free and not target.is_twin_free():
            continue
        if separated and len(set(target.weighted_degrees())) != d:
            continue
        return target
    raise ContractViolation(f"could not draw a target with d={d} meeting the requested conditions")


def load_target(text):
    try:
        return WeightedTarget.model_validate_json(text)
    except ValidationError as e:
        raise GraphParseError(f"invalid target: {e.errors()[0]['msg']}",
                              token=".".join(str(p) for p in e.errors()[0]["loc"]) or None) from e


def read_target(path):
    with open(path, "r") as file:
        return load_target(file.read())


def write_target(path, h):
    with open(path, "w") as file:
        file.write(json.dumps(json.loads(h.to_json()), indent=2) + "\n")


def target_from_lists(alpha, beta):
    return WeightedTarget.build([parse_rational(a) for a in alpha],
                                [[parse_rational(b) for b in row] for row in beta])
