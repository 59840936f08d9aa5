# flows.py
#
# S-flows over a finite abelian group Z_m1 x ... x Z_mt and the weighted
# target on the characters of the group whose homomorphism function counts
# them.

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

import numpy as np

from homrep.models.models import WeightedTarget
from homrep.utilities.errors import ContractViolation, GraphParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    moduli: tuple

    def __post_init__(self):
        if any(m < 2 for m in self.moduli):
            raise ContractViolation(f"invariant factors must be at least 2, got {self.moduli}")

    @classmethod
    def parse(cls, text):
        try:
            return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
        except ValueError:
            raise GraphParseError("group moduli must be integers", token=text) from None

    @property
    def order(self):
        return prod(self.moduli)

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    def elements(self):
        return list(product(*(range(m) for m in self.moduli)))

    def reduce(self, element):
        if len(element) != len(self.moduli):
            raise ContractViolation(f"element {element} does not match moduli {self.moduli}")
        return tuple(a % m for a, m in zip(element, self.moduli))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def sub(self, a, b):
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple(-x % m for x, m in zip(a, self.moduli))

    def __str__(self):
        return " x ".join(f"Z{m}" for m in self.moduli) or "trivial"


@dataclass(frozen=True)
class FlowSpec:
    group: FiniteAbelianGroup
    S: frozenset

    def __post_init__(self):
        for s in self.S:
            if self.group.reduce(s) != s:
                raise ContractViolation(f"{s} is not a reduced element of {self.group}")
            if self.group.neg(s) not in self.S:
                raise ContractViolation(f"S is not closed under inversion: {self.group.neg(s)} missing")

    @classmethod
    def nonzero(cls, group):
        return cls(group, frozenset(e for e in group.elements() if e != group.zero))

    @classmethod
    def whole(cls, group):
        return cls(group, frozenset(group.elements()))


def parse_flow_spec(text):
    """
    `group m1,m2,...` then `S e1 e2 ...`, each element written `a` or `a,b,...`.
    Lines may also be separated by ';'.
    """
    group = None
    elements = None
    for number, raw in enumerate(text.replace(";", "\n").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "group":
            group = FiniteAbelianGroup.parse(rest)
        elif head == "S":
            try:
                elements = [tuple(int(x) for x in token.split(",")) for token in rest.split()]
            except ValueError:
                raise GraphParseError("S elements must be integer tuples", line=number, token=rest) from None
        else:
            raise GraphParseError("expected 'group' or 'S'", line=number, token=head)
    if group is None or elements is None:
        raise GraphParseError("flow spec needs both a 'group' and an 'S' line")
    try:
        return FlowSpec(group, frozenset(group.reduce(e) for e in elements))
    except ContractViolation as e:
        raise GraphParseError(str(e)) from e


def read_flow_spec(path):
    with open(path, "r") as file:
        return parse_flow_spec(file.read())


def count_flows(g, spec, orientation=None):
    """
    Number of maps E(G) -> S with zero boundary at every node. Edges are
    oriented u -> v as stored; `orientation[i]` reverses edge i of the
    expanded edge list. Nodes are closed as soon as their last edge is
    assigned, so the state only tracks boundaries of partly assigned nodes.
    """
    edges = g.edge_list()
    if orientation is not None:
        edges = [(v, u) if flip else (u, v) for (u, v), flip in zip(edges, orientation)]
    group = spec.group
    zero = group.zero
    values = sorted(spec.S)
    last = {}
    for i, (u, v) in enumerate(edges):
        last[u] = i
        last[v] = i
    states = {(): 1}
    for i, (u, v) in enumerate(edges):
        following = {}
        for state, count in states.items():
            for s in values:
                boundary = dict(state)
                boundary[u] = group.sub(boundary.get(u, zero), s)
                boundary[v] = group.add(boundary.get(v, zero), s)
                if last[u] == i and boundary.pop(u) != zero:
                    continue
                if last[v] == i and boundary.pop(v) != zero:
                    continue
                key = tuple(sorted(boundary.items()))
                following[key] = following.get(key, 0) + count
        states = following
    return Fraction(sum(states.values()))


def _snap_character_sum(value, order, tol):
    candidate = Fraction(value).limit_denominator(order)
    if abs(float(candidate) - value) < tol:
        return candidate
    logger.warning(f"character sum {value!r} is not a rational with denominator <= {order}; "
                   f"keeping a close rational approximation")
    return Fraction(value).limit_denominator(10 ** 12)


def flow_target(spec, tol=1e-9):
    """
    Target on the characters of the group: alpha = 1/|group| everywhere and
    beta[b][c] = sum over s in S of conj(chi_b(s)) * chi_c(s).
    """
    group = spec.group
    elements = group.elements()
    order = group.order
    alpha = [Fraction(1, order)] * order
    values = sorted(spec.S)
    if all(m == 2 for m in group.moduli):
        beta = [[Fraction(sum((-1) ** sum(x * (a + b) for x, a, b in zip(s, chi, psi)) for s in values))
                 for psi in elements] for chi in elements]
        return WeightedTarget.build(alpha, beta)

    chars = np.array(elements, dtype=float)
    moduli = np.array(group.moduli, dtype=float)
    if values:
        svals = np.array(values, dtype=float)
        # table[s, b] = chi_b(s)
        table = np.exp(2j * np.pi * (svals[:, None, :] * chars[None, :, :] / moduli).sum(axis=-1))
        sums = np.einsum("sb,sc->bc", np.conj(table), table)
    else:
        sums = np.zeros((order, order), dtype=complex)
    if np.abs(sums.imag).max() >= tol:
        raise ContractViolation(f"character sums are not real (max imaginary part {np.abs(sums.imag).max():.3g})")
    beta = [[Fraction(0)] * order for _ in range(order)]
    for b in range(order):
        for c in range(b, order):
            beta[b][c] = beta[c][b] = _snap_character_sum(float(sums[b, c].real), order, tol)
    return WeightedTarget.build(alpha, beta)
