# targets.py

import os
from fractions import Fraction

from homrep.hom.hom_engine import read_target
from homrep.models.models import WeightedTarget
from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import parse_rational


def eulerian_target():
    return WeightedTarget.build([Fraction(1, 2)] * 2, [[1, -1], [-1, 1]])


def independent_set_target():
    return WeightedTarget.build([1, 1], [[1, 1], [1, 0]])


def complete_target(x):
    """K_x with unit node weights and no loops: hom counts proper x-colourings."""
    x = int(x)
    if x < 1:
        raise ContractViolation(f"K:<x> needs a positive integer, got {x}")
    return WeightedTarget.build([1] * x, [[int(i != j) for j in range(x)] for i in range(x)])


def single_loop_target(beta, alpha=1):
    """One node with a loop of weight beta: hom(G) = alpha**|V| * beta**|E|."""
    return WeightedTarget.build([parse_rational(alpha)], [[parse_rational(beta)]])


def half_loop_target():
    return single_loop_target(Fraction(1, 2))


def double_loop_target():
    return single_loop_target(2)


_NAMED_TARGETS = {
    "eulerian": eulerian_target,
    "independent-set": independent_set_target,
    "half-loop": half_loop_target,
    "double-loop": double_loop_target,
}


def target_names():
    return sorted(_NAMED_TARGETS) + ["K:<x>", "loop:<beta>", "<target.json>"]


def get_target(name):
    name = name.strip()
    if name in _NAMED_TARGETS:
        return _NAMED_TARGETS[name]()
    if name.startswith("K:"):
        try:
            return complete_target(int(name[2:]))
        except ValueError:
            raise ContractViolation(f"K:<x> needs an integer, got {name!r}") from None
    if name.startswith("loop:"):
        return single_loop_target(name[5:])
    if os.path.exists(name):
        return read_target(name)
    raise ContractViolation(f"unknown target {name!r}; known targets: {', '.join(target_names())}")
