# catalog.py

import hashlib
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from homrep.cache.evaluation_cache import get_evaluation_cache
from homrep.graphs.labeled import LabeledGraph
from homrep.hom.elimination import hom_fast
from homrep.models.models import WeightedTarget
from homrep.parameters.basic import eulerian_indicator, simple_support_param
from homrep.parameters.chromatic import chromatic
from homrep.parameters.flows import FiniteAbelianGroup, FlowSpec, count_flows, parse_flow_spec, read_flow_spec
from homrep.parameters.matchings import perfect_matchings
from homrep.parameters.targets import get_target, independent_set_target
from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import format_rational, parse_rational


@dataclass(frozen=True)
class GraphParameter:
    """
    A named isomorphism-invariant function on multigraphs with exact values.

    Calling the parameter accepts a MultiGraph or a LabeledGraph (labels are
    ignored) and memoizes the value by exact edge structure.
    """

    name: str
    evaluate: Callable = field(compare=False, repr=False)
    multiplicative: bool = True
    multi_sensitive: bool = False
    exact_hom_target: Optional[WeightedTarget] = field(default=None, compare=False, repr=False)
    cache_key: str = ""

    def __call__(self, g):
        graph = g.graph if isinstance(g, LabeledGraph) else g
        cache = get_evaluation_cache()
        prefix = self.cache_key or self.name
        key = graph.key()
        value = cache.load(key, prefix)
        if value is None:
            value = Fraction(self.evaluate(graph))
            cache.save(key, value, prefix)
        return value


def hom_parameter(target, name=None):
    digest = hashlib.sha256(target.to_json().encode("utf-8")).hexdigest()[:16]
    return GraphParameter(
        name=name or f"hom@{digest}",
        evaluate=lambda g: hom_fast(g, target),
        multiplicative=True,
        multi_sensitive=True,
        exact_hom_target=target,
        cache_key=f"hom:{digest}",
    )


def flow_parameter(spec, name=None):
    elements = " ".join(",".join(map(str, s)) for s in sorted(spec.S))
    key = f"flows:{','.join(map(str, spec.group.moduli))}:{elements}"
    return GraphParameter(
        name=name or key,
        evaluate=lambda g: count_flows(g, spec),
        multi_sensitive=True,
        cache_key=key,
    )


def chromatic_parameter(x):
    x = parse_rational(x)
    name = f"chromatic@{format_rational(x)}"
    return GraphParameter(name=name, evaluate=lambda g: chromatic(g, x))


def matchings_parameter():
    return GraphParameter(name="matchings", evaluate=perfect_matchings)


def eulerian_parameter():
    return GraphParameter(name="eulerian", evaluate=eulerian_indicator)


def simple_support_parameter():
    return GraphParameter(name="simple-support", evaluate=simple_support_param, multi_sensitive=True)


def eulerian_subgraphs_parameter():
    return flow_parameter(FlowSpec.whole(FiniteAbelianGroup((2,))), name="eulerian-subgraphs")


def independent_sets_parameter():
    return hom_parameter(independent_set_target(), name="independent-sets")


def nowhere_zero_parameter(t):
    return flow_parameter(FlowSpec.nonzero(FiniteAbelianGroup((int(t),))), name=f"nowhere-zero@{t}")


_FIXED = {
    "matchings": matchings_parameter,
    "eulerian": eulerian_parameter,
    "simple-support": simple_support_parameter,
    "eulerian-subgraphs": eulerian_subgraphs_parameter,
    "independent-sets": independent_sets_parameter,
}


def parameter_names():
    return sorted(_FIXED) + ["chromatic@<x>", "flows@<specfile or inline spec>", "nowhere-zero@<t>",
                             "hom@<target name or file>"]


def get_parameter(name):
    """Look a parameter up by its registry name."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    kind, sep, argument = name.partition("@")
    if sep and argument:
        if kind == "chromatic":
            return chromatic_parameter(argument)
        if kind == "nowhere-zero":
            try:
                return nowhere_zero_parameter(int(argument))
            except ValueError:
                raise ContractViolation(f"nowhere-zero@<t> needs an integer, got {argument!r}") from None
        if kind == "flows":
            spec = read_flow_spec(argument) if os.path.exists(argument) else parse_flow_spec(argument)
            return flow_parameter(spec, name=name)
        if kind == "hom":
            return hom_parameter(get_target(argument), name=name)
    raise ContractViolation(f"unknown parameter {name!r}; known parameters: {', '.join(parameter_names())}")


def derived_parameter(base, name, evaluate, **flags):
    """A parameter computed from another one, inheriting its flags unless overridden."""
    options = {"multiplicative": base.multiplicative, "multi_sensitive": base.multi_sensitive}
    options.update(flags)
    return GraphParameter(name=name, evaluate=evaluate, cache_key=f"{base.cache_key or base.name}/{name}",
                          **options)
