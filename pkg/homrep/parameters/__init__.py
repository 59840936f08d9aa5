from homrep.parameters.basic import eulerian_indicator, simple_support_param
from homrep.parameters.catalog import GraphParameter, get_parameter, hom_parameter, parameter_names
from homrep.parameters.chromatic import bell_bounded, chromatic, stirling2
from homrep.parameters.flows import FiniteAbelianGroup, FlowSpec, count_flows, flow_target, parse_flow_spec
from homrep.parameters.matchings import matching_factorization, partial_matchings, perfect_matchings

__all__ = [
    "FiniteAbelianGroup", "FlowSpec", "GraphParameter", "bell_bounded", "chromatic", "count_flows",
    "eulerian_indicator", "flow_target", "get_parameter", "hom_parameter", "matching_factorization",
    "parameter_names", "parse_flow_spec", "partial_matchings", "perfect_matchings", "simple_support_param",
    "stirling2",
]
