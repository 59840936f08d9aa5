# test_flows.py

import os
import tempfile
import unittest
from fractions import Fraction
from itertools import product

import numpy as np

from homrep.graphs.enumeration import enumerate_labeled
from homrep.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, random_multigraph
from homrep.hom.elimination import hom_fast
from homrep.parameters.basic import eulerian_indicator
from homrep.parameters.flows import (
    FiniteAbelianGroup,
    FlowSpec,
    count_flows,
    flow_target,
    parse_flow_spec,
    read_flow_spec,
)
from homrep.parameters.targets import eulerian_target
from homrep.utilities.errors import ContractViolation, GraphParseError


def _brute_force_flows(g, spec):
    group = spec.group
    edges = g.edge_list()
    total = 0
    for values in product(sorted(spec.S), repeat=len(edges)):
        boundary = [group.zero] * g.node_count
        for (u, v), s in zip(edges, values):
            boundary[u] = group.sub(boundary[u], s)
            boundary[v] = group.add(boundary[v], s)
        total += all(b == group.zero for b in boundary)
    return total


def _spec(moduli, elements):
    return FlowSpec(FiniteAbelianGroup(moduli), frozenset(elements))


SPECS = [
    FlowSpec.nonzero(FiniteAbelianGroup((2,))),
    FlowSpec.whole(FiniteAbelianGroup((2,))),
    FlowSpec.nonzero(FiniteAbelianGroup((3,))),
    FlowSpec.whole(FiniteAbelianGroup((3,))),
    FlowSpec.nonzero(FiniteAbelianGroup((4,))),
    _spec((4,), [(1,), (3,)]),
    FlowSpec.nonzero(FiniteAbelianGroup((2, 2))),
    _spec((2, 2), [(1, 0)]),
]


class TestGroups(unittest.TestCase):

    def test_group_arithmetic(self):
        print("\t[ Test: Group Arithmetic ]")
        group = FiniteAbelianGroup((2, 3))
        self.assertEqual(group.order, 6)
        self.assertEqual(len(group.elements()), 6)
        self.assertEqual(group.add((1, 2), (1, 2)), (0, 1))
        self.assertEqual(group.neg((1, 1)), (1, 2))
        self.assertEqual(str(group), "Z2 x Z3")
        with self.assertRaises(ContractViolation):
            FiniteAbelianGroup((1,))

    def test_spec_must_be_inversion_closed(self):
        print("\t[ Test: Spec Must Be Inversion Closed ]")
        with self.assertRaises(ContractViolation):
            _spec((3,), [(1,)])
        self.assertEqual(len(FlowSpec.nonzero(FiniteAbelianGroup((2, 2))).S), 3)

    def test_parse_spec(self):
        print("\t[ Test: Parse Spec ]")
        spec = parse_flow_spec("group 2,2\nS 1,0 0,1 1,1  # nonzero\n")
        self.assertEqual(spec, FlowSpec.nonzero(FiniteAbelianGroup((2, 2))))
        self.assertEqual(parse_flow_spec("group 4; S 1 3").S, frozenset({(1,), (3,)}))
        self.assertEqual(parse_flow_spec("group 3; S 4 2").S, frozenset({(1,), (2,)}))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "z3.flow")
            with open(path, "w") as file:
                file.write("group 3\nS 1 2\n")
            self.assertEqual(read_flow_spec(path), FlowSpec.nonzero(FiniteAbelianGroup((3,))))

    def test_parse_errors(self):
        print("\t[ Test: Parse Errors ]")
        with self.assertRaises(GraphParseError):
            parse_flow_spec("group 3")
        with self.assertRaises(GraphParseError):
            parse_flow_spec("group 3\nT 1")
        with self.assertRaises(GraphParseError):
            parse_flow_spec("group 3\nS 1")
        with self.assertRaises(GraphParseError):
            parse_flow_spec("group x\nS 1")


class TestCountFlows(unittest.TestCase):

    def test_cycles_and_complete_graphs(self):
        print("\t[ Test: Cycles And Complete Graphs ]")
        z3 = FlowSpec.nonzero(FiniteAbelianGroup((3,)))
        z4 = FlowSpec.nonzero(FiniteAbelianGroup((4,)))
        self.assertEqual(count_flows(cycle_graph(3), z3), 2)
        # flow polynomial of K4 is (t-1)(t-2)(t-3)
        self.assertEqual(count_flows(complete_graph(4), z3), 0)
        self.assertEqual(count_flows(complete_graph(4), z4), 6)
        self.assertEqual(count_flows(MultiGraph(3), z3), 1)

    def test_matches_brute_force(self):
        print("\t[ Test: Matches Brute Force ]")
        rng = np.random.default_rng(8)
        for spec in SPECS:
            for _ in range(15):
                g = random_multigraph(rng, 4, 5)
                self.assertEqual(count_flows(g, spec), _brute_force_flows(g, spec))

    def test_orientation_does_not_matter(self):
        print("\t[ Test: Orientation Does Not Matter ]")
        g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)])
        for spec in SPECS:
            reference = count_flows(g, spec)
            for flips in ([1, 0, 0, 0, 0, 0], [1, 1, 0, 1, 0, 1]):
                self.assertEqual(count_flows(g, spec, orientation=flips), reference)


class TestFlowTargets(unittest.TestCase):

    def test_eulerian_target(self):
        print("\t[ Test: Eulerian Target ]")
        self.assertEqual(flow_target(FlowSpec.nonzero(FiniteAbelianGroup((2,)))), eulerian_target())

    def test_eulerian_identity_on_small_multigraphs(self):
        print("\t[ Test: Eulerian Identity On Small Multigraphs ]")
        h = flow_target(FlowSpec.nonzero(FiniteAbelianGroup((2,))))
        for g in enumerate_labeled([], 5, 8, multi=True):
            self.assertEqual(hom_fast(g, h), eulerian_indicator(g.graph))

    def test_hom_counts_flows(self):
        print("\t[ Test: Hom Counts Flows ]")
        rng = np.random.default_rng(21)
        graphs = [random_multigraph(rng, 5, 7) for _ in range(40)]
        for spec in SPECS:
            h = flow_target(spec)
            self.assertEqual(h.alpha[0], Fraction(1, spec.group.order))
            for g in graphs:
                value = hom_fast(g, h)
                self.assertLess(abs(float(value) - float(count_flows(g, spec))), 1e-6)
                self.assertEqual(value, count_flows(g, spec))


if __name__ == '__main__':
    unittest.main()
