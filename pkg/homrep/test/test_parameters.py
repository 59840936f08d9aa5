# test_parameters.py

import unittest
from fractions import Fraction

import numpy as np

from homrep.cache.evaluation_cache import EvaluationCache, set_evaluation_cache
from homrep.connmat.slices import slice_from_rows
from homrep.graphs.enumeration import enumerate_labeled
from homrep.graphs.graph_io import parse_graph_list
from homrep.graphs.labeled import LabeledGraph
from homrep.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, path_graph, random_multigraph
from homrep.hom.elimination import hom_fast
from homrep.parameters.basic import eulerian_indicator, simple_support_param
from homrep.parameters.catalog import derived_parameter, get_parameter, parameter_names
from homrep.parameters.chromatic import bell_bounded, chromatic, stirling2
from homrep.parameters.flows import count_flows, parse_flow_spec
from homrep.parameters.matchings import (
    brute_force_perfect_matchings,
    matching_factorization,
    partial_matchings,
    perfect_matchings,
)
from homrep.parameters.targets import complete_target, get_target, target_names
from homrep.utilities.errors import ContractViolation


class TestBasicParameters(unittest.TestCase):

    def test_eulerian_indicator(self):
        print("\t[ Test: Eulerian Indicator ]")
        self.assertEqual(eulerian_indicator(cycle_graph(4)), 1)
        self.assertEqual(eulerian_indicator(path_graph(3)), 0)
        self.assertEqual(eulerian_indicator(MultiGraph.from_edges(2, [(0, 1), (0, 1)])), 1)
        self.assertEqual(eulerian_indicator(MultiGraph(0)), 1)

    def test_simple_support(self):
        print("\t[ Test: Simple Support ]")
        g = MultiGraph.from_edges(3, [(0, 1), (0, 1), (0, 1), (1, 2)])
        self.assertEqual(simple_support_param(g), Fraction(1, 4))
        self.assertEqual(simple_support_param(MultiGraph(5)), 1)

    def test_disjoint_unions_multiply(self):
        print("\t[ Test: Disjoint Unions Multiply ]")
        klein = parse_flow_spec("group 2,2; S 1,0 0,1 1,1")
        evaluators = [
            perfect_matchings,
            eulerian_indicator,
            simple_support_param,
            lambda g: count_flows(g, klein),
            lambda g: chromatic(g, Fraction(5, 2)),
        ]
        rng = np.random.default_rng(41)
        for _ in range(25):
            a = random_multigraph(rng, 5, 6)
            b = random_multigraph(rng, 5, 6)
            union = a.disjoint_union(b)
            for evaluate in evaluators:
                self.assertEqual(evaluate(union), evaluate(a) * evaluate(b))


class TestMatchings(unittest.TestCase):

    def test_small_values(self):
        print("\t[ Test: Small Values ]")
        self.assertEqual(perfect_matchings(MultiGraph(0)), 1)
        self.assertEqual(perfect_matchings(MultiGraph(1)), 0)
        self.assertEqual(perfect_matchings(complete_graph(2)), 1)
        self.assertEqual(perfect_matchings(path_graph(3)), 0)
        self.assertEqual(perfect_matchings(complete_graph(4)), 3)
        self.assertEqual(perfect_matchings(cycle_graph(6)), 2)
        self.assertEqual(perfect_matchings(MultiGraph.from_edges(2, [(0, 1)] * 3)), 3)

    def test_matches_brute_force(self):
        print("\t[ Test: Matches Brute Force ]")
        rng = np.random.default_rng(17)
        for _ in range(60):
            g = random_multigraph(rng, 6, 9)
            self.assertEqual(perfect_matchings(g), brute_force_perfect_matchings(g))

    def test_partial_matchings(self):
        print("\t[ Test: Partial Matchings ]")
        g = LabeledGraph.make(path_graph(3), {1: 0})
        self.assertEqual(partial_matchings(g, {1}), 0)
        self.assertEqual(partial_matchings(g, set()), 1)
        with self.assertRaises(ContractViolation):
            partial_matchings(g, {2})

    def test_factorization_reproduces_slice(self):
        print("\t[ Test: Factorization Reproduces Slice ]")
        f = get_parameter("matchings")
        for k in (1, 2):
            rows = enumerate_labeled(range(1, k + 1), k + 2, 3)
            entries = slice_from_rows(f, rows, k).entries
            n, w = matching_factorization(rows, k)
            product = np.array(n, dtype=object) @ np.array(w, dtype=object) @ np.array(n, dtype=object).T
            self.assertEqual([list(row) for row in product], [list(row) for row in entries])

    def test_two_by_two_slice(self):
        print("\t[ Test: Two By Two Slice ]")
        rows = parse_graph_list("K1,K2", 1)
        self.assertEqual(slice_from_rows(get_parameter("matchings"), rows, 1).entries, ((0, 1), (1, 0)))


class TestChromatic(unittest.TestCase):

    def test_known_polynomials(self):
        print("\t[ Test: Known Polynomials ]")
        x = Fraction(5, 2)
        self.assertEqual(chromatic(complete_graph(3), 3), 6)
        self.assertEqual(chromatic(cycle_graph(4), x), (x - 1) ** 4 + (x - 1))
        self.assertEqual(chromatic(path_graph(4), 2), 2)
        self.assertEqual(chromatic(complete_graph(2), Fraction(1, 2)), Fraction(-1, 4))
        self.assertEqual(chromatic(MultiGraph.from_edges(2, [(0, 1), (0, 1)]), 3), 6)

    def test_agrees_with_complete_targets(self):
        print("\t[ Test: Agrees With Complete Targets ]")
        graphs = [g.graph for g in enumerate_labeled([], 5, 10)]
        rng = np.random.default_rng(6)
        graphs += [random_multigraph(rng, 6, 10, multi=False, min_nodes=6) for _ in range(30)]
        for x in (1, 2, 3, 4):
            h = complete_target(x)
            for g in graphs:
                self.assertEqual(chromatic(g, x), hom_fast(g, h))

    def test_stirling_and_bell(self):
        print("\t[ Test: Stirling And Bell ]")
        self.assertEqual(stirling2(4, 2), 7)
        self.assertEqual([bell_bounded(k, 2) for k in range(4)], [1, 1, 2, 4])
        self.assertEqual(bell_bounded(4, 4), 15)
        with self.assertRaises(ContractViolation):
            bell_bounded(-1, 2)


class TestCatalog(unittest.TestCase):

    def setUp(self):
        set_evaluation_cache(EvaluationCache())

    def test_registry_names(self):
        print("\t[ Test: Registry Names ]")
        self.assertIn("matchings", parameter_names())
        self.assertEqual(get_parameter("chromatic@2").name, "chromatic@2")
        self.assertEqual(get_parameter("chromatic@5/2")(complete_graph(2)), Fraction(15, 4))
        self.assertEqual(get_parameter("nowhere-zero@3")(cycle_graph(3)), 2)
        self.assertEqual(get_parameter("hom@eulerian")(cycle_graph(5)), 1)
        self.assertEqual(get_parameter("flows@group 2; S 1")(path_graph(2)), 0)
        self.assertEqual(get_parameter("eulerian-subgraphs")(cycle_graph(3)), 2)
        self.assertEqual(get_parameter("independent-sets")(path_graph(3)), 5)
        self.assertTrue(get_parameter("simple-support").multi_sensitive)
        with self.assertRaises(ContractViolation):
            get_parameter("nonsense")
        with self.assertRaises(ContractViolation):
            get_parameter("nowhere-zero@x")

    def test_labels_are_ignored_and_values_cached(self):
        print("\t[ Test: Labels Are Ignored And Values Cached ]")
        calls = []
        base = get_parameter("eulerian")
        counting = derived_parameter(base, "counted", lambda g: calls.append(g) or eulerian_indicator(g))
        g = cycle_graph(3)
        self.assertEqual(counting(g), 1)
        self.assertEqual(counting(LabeledGraph.make(g, {1: 0})), 1)
        self.assertEqual(len(calls), 1)
        self.assertFalse(counting.multi_sensitive)

    def test_named_targets(self):
        print("\t[ Test: Named Targets ]")
        self.assertIn("eulerian", target_names())
        self.assertEqual(get_target("K:3").d, 3)
        self.assertEqual(get_target("loop:1/2").beta, ((Fraction(1, 2),),))
        self.assertEqual(get_target("double-loop").beta[0][0], 2)
        with self.assertRaises(ContractViolation):
            get_target("K:0")
        with self.assertRaises(ContractViolation):
            get_target("no-such-target")


if __name__ == '__main__':
    unittest.main()
