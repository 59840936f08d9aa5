# test_graphs.py

import unittest

import numpy as np

from homrep.graphs.canonical import canonical, decode, isomorphic
from homrep.graphs.enumeration import enumerate_labeled, iter_level
from homrep.graphs.labeled import (
    LabeledGraph,
    add_labeled_isolated,
    disjoint_union,
    glue,
    label_first_nodes,
    relabel,
    restrict_labels,
    single_edge_graph,
    unit_graph,
    unlabel,
)
from homrep.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, path_graph, random_multigraph
from homrep.utilities.errors import ContractViolation, GraphParseError


def _pendant(label=1):
    """K2 with one end labeled."""
    return LabeledGraph.make(complete_graph(2), {label: 0})


class TestMultiGraph(unittest.TestCase):

    def test_parallel_edges_collapse_into_classes(self):
        print("\t[ Test: Parallel Edges Collapse Into Classes ]")
        g = MultiGraph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
        self.assertEqual(g.edges, ((0, 1, 2), (1, 2, 1)))
        self.assertEqual(g.edge_count, 3)
        self.assertEqual(g.degrees(), [2, 3, 1])
        self.assertFalse(g.is_simple())
        self.assertTrue(g.simple_support().is_simple())

    def test_loops_are_rejected(self):
        print("\t[ Test: Loops Are Rejected ]")
        with self.assertRaises(ContractViolation):
            MultiGraph.from_edges(2, [(1, 1)])
        with self.assertRaises(ContractViolation):
            MultiGraph(2, ((0, 2, 1),))

    def test_named_constructors(self):
        print("\t[ Test: Named Constructors ]")
        self.assertEqual(complete_graph(4).edge_count, 6)
        self.assertEqual(path_graph(4).edge_count, 3)
        self.assertEqual(cycle_graph(5).degrees(), [2] * 5)
        with self.assertRaises(ContractViolation):
            cycle_graph(2)

    def test_random_multigraph_is_seeded(self):
        print("\t[ Test: Random Multigraph Is Seeded ]")
        a = [random_multigraph(np.random.default_rng(7), 5, 6) for _ in range(3)]
        b = [random_multigraph(np.random.default_rng(7), 5, 6) for _ in range(3)]
        self.assertEqual(a, b)
        for g in a:
            self.assertLessEqual(g.node_count, 5)
            self.assertLessEqual(g.edge_count, 6)


class TestLabeledGraphs(unittest.TestCase):

    def test_glue_identifies_shared_labels(self):
        print("\t[ Test: Glue Identifies Shared Labels ]")
        p3 = glue(_pendant(), _pendant())
        self.assertEqual(p3.node_count, 3)
        self.assertEqual(p3.edge_count, 2)
        self.assertEqual(sorted(p3.graph.degrees()), [1, 1, 2])
        self.assertEqual(p3.label_set, frozenset({1}))

    def test_glue_with_unit_is_identity(self):
        print("\t[ Test: Glue With Unit Is Identity ]")
        g = LabeledGraph.make(path_graph(4), {1: 0, 2: 3})
        self.assertTrue(isomorphic(glue(g, unit_graph({1, 2})), g))
        self.assertTrue(isomorphic(glue(unit_graph({1, 2}), g), g))

    def test_glue_is_commutative_up_to_isomorphism(self):
        print("\t[ Test: Glue Is Commutative Up To Isomorphism ]")
        a = LabeledGraph.make(path_graph(3), {1: 0, 2: 2})
        b = single_edge_graph([1], 1, 2)
        self.assertTrue(isomorphic(glue(a, b), glue(b, a)))
        self.assertTrue(isomorphic(unit_graph([]), LabeledGraph(MultiGraph(0))))

    def test_disjoint_union_rejects_shared_labels(self):
        print("\t[ Test: Disjoint Union Rejects Shared Labels ]")
        with self.assertRaises(ContractViolation):
            disjoint_union(_pendant(1), _pendant(1))
        union = disjoint_union(_pendant(1), _pendant(2))
        self.assertEqual(union.node_count, 4)

    def test_relabel_and_restrict(self):
        print("\t[ Test: Relabel And Restrict ]")
        g = LabeledGraph.make(path_graph(3), {1: 0, 2: 2})
        moved = relabel(g, {2: 3})
        self.assertEqual(moved.label_set, frozenset({1, 3}))
        with self.assertRaises(ContractViolation):
            relabel(g, {2: 1})
        self.assertEqual(restrict_labels(g, {1}).label_set, frozenset({1}))
        self.assertEqual(restrict_labels(g, set()), unlabel(g))
        self.assertEqual(unlabel(g).label_set, frozenset())

    def test_restrict_commutes_with_glue(self):
        print("\t[ Test: Restrict Commutes With Glue ]")
        rng = np.random.default_rng(31)
        for _ in range(50):
            g1 = label_first_nodes(random_multigraph(rng, 5, 6, min_nodes=3), 3)
            g2 = relabel(label_first_nodes(random_multigraph(rng, 5, 6, min_nodes=3), 3), {3: 4})
            for kept in ({1, 2}, {1, 2, 3}, {1, 2, 4}):
                whole = restrict_labels(glue(g1, g2), kept)
                parts = glue(restrict_labels(g1, kept), restrict_labels(g2, kept))
                self.assertTrue(isomorphic(whole, parts))

    def test_add_labeled_isolated(self):
        print("\t[ Test: Add Labeled Isolated ]")
        g = add_labeled_isolated(_pendant(1), {1, 2, 3})
        self.assertEqual(g.node_count, 4)
        self.assertEqual(g.label_set, frozenset({1, 2, 3}))
        self.assertIs(add_labeled_isolated(g, {2}), g)

    def test_label_validation(self):
        print("\t[ Test: Label Validation ]")
        with self.assertRaises(ContractViolation):
            LabeledGraph(MultiGraph(2), ((1, 0), (2, 0)))
        with self.assertRaises(ContractViolation):
            LabeledGraph(MultiGraph(1), ((0, 0),))
        with self.assertRaises(ContractViolation):
            LabeledGraph(MultiGraph(1), ((1, 1),))


class TestCanonical(unittest.TestCase):

    def test_permutations_share_a_code(self):
        print("\t[ Test: Permutations Share A Code ]")
        rng = np.random.default_rng(3)
        for _ in range(1000):
            g = random_multigraph(rng, 7, 9, min_nodes=1)
            k = int(rng.integers(0, min(g.node_count, 3) + 1))
            perm = [int(x) for x in rng.permutation(g.node_count)]
            labels = {i + 1: i for i in range(k)}
            labeled = LabeledGraph.make(g, labels)
            moved = LabeledGraph.make(g.relabel_nodes(perm), {label: perm[v] for label, v in labels.items()})
            self.assertEqual(canonical(labeled), canonical(moved))

    def test_codes_agree_with_networkx_isomorphism(self):
        print("\t[ Test: Codes Agree With Networkx Isomorphism ]")
        import networkx
        from networkx.algorithms.isomorphism import categorical_node_match

        def to_nx(g):
            out = networkx.MultiGraph()
            labels = g.node_labels()
            out.add_nodes_from((v, {"label": labels.get(v, 0)}) for v in range(g.node_count))
            out.add_edges_from(g.graph.edge_list())
            return out

        match = categorical_node_match("label", 0)
        rng = np.random.default_rng(33)
        for _ in range(300):
            a = label_first_nodes(random_multigraph(rng, 4, 4, min_nodes=2), int(rng.integers(0, 2)))
            b = label_first_nodes(random_multigraph(rng, 4, 4, min_nodes=2), int(rng.integers(0, 2)))
            self.assertEqual(
                canonical(a) == canonical(b),
                networkx.is_isomorphic(to_nx(a), to_nx(b), node_match=match),
            )

    def test_labels_distinguish_classes(self):
        print("\t[ Test: Labels Distinguish Classes ]")
        end = LabeledGraph.make(path_graph(3), {1: 0})
        middle = LabeledGraph.make(path_graph(3), {1: 1})
        self.assertNotEqual(canonical(end), canonical(middle))
        self.assertNotEqual(canonical(LabeledGraph.make(path_graph(3), {1: 0, 2: 2})),
                            canonical(LabeledGraph.make(path_graph(3), {1: 0, 2: 1})))

    def test_decode_returns_the_representative(self):
        print("\t[ Test: Decode Returns The Representative ]")
        g = LabeledGraph.make(MultiGraph.from_edges(4, [(0, 1), (0, 1), (1, 2)]), {1: 2})
        code = canonical(g)
        self.assertTrue(isomorphic(decode(code.text), g))
        self.assertEqual(canonical(code.graph()), code)
        self.assertEqual(code.text.split("|")[0], "4")

    def test_malformed_code(self):
        print("\t[ Test: Malformed Code ]")
        with self.assertRaises(GraphParseError):
            decode("3|x|0-1*1")


class TestEnumeration(unittest.TestCase):

    def test_small_labeled_count(self):
        print("\t[ Test: Small Labeled Count ]")
        self.assertEqual(len(enumerate_labeled([1], 2, 1)), 3)

    def test_unlabeled_simple_graphs_up_to_four_nodes(self):
        print("\t[ Test: Unlabeled Simple Graphs Up To Four Nodes ]")
        # 1 + 1 + 2 + 4 + 11 classes on 0..4 nodes
        self.assertEqual(len(enumerate_labeled([], 4, 6)), 19)

    def test_multigraph_levels(self):
        print("\t[ Test: Multigraph Levels ]")
        levels = list(iter_level([], 2, 3, multi=True))
        self.assertEqual([m for m, _ in levels], [0, 1, 2, 3])
        self.assertTrue(all(len(graphs) == 1 for _, graphs in levels))
        self.assertEqual(len(enumerate_labeled([], 2, 3, multi=False)), 1 + 1 + 2)

    def test_classes_are_distinct_and_ordered(self):
        print("\t[ Test: Classes Are Distinct And Ordered ]")
        graphs = enumerate_labeled([1, 2], 4, 3)
        codes = [canonical(g) for g in graphs]
        self.assertEqual(len(codes), len(set(codes)))
        keys = [(g.node_count, g.edge_count) for g in graphs]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(all(g.label_set == frozenset({1, 2}) for g in graphs))

    def test_max_count_and_small_budget(self):
        print("\t[ Test: Max Count And Small Budget ]")
        self.assertEqual(len(enumerate_labeled([], 4, 6, max_count=5)), 5)
        with self.assertRaises(ContractViolation):
            enumerate_labeled([1, 2, 3], 2, 2)


if __name__ == '__main__':
    unittest.main()
