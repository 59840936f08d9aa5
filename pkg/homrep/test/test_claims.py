# test_claims.py
#
# Structural identities of the graph algebras on small towers. Slow: the
# random-target case builds multigraph algebras over two labels.

import unittest

import numpy as np

from homrep.algebra.claims import claim_names, run_claims
from homrep.algebra.tower import AlgebraTower
from homrep.cache.evaluation_cache import EvaluationCache, set_evaluation_cache
from homrep.hom.hom_engine import random_target
from homrep.parameters.catalog import get_parameter, hom_parameter
from homrep.reconstruct.pipeline import normalize
from homrep.utilities.errors import ContractViolation


class TestClaims(unittest.TestCase):

    def setUp(self):
        set_evaluation_cache(EvaluationCache())

    def _assert_all_pass(self, results):
        self.assertEqual([r.name for r in results], claim_names())
        for result in results:
            self.assertTrue(result.passed, f"{result.name}: {result.max_residual} {result.detail}")
            self.assertLessEqual(result.max_residual, 1e-6)

    def test_eulerian(self):
        print("\t[ Test: Eulerian ]")
        tower = AlgebraTower(get_parameter("eulerian"), seed=0)
        self._assert_all_pass(run_claims(tower))

    def test_random_target(self):
        print("\t[ Test: Random Target ]")
        h = random_target(np.random.default_rng(5), 2, twin_free=True, positive_beta=True)
        f, _ = normalize(hom_parameter(h))
        self._assert_all_pass(run_claims(AlgebraTower(f, seed=1)))

    def test_selected_claims(self):
        print("\t[ Test: Selected Claims ]")
        tower = AlgebraTower(get_parameter("eulerian"), seed=0)
        results = run_claims(tower, names=["unit_decomposition", "positive_mass"])
        self.assertEqual([r.name for r in results], ["positive_mass", "unit_decomposition"])
        self.assertTrue(all(r.passed for r in results))
        with self.assertRaises(ContractViolation):
            run_claims(tower, names=["no_such_claim"])


if __name__ == '__main__':
    unittest.main()
