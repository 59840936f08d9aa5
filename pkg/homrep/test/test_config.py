# test_config.py

import os
import tempfile
import unittest
from fractions import Fraction

from homrep.cache.evaluation_cache import EvaluationCache
from homrep.config import default_config_path, load_settings
from homrep.engine.evaluation_engine import EvaluationEngine
from homrep.services.loggers.process_logger import ProcessLogger
from homrep.utilities.errors import ContractViolation


class TestSettings(unittest.TestCase):

    def test_defaults(self):
        print("\t[ Test: Defaults ]")
        self.assertTrue(os.path.exists(default_config_path()))
        settings = load_settings(environ={})
        self.assertEqual(settings.tolerances.snap_max_denominator, 10_000)
        self.assertEqual(settings.slice_budget.max_rows, 120)
        self.assertEqual(settings.heldout_graphs, 50)

    def test_missing_file(self):
        print("\t[ Test: Missing File ]")
        with self.assertLogs(level="WARNING"):
            settings = load_settings(path="/nonexistent/config.yaml", environ={})
        self.assertEqual(settings.algebra_budget.max_levels, 3)

    def test_environment_overrides(self):
        print("\t[ Test: Environment Overrides ]")
        settings = load_settings(environ={
            "HOMREP_SLICE_BUDGET__MAX_ROWS": "200",
            "HOMREP_TOLERANCES__VERIFY_TOL": "1e-8",
            "HOMREP_SEED": "7",
            "OTHER_SEED": "9",
        })
        self.assertEqual(settings.slice_budget.max_rows, 200)
        self.assertEqual(settings.slice_budget.extra_nodes, 3)
        self.assertEqual(settings.tolerances.verify_tol, 1e-8)
        self.assertEqual(settings.seed, 7)

    def test_keyword_overrides_win(self):
        print("\t[ Test: Keyword Overrides Win ]")
        settings = load_settings(environ={"HOMREP_SEED": "7"}, seed=11, threads=None,
                                 algebra_budget={"extra_edges": 5})
        self.assertEqual(settings.seed, 11)
        self.assertEqual(settings.threads, 1)
        self.assertEqual(settings.algebra_budget.extra_edges, 5)
        self.assertEqual(settings.algebra_budget.extra_nodes, 2)

    def test_invalid_values(self):
        print("\t[ Test: Invalid Values ]")
        with self.assertRaises(ContractViolation):
            load_settings(environ={"HOMREP_THREADS": "0"})
        with self.assertRaises(ContractViolation):
            load_settings(environ={}, tolerances={"snap_tol": -1})


class TestEvaluationCache(unittest.TestCase):

    def test_memory(self):
        print("\t[ Test: Memory ]")
        cache = EvaluationCache()
        self.assertIsNone(cache.load("3|||0-1*1", prefix="eulerian"))
        cache.save("3|||0-1*1", Fraction(1, 2), prefix="eulerian")
        self.assertEqual(cache.load("3|||0-1*1", prefix="eulerian"), Fraction(1, 2))
        self.assertIsNone(cache.load("3|||0-1*1", prefix="matchings"))
        self.assertEqual(len(cache), 1)

    def test_memory_is_bounded(self):
        print("\t[ Test: Memory Is Bounded ]")
        cache = EvaluationCache(max_entries=2)
        cache.save("a", 1)
        cache.save("b", 2)
        self.assertEqual(cache.load("a"), 1)
        cache.save("c", 3)
        self.assertEqual(len(cache), 2)
        self.assertIsNone(cache.load("b"))
        self.assertEqual((cache.load("a"), cache.load("c")), (1, 3))
        for i in range(50):
            cache.save(str(i), i)
        self.assertEqual(len(cache), 2)
        self.assertEqual(load_settings(environ={}).cache_max_entries, 1_000_000)
        self.assertEqual(load_settings(environ={"HOMREP_CACHE_MAX_ENTRIES": "10"}).cache_max_entries, 10)

    def test_disk_round_trip(self):
        print("\t[ Test: Disk Round Trip ]")
        with tempfile.TemporaryDirectory() as directory:
            EvaluationCache(directory).save("K3", Fraction(6), prefix="chromatic@3")
            fresh = EvaluationCache(directory)
            self.assertEqual(fresh.load("K3", prefix="chromatic@3"), 6)
            fresh.clear_cache()
            self.assertEqual(len(fresh), 0)
            self.assertIsNone(EvaluationCache(directory).load("K3", prefix="chromatic@3"))


class TestEvaluationEngine(unittest.TestCase):

    def test_order_is_stable(self):
        print("\t[ Test: Order Is Stable ]")
        items = list(range(40))
        serial = EvaluationEngine(threads=1).map(lambda x: x * x, items)
        threaded = EvaluationEngine(threads=4).map(lambda x: x * x, items)
        self.assertEqual(serial, threaded)
        self.assertEqual(threaded[:4], [0, 1, 4, 9])
        self.assertEqual(EvaluationEngine(threads=4).map(abs, []), [])


class TestProcessLogger(unittest.TestCase):

    def test_stages(self):
        print("\t[ Test: Stages ]")
        plog = ProcessLogger()
        plog.start("degree_search", labels=[])
        plog.end("degree_search", D=2)
        plog.start("target")
        timings = plog.timings()
        self.assertGreaterEqual(timings["degree_search"], 0)
        self.assertIsNone(timings["target"])
        self.assertEqual(plog.get_logs()["degree_search"]["details"], {"labels": [], "D": 2})

    def test_end_without_start(self):
        print("\t[ Test: End Without Start ]")
        with self.assertLogs("homrep.services.loggers.process_logger", level="WARNING"):
            ProcessLogger().end("verify")


if __name__ == '__main__':
    unittest.main()
