# evaluation_engine.py

import logging
from concurrent.futures import ThreadPoolExecutor

from homrep.utilities.utils import pbar

logger = logging.getLogger(__name__)


class EvaluationEngine:
    """
    Evaluates a function over a batch of items on a bounded worker pool.
    Results always come back in input order, so whatever is assembled from
    them does not depend on scheduling.
    """

    def __init__(self, threads=1, verbose=False):
        self.threads = max(1, int(threads))
        self.verbose = verbose

    def map(self, fn, items, desc=None):
        items = list(items)
        if not items:
            return []
        logger.debug(f"[ Engine :: {desc or 'batch'} :: {len(items)} items on {self.threads} threads ]")
        if self.threads == 1 or len(items) == 1:
            return [fn(item) for item in pbar(items, desc=desc, verbose=self.verbose)]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(pbar(executor.map(fn, items), desc=desc, total=len(items), verbose=self.verbose))

    def evaluate(self, parameter, graphs, desc=None):
        return self.map(parameter, graphs, desc=desc or parameter.name)


_default_engine = EvaluationEngine()


def get_engine(engine=None):
    return engine if engine is not None else _default_engine
