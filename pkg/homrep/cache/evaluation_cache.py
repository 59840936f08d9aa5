# evaluation_cache.py

import hashlib
import logging
import os
import pickle
import threading
from collections import OrderedDict

logger = logging.getLogger(__name__)


class EvaluationCache:
    """
    Memoizes oracle values by graph structure; optionally pickled to disk.
    At most `max_entries` values stay in memory, least recently used first out.
    """

    def __init__(self, cache_dir=None, max_entries=None):
        self.cache_dir = cache_dir or None
        self.max_entries = max_entries
        self._memory = OrderedDict()
        self._lock = threading.Lock()
        if self.cache_dir:
            os.makedirs(self.cache_dir, exist_ok=True)

    @staticmethod
    def _get_input_hash(input_text):
        # Create an SHA-256 hash of the input text
        hash_object = hashlib.sha256(input_text.encode('utf-8'))
        return hash_object.hexdigest()

    def _get_cache_path(self, key, prefix=""):
        filename = f"cache_{self._get_input_hash(prefix)[:16]}_{self._get_input_hash(key)}.pkl"
        return os.path.join(self.cache_dir, filename)

    def load(self, key, prefix=""):
        with self._lock:
            value = self._memory.get((prefix, key))
            if value is not None:
                self._memory.move_to_end((prefix, key))
        if value is not None or not self.cache_dir:
            return value
        cache_path = self._get_cache_path(key, prefix)
        if os.path.exists(cache_path):
            try:
                with open(cache_path, "rb") as file:
                    value = pickle.load(file)
            except Exception as e:
                logger.error(f"Failed to load from cache {cache_path}: {e}")
                return None
            self._remember(prefix, key, value)
        return value

    def _remember(self, prefix, key, value):
        with self._lock:
            self._memory[(prefix, key)] = value
            self._memory.move_to_end((prefix, key))
            if self.max_entries is not None:
                while len(self._memory) > self.max_entries:
                    self._memory.popitem(last=False)

    def save(self, key, value, prefix=""):
        self._remember(prefix, key, value)
        if not self.cache_dir:
            return
        cache_path = self._get_cache_path(key, prefix)
        try:
            with open(cache_path, "wb") as file:
                pickle.dump(value, file)
        except Exception as e:
            logger.error(f"Failed to save to cache {cache_path}: {e}")

    def __len__(self):
        return len(self._memory)

    def clear_cache(self):
        with self._lock:
            self._memory.clear()
        if not self.cache_dir:
            return
        try:
            for filename in os.listdir(self.cache_dir):
                file_path = os.path.join(self.cache_dir, filename)
                if os.path.isfile(file_path) and filename.startswith("cache_"):
                    os.remove(file_path)
        except Exception as e:
            logger.error(f"Failed to clear cache directory: {e}")


_default_cache = None


def get_evaluation_cache():
    global _default_cache
    if _default_cache is None:
        from homrep.config import get_settings
        _default_cache = EvaluationCache(get_settings().cache_dir, get_settings().cache_max_entries)
    return _default_cache


def set_evaluation_cache(cache):
    global _default_cache
    _default_cache = cache
