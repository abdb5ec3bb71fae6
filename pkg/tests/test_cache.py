"""
Tests para core/cache.py
"""

import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))


class TestMemoCache:
    def test_get_set(self):
        from core.cache import MemoCache

        cache = MemoCache(maxsize=4)
        assert cache.get("a") is None
        cache.set("a", 1)
        assert cache.get("a") == 1
        assert "a" in cache
        assert len(cache) == 1

    def test_lru_eviction(self):
        from core.cache import MemoCache

        cache = MemoCache(maxsize=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.get("a")  # a is now most recent
        cache.set("c", 3)
        assert "a" in cache and "c" in cache
        assert "b" not in cache

    def test_get_or_compute_counts(self):
        from core.cache import MemoCache

        cache = MemoCache(maxsize=8)
        assert cache.get_or_compute(("K", 1), lambda: 42) == 42
        assert cache.get_or_compute(("K", 1), lambda: 0) == 42
        assert (cache.hits, cache.misses) == (1, 1)

    def test_factory_runs_once_under_contention(self):
        from core.cache import MemoCache

        cache = MemoCache(maxsize=8)
        calls = []
        lock = threading.Lock()

        def slow():
            with lock:
                calls.append(1)
            time.sleep(0.05)
            return "value"

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: cache.get_or_compute("key", slow), range(8)))
        assert results == ["value"] * 8
        assert len(calls) == 1

    def test_default_size_from_config(self, monkeypatch):
        from config import Config
        from core.cache import MemoCache

        monkeypatch.setattr(Config, "MEMO_SIZE", 3)
        cache = MemoCache()
        for i in range(5):
            cache.set(i, i)
        assert len(cache) == 3
        assert cache.clear() == 3
        assert len(cache) == 0
