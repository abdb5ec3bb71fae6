"""
frobmaps Core — thread-safe in-memory LRU memo cache
"""

from __future__ import annotations

import logging
from collections import OrderedDict
from threading import Lock
from typing import Any, Callable, Dict, Hashable, Optional

from config import Config

logger = logging.getLogger(__name__)


# =============================================================================
# IN-MEMORY LRU CACHE
# =============================================================================


class MemoCache:
    """Thread-safe LRU cache with at-most-once computation per key."""

    def __init__(self, maxsize: Optional[int] = None, name: str = "memo"):
        self._data: OrderedDict[Hashable, Any] = OrderedDict()
        self._maxsize = maxsize or Config.MEMO_SIZE
        self._lock = Lock()
        self._key_locks: Dict[Hashable, Lock] = {}
        self.name = name
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        with self._lock:
            if key not in self._data:
                return None
            self._data.move_to_end(key)
            return self._data[key]

    def set(self, key: Hashable, value: Any) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            if len(self._data) > self._maxsize:
                evicted, _ = self._data.popitem(last=False)
                logger.debug(f"{self.name}: evicted {evicted!r}")

    def get_or_compute(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Return the cached value for key, computing it with factory() on a miss.

        Concurrent callers asking for the same key wait on a per-key lock, so
        factory runs at most once per key while the entry stays cached.
        """
        with self._lock:
            if key in self._data:
                self.hits += 1
                self._data.move_to_end(key)
                return self._data[key]
            key_lock = self._key_locks.setdefault(key, Lock())

        with key_lock:
            # Another thread may have filled the entry while we waited
            with self._lock:
                if key in self._data:
                    self.hits += 1
                    return self._data[key]
            value = factory()
            self.misses += 1
            self.set(key, value)

        with self._lock:
            self._key_locks.pop(key, None)
        return value

    def clear(self) -> int:
        with self._lock:
            count = len(self._data)
            self._data.clear()
            return count

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._data
