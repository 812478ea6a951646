"""
Demazure Multiplicity Memo Store Module
Holds the shared memo tables in a thread-safe manner
"""
import logging
import threading
from typing import Any, Callable, Dict, Hashable

logger = logging.getLogger(__name__)


class MemoStore:
    """Thread-safe memo table shared by the counting and oracle modules"""

    def __init__(self, name: str):
        self.name = name
        self._table: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0

    def get(self, key: Hashable, default: Any = None) -> Any:
        """Get a stored value"""
        with self._lock:
            return self._table.get(key, default)

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._table

    def set(self, key: Hashable, value: Any) -> Any:
        """Store a value unless one is already present; return the stored one"""
        with self._lock:
            return self._table.setdefault(key, value)

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """
        Return the memoized value for key, computing it on a miss
        compute runs outside the lock, so it may consult other stores;
        the first finished writer wins and every writer computes the same value
        """
        with self._lock:
            if key in self._table:
                self._hits += 1
                return self._table[key]
            self._misses += 1

        value = compute()

        with self._lock:
            return self._table.setdefault(key, value)

    def clear(self) -> None:
        """Drop every stored value"""
        with self._lock:
            self._table.clear()
            self._hits = 0
            self._misses = 0

    def stats(self) -> Dict[str, Any]:
        """Get a copy of the store statistics"""
        with self._lock:
            return {
                'name': self.name,
                'entries': len(self._table),
                'hits': self._hits,
                'misses': self._misses,
            }


# Global memo store instances
partition_store = MemoStore('partitions')
character_store = MemoStore('characters')


def log_store_stats() -> None:
    """Log the size of every global store"""
    for store in (partition_store, character_store):
        stats = store.stats()
        logger.info(f"🗄️ {stats['name']}: {stats['entries']} entries, "
                    f"{stats['hits']} hits / {stats['misses']} misses")
