"""
Per-object memoization shared by rings and modules.
"""

import logging
import threading
from typing import Any, Callable, Dict

logger = logging.getLogger(__name__)


class Memoized:
    """Mixin giving an object a thread-safe memo table.

    Readers never block each other for long: the factory runs outside the lock and
    the first value inserted for a key is the one every caller sees.
    """

    def _init_memo(self):
        self._memo: Dict[Any, Any] = {}
        self._lock = threading.Lock()

    def cached(self, key: Any, factory: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = factory()
        with self._lock:
            if key not in self._memo:
                logger.debug(f"Cached {key!r} on {self!r}")
            return self._memo.setdefault(key, value)
