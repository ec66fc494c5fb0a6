"""skeinverse.core.skein.memo
==========================
Cache for skein recursions, keyed by (invariant tag, canonical code).

The `min_crossings` threshold is checked against the diagram a caller asks
about, not against the subdiagrams of its recursion: an input below the
threshold is recomputed outright, an input at or above it caches every
subdiagram it reaches. A second table keyed by the exact diagram skips the
canonical code when the same labelled diagram comes back.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from typing import Any, Callable, Hashable

from ..diagram import LinkDiagram, canonical_code

__all__ = ["SkeinSettings", "SkeinMemo", "DEFAULT_SETTINGS"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SkeinSettings:
    memoize: bool = True
    min_crossings: int = 6


DEFAULT_SETTINGS = SkeinSettings()


class SkeinMemo:
    """Thread-safe dict cache with hit/miss counters."""

    def __init__(self, settings: SkeinSettings = DEFAULT_SETTINGS) -> None:
        self.settings = settings
        self._cache: dict[Hashable, Any] = {}
        self._exact: dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def wants(self, crossings: int) -> bool:
        return self.settings.memoize and crossings >= self.settings.min_crossings

    def lookup(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._cache:
                self.hits += 1
                return self._cache[key]
            self.misses += 1
        value = compute()
        with self._lock:
            self._cache.setdefault(key, value)
        return value

    def lookup_diagram(self, tag: Hashable, D: LinkDiagram, compute: Callable[[], Any]) -> Any:
        """`lookup` under (tag, canonical_code(D)), tried first under (tag, D)."""
        exact = (tag, D)
        with self._lock:
            if exact in self._exact:
                self.hits += 1
                return self._exact[exact]
        value = self.lookup((tag, canonical_code(D)), compute)
        with self._lock:
            self._exact.setdefault(exact, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self._exact.clear()
            self.hits = self.misses = 0

    def __contains__(self, key: Hashable) -> bool:
        return key in self._cache

    def __len__(self) -> int:
        return len(self._cache)

    def stats(self) -> dict:
        return {"entries": len(self._cache), "hits": self.hits, "misses": self.misses}
