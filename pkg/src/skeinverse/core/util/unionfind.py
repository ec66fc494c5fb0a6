"""Union-find over hashable keys, with path compression and union by rank.

Diagram surgery (smoothing, R1/R2 removal) and state-sum loop counting
both reduce to "which arc labels got glued together".
"""

from __future__ import annotations

from typing import Generic, Hashable, Iterable, TypeVar

K = TypeVar("K", bound=Hashable)

__all__ = ["UnionFind"]


class UnionFind(Generic[K]):
    def __init__(self, items: Iterable[K] = ()) -> None:
        self._parent: dict[K, K] = {}
        self._rank: dict[K, int] = {}
        for x in items:
            self.add(x)

    def add(self, x: K) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._rank[x] = 0

    def find(self, x: K) -> K:
        self.add(x)
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        # compress
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x: K, y: K) -> K:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self._rank[rx] < self._rank[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1
        return rx

    def classes(self) -> list[list[K]]:
        """Members grouped by root, in first-insertion order."""
        groups: dict[K, list[K]] = {}
        for x in self._parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())

    def __len__(self) -> int:
        return len(self._parent)
