"""Simple undirected graphs with 0-based vertices.

The file format is a text edge list, one ``u v`` pair per line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self.adjacency[x]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u]]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) == 1

    def valency(self) -> int:
        if not self.is_regular():
            raise ParameterError("graph is not regular")
        return len(self.adjacency[0])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def girth(self) -> int:
        """Length of a shortest cycle (large sentinel if acyclic)."""
        best = self.n + 1
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        queue.append(v)
                    elif parent[u] != v:
                        best = min(best, dist[u] + dist[v] + 1)
        return best

    def to_edge_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    @classmethod
    def from_edge_text(cls, text: str, n: int | None = None) -> "Graph":
        edges = []
        top = -1
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParameterError(f"bad edge line: {line!r}")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            top = max(top, u, v)
        return cls.from_edges(n if n is not None else top + 1, edges)
