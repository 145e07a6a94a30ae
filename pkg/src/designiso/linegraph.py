"""Line graphs (block intersection graphs) of designs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .core import Design


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``range(n)``; ``adj[i]`` is a bitset of neighbours."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if row >> self.n:
                raise ValueError(f"vertex {i} has a neighbour outside [0, {self.n})")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.adj[i]))

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in _bits(row >> (i + 1) << (i + 1)):
                yield i, j

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def to_numpy(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges():
            A[i, j] = A[j, i] = 1
        return A


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def line_graph(design: Design) -> Graph:
    """Vertex i is block i; blocks sharing a point are adjacent."""
    adj = [0] * design.b
    for through in design.blocks_through():
        mask = 0
        for i in through:
            mask |= 1 << i
        for i in through:
            adj[i] |= mask
    return Graph(design.b, tuple(row & ~(1 << i) for i, row in enumerate(adj)))


def strongly_regular_check(graph: Graph) -> tuple[int, int, int] | None:
    """Return (degree, common neighbours of adjacent, of non-adjacent pairs), or None.

    Complete and edgeless graphs are not counted as strongly regular.
    """
    n = graph.n
    if n < 3:
        raise ValueError("need at least 3 vertices")
    A = graph.to_numpy()
    deg = A.sum(axis=1)
    if (deg != deg[0]).any() or deg[0] in (0, n - 1):
        return None
    common = A @ A
    off = ~np.eye(n, dtype=bool)
    adj = common[(A == 1) & off]
    non = common[(A == 0) & off]
    if (adj != adj[0]).any() or (non != non[0]).any():
        return None
    return int(deg[0]), int(adj[0]), int(non[0])
