"""Lightweight directed-graph container shared by analysis, generators and compiler.

Nodes are the integers ``0..n-1``. Self-loops are rejected and parallel edges
collapse by summing their weights, which is exactly the normalization the
directed view of a connectome needs. Analysis routines ignore weights.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class DiGraph:
    """Simple weighted digraph with O(1) edge membership tests."""

    __slots__ = ("n", "_succ", "_pred")

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        self.n = n
        self._succ: list[dict[int, float]] = [{} for _ in range(n)]
        self._pred: list[set[int]] = [set() for _ in range(n)]
        for edge in edges:
            u, v = edge[0], edge[1]
            w = float(edge[2]) if len(edge) > 2 else 1.0
            self.add_edge(u, v, w)

    def add_edge(self, u: int, v: int, weight: float = 1.0) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        if u == v:
            raise ValueError(f"self-loop ({u},{u}) is not representable")
        if v in self._succ[u]:
            self._succ[u][v] += weight
        else:
            self._succ[u][v] = weight
            self._pred[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        del self._succ[u][v]
        self._pred[v].discard(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._succ[u]

    def weight(self, u: int, v: int) -> float:
        return self._succ[u][v]

    @property
    def m(self) -> int:
        """Number of directed edges."""
        return sum(len(s) for s in self._succ)

    def successors(self, u: int) -> list[int]:
        """Out-neighbors in ascending order (deterministic iteration)."""
        return sorted(self._succ[u])

    def predecessors(self, v: int) -> list[int]:
        return sorted(self._pred[v])

    def out_degree(self, u: int) -> int:
        return len(self._succ[u])

    def in_degree(self, v: int) -> int:
        return len(self._pred[v])

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """All edges as (u, v, weight), sorted by (u, v)."""
        for u in range(self.n):
            succ = self._succ[u]
            for v in sorted(succ):
                yield u, v, succ[v]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u in range(self.n) for v in self._succ[u]}

    def undirected_neighbors(self) -> list[set[int]]:
        """Adjacency of the undirected simplification (union of both directions)."""
        nbrs = [set(s) for s in self._succ]
        for v in range(self.n):
            nbrs[v] |= self._pred[v]
        return nbrs

    def copy(self) -> "DiGraph":
        g = DiGraph(self.n)
        for u in range(self.n):
            g._succ[u] = dict(self._succ[u])
            g._pred[u] = set(self._pred[u])
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self._succ == other._succ

    def __hash__(self):  # mutable container
        raise TypeError("DiGraph is unhashable")

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, m={self.m})"
