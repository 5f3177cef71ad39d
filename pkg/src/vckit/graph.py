"""Immutable undirected simple graphs on vertex ids 0..n-1.

Adjacency is kept twice: as frozensets for membership tests and as
sorted tuples for deterministic iteration.  All construction goes
through the validating constructor, so a Graph in hand is always a
simple graph (no self-loops, no duplicates, symmetric adjacency).
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised when a construction would violate the simple-graph rules."""


class Graph:
    """Undirected simple graph, immutable once built.

    Parameters
    ----------
    vertex_count : number of vertices; ids are 0..vertex_count-1.
    edges : iterable of (u, v) pairs.  Duplicates and reversed copies
        collapse to a single undirected edge; self-loops and ids outside
        the vertex range raise GraphError naming the offending pair.
    """

    __slots__ = ("_n", "_m", "_adj", "_sorted_adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise GraphError(f"vertex_count must be >= 0, got {vertex_count}")
        n = vertex_count
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
                )
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a self-loop")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._sorted_adj = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(s) for s in adj) // 2

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        """Number of distinct undirected edges."""
        return self._m

    @property
    def sorted_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples in ascending order, indexed by id."""
        return self._sorted_adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> tuple[int, ...]:
        return self._sorted_adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self._n else False

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u in range(self._n):
            for v in self._sorted_adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def validate(self) -> None:
        """Re-check the structural invariants; raises AssertionError.

        Construction already guarantees these, so this is only useful as
        a test hook after exercising code that touches internals.
        """
        assert len(self._adj) == self._n
        for v in range(self._n):
            assert v not in self._adj[v], f"self-loop at {v}"
            assert tuple(sorted(self._adj[v])) == self._sorted_adj[v]
            for w in self._adj[v]:
                assert 0 <= w < self._n, f"neighbor {w} of {v} out of range"
                assert v in self._adj[w], f"asymmetric edge ({v}, {w})"
        assert sum(len(a) for a in self._adj) == 2 * self._m


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list; see the Graph constructor."""
    return Graph(vertex_count, edges)
