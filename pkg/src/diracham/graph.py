"""Immutable simple graphs backed by a dense boolean adjacency matrix.

Graphs handled here are dense (a minimum degree of n/2 means at least n^2/4
edges), so the adjacency matrix is stored whole and every edge query is a
single array lookup.  Row operations are done with numpy so the scans used
by the solver run at C speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "ComponentLabeling",
    "Graph",
    "GraphError",
    "articulation_points",
    "build_graph",
    "complement",
    "connected_components",
    "count_components",
    "degree",
    "find_cut_vertex",
    "is_clique",
    "is_independent",
    "min_degree",
]


class GraphError(ValueError):
    """Raised when a graph cannot be constructed or a vertex is out of range."""


class Graph:
    """Undirected simple graph on vertices ``0 .. n-1``.

    Equality and hashing are structural: two graphs are equal when they have
    the same vertex count and the same edge set.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        self._set(adj)

    def _set(self, adj: np.ndarray) -> None:
        adj.flags.writeable = False
        self._adj = adj
        self._hash = None

    @classmethod
    def from_adjacency(cls, matrix, *, check: bool = True) -> Graph:
        """Wrap a square boolean matrix.  The matrix is copied."""
        adj = np.array(matrix, dtype=bool, copy=True)
        if check:
            if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
                raise GraphError(f"adjacency must be square, got shape {adj.shape}")
            if adj.diagonal().any():
                v = int(np.flatnonzero(adj.diagonal())[0])
                raise GraphError(f"self-loop at vertex {v}")
            if not np.array_equal(adj, adj.T):
                raise GraphError("adjacency matrix is not symmetric")
        g = cls.__new__(cls)
        g._set(adj)
        return g

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only ``n x n`` boolean adjacency matrix."""
        return self._adj

    def __len__(self) -> int:
        return self.n

    def _check(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside [0, {self.n})")
        return v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[self._check(u), self._check(v)])

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in increasing order."""
        return np.flatnonzero(self._adj[self._check(v)]).tolist()

    def degree(self, v: int) -> int:
        return int(np.count_nonzero(self._adj[self._check(v)]))

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.shape == other._adj.shape and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def degree(G: Graph, v: int) -> int:
    return G.degree(v)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("minimum degree is undefined for the empty vertex set")
    return int(G.degrees().min())


def complement(G: Graph) -> Graph:
    adj = ~G.adjacency
    np.fill_diagonal(adj, False)
    return Graph.from_adjacency(adj, check=False)


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected components, numbered in order of their smallest vertex."""

    labels: tuple[int, ...]
    count: int

    def members(self, label: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.labels) if c == label)

    def sizes(self) -> list[int]:
        sizes = [0] * self.count
        for c in self.labels:
            sizes[c] += 1
        return sizes

    def largest(self) -> tuple[int, ...]:
        """Vertices of the largest component; ties go to the lower label."""
        if self.count == 0:
            return ()
        sizes = self.sizes()
        return self.members(sizes.index(max(sizes)))


def _components(adj: np.ndarray, alive: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    seen = ~alive.copy()
    label = 0
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        labels[s] = label
        frontier = np.array([s])
        while frontier.size:
            reached = adj[frontier].any(axis=0) & ~seen
            frontier = np.flatnonzero(reached)
            seen[frontier] = True
            labels[frontier] = label
        label += 1
    return labels


def connected_components(G: Graph) -> ComponentLabeling:
    labels = _components(G.adjacency, np.ones(G.n, dtype=bool))
    count = int(labels.max()) + 1 if G.n else 0
    return ComponentLabeling(tuple(labels.tolist()), count)


def count_components(G: Graph, removed: Iterable[int] = ()) -> int:
    """Number of connected components of ``G`` minus the ``removed`` vertices."""
    alive = np.ones(G.n, dtype=bool)
    for v in removed:
        alive[G._check(v)] = False
    labels = _components(G.adjacency, alive)
    return int(labels.max()) + 1 if alive.any() else 0


def articulation_points(G: Graph) -> list[int]:
    """All cut vertices of ``G`` in increasing order.

    Iterative depth-first search with low-link values.  When a vertex
    finishes, every neighbor has been discovered, so its low value is the
    minimum discovery time over its closed neighborhood and its children's
    low values.  Counting the tree edge to the parent is harmless for
    articulation points: ``low[c] >= disc[v]`` still singles them out.
    """
    adj = G.adjacency
    n = G.n
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    parent = [-1] * n
    cut = set()
    clock = 0
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [root]
        while stack:
            v = stack[-1]
            fresh = adj[v] & ~visited
            if fresh.any():
                w = int(fresh.argmax())
                visited[w] = True
                disc[w] = low[w] = clock
                clock += 1
                parent[w] = v
                stack.append(w)
                if v == root:
                    root_children += 1
                continue
            stack.pop()
            nbrs = adj[v]
            if nbrs.any():
                low[v] = min(low[v], int(disc[nbrs].min()))
            p = parent[v]
            if p >= 0:
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return sorted(cut)


def find_cut_vertex(G: Graph) -> int | None:
    """Smallest cut vertex of ``G``, or ``None`` if there is none."""
    points = articulation_points(G)
    return points[0] if points else None


def _index(G: Graph, S: Iterable[int]) -> np.ndarray:
    return np.array(sorted({G._check(int(v)) for v in S}), dtype=np.int64)


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    idx = _index(G, S)
    sub = G.adjacency[np.ix_(idx, idx)]
    return int(np.count_nonzero(sub)) == len(idx) * (len(idx) - 1)


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    idx = _index(G, S)
    return not G.adjacency[np.ix_(idx, idx)].any()
