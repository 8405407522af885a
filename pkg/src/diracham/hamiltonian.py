"""Hamiltonian cycles in graphs with minimum degree at least floor(n/2).

A graph with ``min_degree(G) >= n // 2`` is Hamiltonian unless it is one of
two exceptional shapes: two cliques of size ceil(n/2) glued at a single
vertex, or (odd n) an independent set of ceil(n/2) vertices joined to an
arbitrary graph on the rest.  :func:`find_hamiltonian` screens for both,
then repeatedly grows a maximal path, closes it into a cycle on the same
vertex set with one of three chord exchanges, and reopens the cycle through
an outside vertex, until the cycle covers the graph.

Paths and cycles are plain tuples of vertex ids.  A path ``x0 .. xk`` is
indexed by position; ``k`` is its last position.  All scans stop at the
first hit in the documented loop order, so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .graph import (
    Graph,
    complement,
    connected_components,
    count_components,
    find_cut_vertex,
    is_independent,
)

__all__ = [
    "BigIndependentComponent",
    "Certificate",
    "CutVertex",
    "Disconnected",
    "EndpointPartition",
    "NoBoundaryEdge",
    "RotationExhausted",
    "SolveOutcome",
    "cycle_violation",
    "endpoint_partition",
    "extend_to_maximal_path",
    "find_hamiltonian",
    "is_maximal_path",
    "make_cycle",
    "make_type_a_cycle",
    "make_type_b_cycle",
    "make_type_c_cycle",
    "precheck_exceptional",
    "reopen_cycle",
    "verify_cycle",
]

Path = tuple[int, ...]
Cycle = tuple[int, ...]


class NoBoundaryEdge(ValueError):
    """A cycle has no edge leaving it, so it cannot be reopened."""


# certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class CutVertex:
    vertex: int

    def holds(self, G: Graph) -> bool:
        return 0 <= self.vertex < G.n and count_components(G, [self.vertex]) > count_components(G)


@dataclass(frozen=True)
class BigIndependentComponent:
    """An independent set of more than n/2 vertices that is a component of the complement."""

    vertices: tuple[int, ...]

    def holds(self, G: Graph) -> bool:
        S = self.vertices
        if len(set(S)) != len(S) or not all(0 <= v < G.n for v in S):
            return False
        if 2 * len(S) <= G.n or not is_independent(G, S):
            return False
        # S is a clique of the complement, hence connected there; it is a
        # whole component iff no complement edge leaves it.
        outside = np.ones(G.n, dtype=bool)
        outside[list(S)] = False
        return bool(G.adjacency[np.ix_(list(S), np.flatnonzero(outside))].all())


@dataclass(frozen=True)
class RotationExhausted:
    """A maximal path that none of the three closures could turn into a cycle."""

    path: Path

    def holds(self, G: Graph) -> bool:
        return _is_path(G, self.path) and is_maximal_path(G, self.path) and make_cycle(G, self.path) is None


@dataclass(frozen=True)
class Disconnected:
    """One connected component of a graph that has more than one."""

    component: tuple[int, ...]

    def holds(self, G: Graph) -> bool:
        C = self.component
        if not C or len(C) >= G.n or len(set(C)) != len(C) or not all(0 <= v < G.n for v in C):
            return False
        labels = connected_components(G).labels
        return {labels[v] for v in C} == {labels[C[0]]} and labels.count(labels[C[0]]) == len(C)


Certificate = Union[CutVertex, BigIndependentComponent, RotationExhausted, Disconnected]


@dataclass(frozen=True)
class SolveOutcome:
    """Either a Hamiltonian ``cycle`` or a ``certificate`` of failure."""

    cycle: Cycle | None = None
    certificate: Certificate | None = None

    @property
    def is_hamiltonian(self) -> bool:
        return self.cycle is not None

    def validate(self, G: Graph) -> bool:
        if self.cycle is not None:
            return self.certificate is None and verify_cycle(G, self.cycle)
        return self.certificate is not None and self.certificate.holds(G)


# paths and cycles -----------------------------------------------------------

def _is_path(G: Graph, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path) or not all(0 <= v < G.n for v in path):
        return False
    adj = G.adjacency
    return all(adj[a, b] for a, b in zip(path, path[1:]))


def _require_path(G: Graph, path: Sequence[int]) -> list[int]:
    p = [int(v) for v in path]
    if not _is_path(G, p):
        raise ValueError(f"not a path of the graph: {tuple(p)}")
    return p


def is_maximal_path(G: Graph, path: Sequence[int]) -> bool:
    """True when neither endpoint has a neighbor off the path."""
    inside = np.zeros(G.n, dtype=bool)
    inside[list(path)] = True
    adj = G.adjacency
    return not (adj[path[0]] & ~inside).any() and not (adj[path[-1]] & ~inside).any()


def cycle_violation(G: Graph, cycle: Sequence[int]) -> str | None:
    """Describe the first reason ``cycle`` is not a Hamiltonian cycle of ``G``."""
    n = G.n
    seen = set()
    for v in cycle:
        if not 0 <= v < n:
            return f"vertex out of range {v}"
        if v in seen:
            return f"repeated vertex {v}"
        seen.add(v)
    for v in range(n):
        if v not in seen:
            return f"missing vertex {v}"
    if n < 3:
        return f"no cycle on {n} vertices"
    adj = G.adjacency
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if not adj[a, b]:
            return f"non-adjacent pair {a} {b}"
    return None


def verify_cycle(G: Graph, cycle: Sequence[int]) -> bool:
    return cycle_violation(G, cycle) is None


def extend_to_maximal_path(G: Graph, path: Sequence[int]) -> Path:
    """Grow ``path`` greedily until neither endpoint has an outside neighbor.

    The front endpoint is extended first; each step takes the smallest
    eligible neighbor.
    """
    p = deque(_require_path(G, path))
    adj = G.adjacency
    outside = np.ones(G.n, dtype=bool)
    outside[list(p)] = False
    while True:
        fresh = adj[p[0]] & outside
        if fresh.any():
            w = int(fresh.argmax())
            p.appendleft(w)
        else:
            fresh = adj[p[-1]] & outside
            if not fresh.any():
                return tuple(p)
            w = int(fresh.argmax())
            p.append(w)
        outside[w] = False


# closures -------------------------------------------------------------------

def _endpoint_rows(G: Graph, p: list[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pa = np.asarray(p)
    adj = G.adjacency
    return pa, adj[p[0], pa], adj[p[-1], pa]


def make_type_a_cycle(G: Graph, path: Sequence[int]) -> Cycle | None:
    """Close ``path`` with chords x0-x(i+1), xi-x(j+1), xj-xk.

    Scans i in [0, k-2], then j in [i+1, k-1], and returns
    x0..xi, x(j+1)..xk, xj..x(i+1).  With i = 0, j = k-1 the conditions
    reduce to x0 ~ xk, so a path with adjacent endpoints always closes here.
    The j = i+1 case reverses a single vertex; it is needed when the
    neighbor of x0 and the neighbor of xk sit one position apart.
    """
    p = _require_path(G, path)
    k = len(p) - 1
    if k < 2:
        return None
    adj = G.adjacency
    pa, to_first, to_last = _endpoint_rows(G, p)
    for i in range(k - 1):
        if not to_first[i + 1]:
            continue
        # hits[t] <=> j = i + 1 + t satisfies xi ~ x(j+1) and xj ~ xk
        hits = adj[p[i], pa[i + 2 :]] & to_last[i + 1 : k]
        if hits.any():
            j = i + 1 + int(hits.argmax())
            return tuple(p[: i + 1] + p[j + 1 :] + p[j:i:-1])
    return None


def make_type_b_cycle(G: Graph, path: Sequence[int]) -> Cycle | None:
    """Reroute around an interior vertex xi with x0 ~ x(i+1) and x(i-1) ~ xk.

    For each such i in [1, k-2], look for consecutive xj, x(j+1) both
    adjacent to xi: first j in [i+1, k-1], giving
    x0..x(i-1), xk..x(j+1), xi, xj..x(i+1); then j in [1, i-2], giving
    x0..xj, xi, x(j+1)..x(i-1), xk..x(i+1).
    """
    p = _require_path(G, path)
    k = len(p) - 1
    if k < 3:
        return None
    adj = G.adjacency
    pa, to_first, to_last = _endpoint_rows(G, p)
    for i in range(1, k - 1):
        if not (to_first[i + 1] and to_last[i - 1]):
            continue
        row = adj[p[i], pa]
        pairs = row[:-1] & row[1:]  # pairs[j]: xi ~ xj and xi ~ x(j+1)
        after = pairs[i + 1 : k]
        if after.any():
            j = i + 1 + int(after.argmax())
            return tuple(p[:i] + p[k:j:-1] + [p[i]] + p[j:i:-1])
        before = pairs[1 : i - 1]
        if before.any():
            j = 1 + int(before.argmax())
            return tuple(p[: j + 1] + [p[i]] + p[j + 1 : i] + p[k:i:-1])
    return None


def make_type_c_cycle(G: Graph, path: Sequence[int]) -> Cycle | None:
    """Insert one endpoint between two consecutive neighbors.

    If x0 ~ x(k-1), place xk between xi and x(i+1) for the first i in
    [0, k-2] adjacent to it on both sides.  Failing that, if xk ~ x1, place
    x0 between xi and x(i+1) for the first such i in [1, k-1].
    """
    p = _require_path(G, path)
    k = len(p) - 1
    if k < 2:
        return None
    adj = G.adjacency
    pa, to_first, to_last = _endpoint_rows(G, p)
    if adj[p[0], p[k - 1]]:
        pairs = to_last[:-1] & to_last[1:]
        hits = pairs[: k - 1]
        if hits.any():
            i = int(hits.argmax())
            return tuple(p[: i + 1] + [p[k]] + p[i + 1 : k])
    if adj[p[k], p[1]]:
        pairs = to_first[:-1] & to_first[1:]
        hits = pairs[1:k]
        if hits.any():
            i = 1 + int(hits.argmax())
            return tuple(p[1 : i + 1] + [p[0]] + p[i + 1 :])
    return None


def make_cycle(G: Graph, path: Sequence[int]) -> Cycle | None:
    """Cycle on exactly the vertices of a maximal path, or ``None``."""
    for closure in (make_type_a_cycle, make_type_b_cycle, make_type_c_cycle):
        cycle = closure(G, path)
        if cycle is not None:
            return cycle
    return None


def reopen_cycle(G: Graph, cycle: Sequence[int]) -> Path:
    """Break ``cycle`` open through an edge to an outside vertex.

    Takes the lexicographically smallest edge (u, w) with u on the cycle and
    w off it, drops the cycle edge from u to its successor, and returns
    w, u, pred(u), ..., succ(u).
    """
    c = [int(v) for v in cycle]
    if len(c) >= G.n:
        raise ValueError("cycle already covers every vertex")
    adj = G.adjacency
    outside = np.ones(G.n, dtype=bool)
    outside[c] = False
    for u in sorted(c):
        fresh = adj[u] & outside
        if fresh.any():
            w = int(fresh.argmax())
            break
    else:
        raise NoBoundaryEdge(f"no edge leaves the cycle {tuple(c)}")
    at = c.index(u)
    rotated = c[at:] + c[:at]
    return (w, u, *reversed(rotated[1:]))


# exceptional families -------------------------------------------------------

def precheck_exceptional(G: Graph) -> Certificate | None:
    """Certificate for the two exceptional families, if ``G`` is one of them.

    Reports a cut vertex first, then a complement component of more than
    n/2 vertices that is independent in ``G``.  Disconnected graphs with
    neither are reported with one of their components.
    """
    if G.n < 3:
        raise ValueError(f"need at least 3 vertices, got {G.n}")
    v = find_cut_vertex(G)
    if v is not None:
        return CutVertex(v)
    biggest = connected_components(complement(G)).largest()
    if 2 * len(biggest) > G.n and is_independent(G, biggest):
        return BigIndependentComponent(biggest)
    components = connected_components(G)
    if components.count > 1:
        return Disconnected(components.members(0))
    return None


@dataclass(frozen=True)
class EndpointPartition:
    """Interior vertices of a maximal path classified by endpoint adjacency.

    ``first_only`` are adjacent to x0 only, ``last_only`` to xk only,
    ``both`` to both endpoints and ``neither`` to none.
    """

    first_only: frozenset[int]
    last_only: frozenset[int]
    both: frozenset[int]
    neither: frozenset[int]

    def label(self, v: int) -> str:
        for name in ("first_only", "last_only", "both", "neither"):
            if v in getattr(self, name):
                return name
        raise KeyError(v)


def endpoint_partition(G: Graph, path: Sequence[int]) -> EndpointPartition:
    p = _require_path(G, path)
    if not is_maximal_path(G, p):
        raise ValueError("path is not maximal")
    if len(p) < 2 or G.adjacency[p[0], p[-1]]:
        raise ValueError("path endpoints must be distinct and non-adjacent")
    adj = G.adjacency
    first, last = p[0], p[-1]
    a0, ak, a0k, none = set(), set(), set(), set()
    for v in p[1:-1]:
        to_first, to_last = adj[first, v], adj[last, v]
        if to_first and to_last:
            a0k.add(v)
        elif to_first:
            a0.add(v)
        elif to_last:
            ak.add(v)
        else:
            none.add(v)
    return EndpointPartition(frozenset(a0), frozenset(ak), frozenset(a0k), frozenset(none))


# driver ---------------------------------------------------------------------

StepHook = Callable[[Path, Union[Cycle, None]], None]


def find_hamiltonian(G: Graph, on_step: StepHook | None = None) -> SolveOutcome:
    """Hamiltonian cycle of ``G`` or a certificate that none was found.

    For ``min_degree(G) >= n // 2`` the outcome is a cycle unless ``G`` is
    exceptional, in which case the certificate is a cut vertex or an
    oversized independent set.  Other inputs are processed best effort and
    may end in :class:`RotationExhausted`.

    ``on_step`` is called with every maximal path handed to the closures
    and the cycle they produced (``None`` on failure).
    """
    n = G.n
    cert = precheck_exceptional(G)
    if cert is not None:
        return SolveOutcome(certificate=cert)
    path: Path = (0,)
    for _ in range(n):
        path = extend_to_maximal_path(G, path)
        cycle = make_cycle(G, path)
        if on_step is not None:
            on_step(path, cycle)
        if cycle is None:
            return SolveOutcome(certificate=RotationExhausted(path))
        if len(cycle) == n:
            return SolveOutcome(cycle=cycle)
        path = reopen_cycle(G, cycle)
    raise RuntimeError("path failed to grow")  # each reopen adds a vertex
