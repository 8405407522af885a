"""Instance generators: the two exceptional families, seeded random graphs
with a minimum-degree floor, and exhaustive labeled enumeration.

Randomness comes from ``numpy.random.default_rng(seed)``, i.e. the PCG64
bit generator, so a ``(parameters, seed)`` pair always yields the same graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph

__all__ = [
    "ENUMERATE_MAX_N",
    "GenSpec",
    "enumerate_labeled_graphs",
    "gen_exceptional_a",
    "gen_exceptional_b",
    "gen_random_min_degree",
    "labeled_graph_count",
]

ENUMERATE_MAX_N = 7
RANDOM_EDGE_PROBABILITY = 0.6


def gen_exceptional_a(r: int) -> Graph:
    """Cliques on ``0..r`` and ``r..2r``, sharing vertex ``r``."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    left = combinations(range(r + 1), 2)
    right = combinations(range(r, 2 * r + 1), 2)
    return Graph(2 * r + 1, [*left, *right])


def gen_exceptional_b(r: int, inner_p: float = 0.5, seed: int = 0) -> Graph:
    """Independent set ``0..r`` joined to a random graph on ``r+1..2r``.

    Each inner pair, in lexicographic order, is an edge with probability
    ``inner_p``.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if not 0.0 <= inner_p <= 1.0:
        raise ValueError(f"inner edge probability must be in [0, 1], got {inner_p}")
    n = 2 * r + 1
    rng = np.random.default_rng(seed)
    inner = list(combinations(range(r + 1, n), 2))
    keep = rng.random(len(inner)) < inner_p
    cross = [(s, t) for s in range(r + 1) for t in range(r + 1, n)]
    return Graph(n, cross + [e for e, k in zip(inner, keep) if k])


def gen_random_min_degree(n: int, seed: int = 0) -> Graph:
    """Seeded random graph with ``min_degree >= n // 2``.

    Draws each pair with probability 0.6, then while some vertex is below
    the floor, joins the smallest such vertex to a uniformly chosen
    non-neighbor.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < RANDOM_EDGE_PROBABILITY
    adj = np.zeros((n, n), dtype=bool)
    adj[iu[keep], ju[keep]] = True
    adj |= adj.T
    floor = n // 2
    degrees = adj.sum(axis=1)
    while True:
        short = np.flatnonzero(degrees < floor)
        if not short.size:
            break
        v = int(short[0])
        candidates = np.flatnonzero(~adj[v])
        candidates = candidates[candidates != v]
        w = int(candidates[rng.integers(len(candidates))])
        adj[v, w] = adj[w, v] = True
        degrees[v] += 1
        degrees[w] += 1
    return Graph.from_adjacency(adj, check=False)


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(
    n: int,
    min_degree: int | None = None,
    *,
    start: int = 0,
    stop: int | None = None,
    chunk: int = 1 << 16,
) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, once each.

    Graph number ``m`` has edge ``pairs[b]`` iff bit ``b`` of ``m`` is set,
    with ``pairs`` the vertex pairs in lexicographic order.  ``start`` and
    ``stop`` restrict the stream to ``start <= m < stop``, which lets the
    stream be split into independent pieces.  Graphs whose minimum degree
    is below ``min_degree`` are skipped.
    """
    if n > ENUMERATE_MAX_N:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATE_MAX_N}, got {n}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    total = labeled_graph_count(n)
    stop = total if stop is None else min(stop, total)
    pairs = list(combinations(range(n), 2))
    iu = np.array([u for u, _ in pairs], dtype=np.int64)
    ju = np.array([v for _, v in pairs], dtype=np.int64)
    shifts = np.arange(len(pairs), dtype=np.uint32)
    incidence = np.zeros((len(pairs), n), dtype=np.int64)
    incidence[np.arange(len(pairs)), iu] = 1
    incidence[np.arange(len(pairs)), ju] = 1

    for lo in range(start, stop, chunk):
        masks = np.arange(lo, min(lo + chunk, stop), dtype=np.uint32)
        bits = ((masks[:, None] >> shifts) & 1).astype(bool)
        if min_degree is not None and n > 0:
            degrees = bits.astype(np.int64) @ incidence
            bits = bits[degrees.min(axis=1) >= min_degree]
        for row in bits:
            adj = np.zeros((n, n), dtype=bool)
            adj[iu[row], ju[row]] = True
            adj |= adj.T
            yield Graph.from_adjacency(adj, check=False)


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance, printable as a file-name stem.

    ``kind`` is ``"a"``, ``"b"``, ``"random"`` or ``"enumerate"``.
    """

    kind: str
    r: int | None = None
    n: int | None = None
    inner_p: float | None = None
    seed: int | None = None

    def __post_init__(self):
        need = {"a": {"r"}, "b": {"r"}, "random": {"n"}, "enumerate": {"n"}}
        allowed = {"a": {"r"}, "b": {"r", "inner_p", "seed"}, "random": {"n", "seed"}, "enumerate": {"n"}}
        if self.kind not in need:
            raise ValueError(f"unknown family {self.kind!r}")
        given = {f for f in ("r", "n", "inner_p", "seed") if getattr(self, f) is not None}
        if missing := need[self.kind] - given:
            raise ValueError(f"family {self.kind} needs {', '.join(sorted(missing))}")
        if extra := given - allowed[self.kind]:
            raise ValueError(f"family {self.kind} does not take {', '.join(sorted(extra))}")
        if self.r is not None and self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.kind == "random" and self.n < 3:
            raise ValueError(f"need at least 3 vertices, got {self.n}")
        if self.inner_p is not None and not 0.0 <= self.inner_p <= 1.0:
            raise ValueError(f"inner edge probability must be in [0, 1], got {self.inner_p}")

    @property
    def stem(self) -> str:
        if self.kind == "a":
            return f"a-r{self.r}"
        if self.kind == "b":
            return f"b-r{self.r}-p{self._p}-s{self.seed or 0}"
        if self.kind == "random":
            return f"random-n{self.n}-s{self.seed or 0}"
        return f"enumerate-n{self.n}"

    @property
    def _p(self) -> str:
        return format(0.5 if self.inner_p is None else self.inner_p, "g")

    def build(self) -> Graph:
        if self.kind == "a":
            return gen_exceptional_a(self.r)
        if self.kind == "b":
            p = 0.5 if self.inner_p is None else self.inner_p
            return gen_exceptional_b(self.r, p, self.seed or 0)
        if self.kind == "random":
            return gen_random_min_degree(self.n, self.seed or 0)
        raise ValueError("an enumeration spec describes a stream; use enumerate_labeled_graphs")
