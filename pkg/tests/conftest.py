from itertools import combinations

import numpy as np
import pytest
from hypothesis import strategies as st

from diracham import Graph

BOWTIE_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


def k23():
    # sides {0, 1} and {2, 3, 4}
    return Graph(5, [(s, t) for s in (0, 1) for t in (2, 3, 4)])


def path_plus(n, extra):
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + list(extra))


def bowtie():
    return Graph(5, BOWTIE_EDGES)


def random_graph(rng, n, p):
    adj = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_adjacency(adj | adj.T)


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def closes(G, cycle):
    """Independent cycle check: distinct vertices, consecutive pairs are edges."""
    es = edge_set(G)
    return len(set(cycle)) == len(cycle) >= 3 and all(
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) in es for i in range(len(cycle))
    )


def same_cycle(a, b):
    """Equal up to rotation and reflection."""
    a, b = list(a), list(b)
    if len(a) != len(b) or set(a) != set(b):
        return False
    k = b.index(a[0])
    rot = b[k:] + b[:k]
    return rot == a or [rot[0]] + rot[:0:-1] == a


@st.composite
def graphs(draw, min_n=0, max_n=30):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return Graph(n, [e for e, b in zip(combinations(range(n), 2), bits) if b])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_maximal_path(G, rng):
    """Random walk grown at both ends until neither end has an unused neighbour."""
    adj = G.adjacency
    start = int(rng.integers(G.n))
    path = [start]
    used = {start}
    while True:
        ends = [(end, [w for w in np.flatnonzero(adj[path[end]]) if w not in used]) for end in (0, -1)]
        ends = [(end, ws) for end, ws in ends if ws]
        if not ends:
            return tuple(path)
        end, ws = ends[int(rng.integers(len(ends)))]
        w = int(ws[int(rng.integers(len(ws)))])
        used.add(w)
        if end == 0:
            path.insert(0, w)
        else:
            path.append(w)


def all_maximal_paths(G):
    """Every maximal path of G, both directions, by DFS over simple paths."""
    adj = [set(G.neighbors(v)) for v in range(G.n)]
    found = []

    def grow(path, used):
        nxt = adj[path[-1]] - used
        if not nxt and not (adj[path[0]] - used):
            found.append(tuple(path))
        for w in nxt:
            grow(path + [w], used | {w})

    for v in range(G.n):
        grow([v], {v})
    return found
