"""Brute-force ground truth for small graphs.

Nothing here uses the solver.  The oracle searches Hamiltonian cycles by
backtracking over int bitmasks; the family recognizers test the two
exceptional shapes by trying every candidate vertex subset.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

__all__ = ["ORACLE_MAX_N", "OracleSizeError", "is_family_a", "is_family_b", "oracle_hamiltonian"]

ORACLE_MAX_N = 14


class OracleSizeError(ValueError):
    pass


def _bitmask_rows(G: Graph) -> list[int]:
    rows = [0] * G.n
    for u, v in G.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def oracle_hamiltonian(G: Graph) -> tuple[int, ...] | None:
    """A Hamiltonian cycle of ``G`` found by exhaustive search, or ``None``.

    Cycles are anchored at vertex 0 and read in the direction where the
    second vertex has a smaller id than the last one, which halves the
    search without losing any cycle.  States ``(current vertex, visited
    set)`` known to be dead ends are remembered per choice of second vertex.
    """
    n = G.n
    if n > ORACLE_MAX_N:
        raise OracleSizeError(f"oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    if n < 3:
        return None
    rows = _bitmask_rows(G)
    full = (1 << n) - 1

    for second in range(1, n):
        if not rows[0] >> second & 1:
            continue
        closing = rows[0] & ~((1 << (second + 1)) - 1)
        if not closing:
            continue
        dead: set[tuple[int, int]] = set()
        path = [0, second]

        def search(v: int, visited: int) -> bool:
            if visited == full:
                return bool(closing >> v & 1)
            if (v, visited) in dead:
                return False
            options = rows[v] & ~visited
            while options:
                low = options & -options
                options ^= low
                w = low.bit_length() - 1
                path.append(w)
                if search(w, visited | low):
                    return True
                path.pop()
            dead.add((v, visited))
            return False

        if search(second, 1 | 1 << second):
            return tuple(path)
    return None


def _clique(rows: list[int], vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all((rows[v] | 1 << v) & mask == mask for v in vertices)


def is_family_a(G: Graph) -> bool:
    """Two cliques of r + 1 vertices sharing exactly one vertex, n = 2r + 1."""
    n = G.n
    if n < 3 or n % 2 == 0:
        return False
    r = n // 2
    rows = _bitmask_rows(G)
    for shared in range(n):
        rest = [v for v in range(n) if v != shared]
        for side in combinations(rest, r):
            other = [v for v in rest if v not in side]
            if side[0] > other[0]:
                continue
            if not (_clique(rows, side + (shared,)) and _clique(rows, other + [shared])):
                continue
            other_mask = sum(1 << v for v in other)
            if all(rows[v] & other_mask == 0 for v in side):
                return True
    return False


def is_family_b(G: Graph) -> bool:
    """An independent set of r + 1 vertices adjacent to all other r vertices, n = 2r + 1."""
    n = G.n
    if n < 3 or n % 2 == 0:
        return False
    r = n // 2
    rows = _bitmask_rows(G)
    full = (1 << n) - 1
    for side in combinations(range(n), r + 1):
        mask = sum(1 << v for v in side)
        if all(rows[v] == full & ~mask for v in side):
            return True
    return False
