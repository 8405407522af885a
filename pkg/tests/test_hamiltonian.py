from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import (
    all_maximal_paths,
    bowtie,
    closes,
    complete_graph,
    cycle_graph,
    graphs,
    k23,
    path_plus,
    random_graph,
    random_maximal_path,
    same_cycle,
)
from diracham.generators import (
    enumerate_labeled_graphs,
    gen_exceptional_a,
    gen_exceptional_b,
    gen_random_min_degree,
)
from diracham.graph import Graph, count_components
from diracham.hamiltonian import (
    BigIndependentComponent,
    CutVertex,
    Disconnected,
    NoBoundaryEdge,
    RotationExhausted,
    cycle_violation,
    endpoint_partition,
    extend_to_maximal_path,
    find_hamiltonian,
    is_maximal_path,
    make_cycle,
    make_type_a_cycle,
    make_type_b_cycle,
    make_type_c_cycle,
    precheck_exceptional,
    reopen_cycle,
    verify_cycle,
)

CLOSURES = (make_type_a_cycle, make_type_b_cycle, make_type_c_cycle)


def type_a_possible(G, p):
    """Any chord pair x0~x(i+1), xi~x(j+1), xj~xk with i < j, by plain loops."""
    k = len(p) - 1
    return any(
        G.has_edge(p[0], p[i + 1]) and G.has_edge(p[i], p[j + 1]) and G.has_edge(p[j], p[k])
        for i in range(k)
        for j in range(i + 1, k)
    )


# prechecks --------------------------------------------------------------------

def test_precheck_examples():
    assert precheck_exceptional(bowtie()) == CutVertex(2)
    assert precheck_exceptional(k23()) == BigIndependentComponent((2, 3, 4))
    assert precheck_exceptional(cycle_graph(5)) is None


def test_precheck_strict_half():
    # K_{3,3}: independent sides of exactly n/2 are not exceptional
    G = Graph(6, [(s, t) for s in range(3) for t in range(3, 6)])
    assert precheck_exceptional(G) is None
    assert find_hamiltonian(G).is_hamiltonian


def test_precheck_disconnected():
    G = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    cert = precheck_exceptional(G)
    assert cert == Disconnected((0, 1, 2))
    assert cert.holds(G)


def test_precheck_small_n():
    with pytest.raises(ValueError):
        precheck_exceptional(Graph(2, [(0, 1)]))


# verification -------------------------------------------------------------------

def test_verify_examples():
    C5 = cycle_graph(5)
    assert verify_cycle(C5, (0, 1, 2, 3, 4))
    assert not verify_cycle(C5, (0, 2, 1, 3, 4))
    assert cycle_violation(C5, (0, 2, 1, 3, 4)).startswith("non-adjacent pair")
    assert not verify_cycle(complete_graph(4), (0, 1, 2))
    assert cycle_violation(complete_graph(4), (0, 1, 2)) == "missing vertex 3"
    assert cycle_violation(C5, (0, 1, 2, 3, 3)) == "repeated vertex 3"
    assert cycle_violation(C5, (0, 1, 2, 3, 9)) == "vertex out of range 9"


# extension ----------------------------------------------------------------------

def test_extend_examples():
    P = extend_to_maximal_path(complete_graph(4), [0])
    assert sorted(P) == [0, 1, 2, 3] and is_maximal_path(complete_graph(4), P)
    C5 = cycle_graph(5)
    assert extend_to_maximal_path(C5, [2]) == (3, 4, 0, 1, 2)
    P = (0, 1, 2, 3, 4)
    assert extend_to_maximal_path(C5, P) == P


def test_extend_rejects_non_path():
    with pytest.raises(ValueError):
        extend_to_maximal_path(cycle_graph(5), [0, 2])


@settings(max_examples=100)
@given(graphs(min_n=1, max_n=25))
def test_extend_is_maximal_superpath(G):
    for start in range(min(G.n, 3)):
        P = extend_to_maximal_path(G, [start])
        assert is_maximal_path(G, P) and start in P
        assert all(G.has_edge(a, b) for a, b in zip(P, P[1:]))


# closures: examples ---------------------------------------------------------------

def test_type_a_adjacent_endpoints():
    cycle = make_type_a_cycle(cycle_graph(4), (0, 1, 2, 3))
    assert same_cycle(cycle, (0, 1, 2, 3))


def test_type_a_chords():
    G = path_plus(6, [(0, 2), (1, 4), (3, 5)])
    cycle = make_type_a_cycle(G, range(6))
    assert cycle == (0, 1, 4, 5, 3, 2)
    assert closes(G, cycle)


def test_type_a_consecutive_chord():
    # closure through x(i+1) alone: x0~x2, x1~x3, x2~x3 with i=1, j=2
    G = path_plus(4, [(0, 2), (1, 3)])
    cycle = make_type_a_cycle(G, range(4))
    assert closes(G, cycle) and sorted(cycle) == [0, 1, 2, 3]


def test_type_a_bowtie_absent():
    assert make_type_a_cycle(bowtie(), range(5)) is None
    assert not type_a_possible(bowtie(), range(5))


def test_type_b_example():
    G = path_plus(5, [(0, 3), (1, 4), (2, 4)])
    cycle = make_type_b_cycle(G, range(5))
    assert cycle == (0, 1, 4, 2, 3)
    assert closes(G, cycle)


def test_type_b_mirrored():
    G = path_plus(7, [(0, 5), (3, 6), (4, 1), (4, 2)])
    cycle = make_type_b_cycle(G, range(7))
    assert cycle == (0, 1, 4, 2, 3, 6, 5)
    assert closes(G, cycle)


def test_type_b_guard_closed():
    # no interior vertex with x0~x(i+1) and x(i-1)~xk
    G = path_plus(5, [(0, 2), (1, 3)])
    assert make_type_b_cycle(G, range(5)) is None


def test_type_c_first_branch():
    G = path_plus(5, [(0, 3), (4, 1), (4, 2)])
    cycle = make_type_c_cycle(G, range(5))
    assert cycle == (0, 1, 4, 2, 3)
    assert closes(G, cycle)


def test_type_c_second_branch():
    G = path_plus(5, [(4, 1), (0, 2), (0, 3)])
    cycle = make_type_c_cycle(G, range(5))
    # first qualifying i is 1; i = 2 would give (1, 2, 0, 3, 4)
    assert cycle == (1, 0, 2, 3, 4)
    assert closes(G, cycle) and closes(G, (1, 2, 0, 3, 4))


def test_type_c_guards_closed():
    G = path_plus(5, [(0, 2), (2, 4)])
    assert make_type_c_cycle(G, range(5)) is None


def test_make_cycle_degenerate():
    assert same_cycle(make_cycle(cycle_graph(6), range(6)), range(6))


def test_make_cycle_prefers_b_when_a_absent():
    G = path_plus(6, [(0, 3), (1, 5), (2, 4)])
    assert not type_a_possible(G, range(6))
    assert make_type_a_cycle(G, range(6)) is None
    assert make_cycle(G, range(6)) == (0, 1, 5, 4, 2, 3)
    assert closes(G, (0, 1, 5, 4, 2, 3))


def test_make_cycle_falls_to_c():
    G = path_plus(6, [(0, 3), (0, 4), (1, 5)])
    assert not type_a_possible(G, range(6))
    assert make_type_b_cycle(G, range(6)) is None
    assert make_cycle(G, range(6)) == (1, 2, 3, 0, 4, 5)
    assert closes(G, (1, 2, 3, 0, 4, 5))


def test_make_cycle_bowtie_absent():
    spanning = [P for P in all_maximal_paths(bowtie()) if len(P) == 5]
    assert (0, 1, 2, 3, 4) in spanning
    for P in spanning:
        assert make_cycle(bowtie(), P) is None
    # short maximal paths such as 0-2-1 may still close into a triangle
    assert make_cycle(bowtie(), (0, 2, 1)) is not None


# closures: properties -------------------------------------------------------------

def test_rotation_soundness_random(rng):
    for _ in range(2000):
        G = random_graph(rng, int(rng.integers(3, 16)), rng.random())
        P = random_maximal_path(G, rng)
        for closure in CLOSURES:
            cycle = closure(G, P)
            if cycle is not None:
                assert closes(G, cycle) and sorted(cycle) == sorted(P)


def test_degenerate_closure_always_fires(rng):
    for _ in range(500):
        G = random_graph(rng, int(rng.integers(3, 14)), rng.random())
        P = random_maximal_path(G, rng)
        if len(P) >= 3 and G.has_edge(P[0], P[-1]):
            assert make_type_a_cycle(G, P) is not None


FORBIDDEN = {("last_only", "first_only"), ("last_only", "both"), ("both", "first_only"), ("both", "both")}


def test_forbidden_patterns(rng):
    seen = 0
    for _ in range(4000):
        G = random_graph(rng, int(rng.integers(4, 14)), rng.random() * 0.6)
        P = random_maximal_path(G, rng)
        if len(P) < 4 or make_cycle(G, P) is not None:
            continue
        seen += 1
        part = endpoint_partition(G, P)
        interior = P[1:-1]
        for a, b in zip(interior, interior[1:]):
            assert (part.label(a), part.label(b)) not in FORBIDDEN
    assert seen > 100


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_every_maximal_path_closes(n):
    for G in enumerate_labeled_graphs(n, n // 2):
        if precheck_exceptional(G) is None:
            for P in all_maximal_paths(G):
                assert make_cycle(G, P) is not None


def test_random_maximal_paths_close(rng):
    for seed in range(60):
        n = int(rng.integers(8, 40))
        G = gen_random_min_degree(n, seed)
        for _ in range(20):
            assert make_cycle(G, random_maximal_path(G, rng)) is not None


def _hamiltonian_paths(G):
    for perm in permutations(range(G.n)):
        if all(G.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            yield perm


@pytest.mark.parametrize(
    "G", [gen_exceptional_a(r) for r in (1, 2, 3)] + [gen_exceptional_b(r, p, 1) for r in (1, 2, 3) for p in (0, 0.5, 1)]
)
def test_no_closing_chord_pairs_on_exceptional(G):
    for P in _hamiltonian_paths(G):
        k = len(P) - 1
        for i in range(1, k + 1):
            if G.has_edge(P[0], P[i]):
                assert not G.has_edge(P[k], P[i - 1])


# endpoint partition -----------------------------------------------------------

def test_partition_bowtie():
    part = endpoint_partition(bowtie(), (0, 1, 2, 3, 4))
    assert part.first_only == {1} and part.last_only == {3}
    assert part.both == {2} and part.neither == frozenset()


def test_partition_k23():
    part = endpoint_partition(k23(), (2, 0, 3, 1, 4))
    assert part.both == {0, 1} and part.neither == {3}
    assert not part.first_only and not part.last_only


def test_partition_rejects():
    with pytest.raises(ValueError):
        endpoint_partition(cycle_graph(5), (0, 1, 2, 3, 4))  # adjacent endpoints
    with pytest.raises(ValueError):
        endpoint_partition(bowtie(), (0, 1, 2))  # not maximal


def test_partition_covers_interior(rng):
    for _ in range(500):
        G = random_graph(rng, int(rng.integers(4, 14)), rng.random() * 0.5)
        P = random_maximal_path(G, rng)
        if len(P) < 3 or G.has_edge(P[0], P[-1]):
            continue
        part = endpoint_partition(G, P)
        sets = [part.first_only, part.last_only, part.both, part.neither]
        assert sum(map(len, sets)) == len(P) - 2
        assert frozenset().union(*sets) == set(P[1:-1])
        N0, Nk = set(G.neighbors(P[0])), set(G.neighbors(P[-1]))
        assert part.both == N0 & Nk & set(P)
        assert part.first_only == (N0 - Nk) & set(P[1:-1])


# reopen -----------------------------------------------------------------------

def test_reopen_triangle_in_k4():
    G = complete_graph(4)
    P = reopen_cycle(G, (0, 1, 2))
    assert P == (3, 0, 2, 1)
    assert all(G.has_edge(a, b) for a, b in zip(P, P[1:]))


def test_reopen_preconditions():
    with pytest.raises(ValueError):
        reopen_cycle(complete_graph(3), (0, 1, 2))
    G = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(NoBoundaryEdge):
        reopen_cycle(G, (0, 1, 2))


# driver -----------------------------------------------------------------------

def test_find_examples():
    out = find_hamiltonian(complete_graph(5))
    assert out.is_hamiltonian and verify_cycle(complete_graph(5), out.cycle)
    assert find_hamiltonian(bowtie()).certificate == CutVertex(2)
    assert find_hamiltonian(k23()).certificate == BigIndependentComponent((2, 3, 4))


def test_find_rotation_exhausted_below_threshold():
    # Petersen graph: 3-regular, 2-connected, non-Hamiltonian, far below n/2
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    G = Graph(10, outer + spokes + inner)
    out = find_hamiltonian(G)
    assert isinstance(out.certificate, RotationExhausted)
    assert out.validate(G)


def test_progress_and_determinism():
    for seed in range(20):
        G = gen_random_min_degree(int(40 + seed), seed)
        lengths = []
        out = find_hamiltonian(G, on_step=lambda P, C: lengths.append(len(P)))
        assert lengths == sorted(set(lengths))
        assert out.validate(G) and out.is_hamiltonian
        assert find_hamiltonian(G) == out


def test_progress_with_reopens():
    # random graphs above the threshold rarely need a reopen; sparse ones do
    rng = np.random.default_rng(3)
    reopened = 0
    for _ in range(400):
        G = random_graph(rng, int(rng.integers(6, 20)), 0.35)
        if count_components(G) != 1 or precheck_exceptional(G) is not None:
            continue
        lengths = []
        out = find_hamiltonian(G, on_step=lambda P, C: lengths.append(len(P)))
        assert all(a < b for a, b in zip(lengths, lengths[1:]))
        assert out.validate(G)
        reopened += len(lengths) > 1
    assert reopened > 0


def test_certificates_validate_exceptional():
    for r in range(1, 8):
        A = gen_exceptional_a(r)
        assert find_hamiltonian(A).certificate == CutVertex(r)
        for p in (0, 0.5, 1):
            B = gen_exceptional_b(r, p, r)
            cert = find_hamiltonian(B).certificate
            assert cert == BigIndependentComponent(tuple(range(r + 1))) or (r == 1 and isinstance(cert, CutVertex))
            assert cert.holds(B)
