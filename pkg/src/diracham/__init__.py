"""Hamiltonian cycles for graphs with minimum degree at least floor(n/2)."""

from .formats import decode_dimacs, decode_graph6, encode_dimacs, encode_graph6
from .generators import (
    GenSpec,
    enumerate_labeled_graphs,
    gen_exceptional_a,
    gen_exceptional_b,
    gen_random_min_degree,
)
from .graph import (
    Graph,
    GraphError,
    build_graph,
    complement,
    connected_components,
    degree,
    find_cut_vertex,
    is_clique,
    min_degree,
)
from .hamiltonian import (
    BigIndependentComponent,
    CutVertex,
    Disconnected,
    RotationExhausted,
    SolveOutcome,
    endpoint_partition,
    extend_to_maximal_path,
    find_hamiltonian,
    make_cycle,
    make_type_a_cycle,
    make_type_b_cycle,
    make_type_c_cycle,
    precheck_exceptional,
    reopen_cycle,
    verify_cycle,
)
from .oracle import oracle_hamiltonian

__all__ = [
    "BigIndependentComponent",
    "CutVertex",
    "Disconnected",
    "GenSpec",
    "Graph",
    "GraphError",
    "RotationExhausted",
    "SolveOutcome",
    "build_graph",
    "complement",
    "connected_components",
    "decode_dimacs",
    "decode_graph6",
    "degree",
    "encode_dimacs",
    "encode_graph6",
    "endpoint_partition",
    "enumerate_labeled_graphs",
    "extend_to_maximal_path",
    "find_cut_vertex",
    "find_hamiltonian",
    "gen_exceptional_a",
    "gen_exceptional_b",
    "gen_random_min_degree",
    "is_clique",
    "make_cycle",
    "make_type_a_cycle",
    "make_type_b_cycle",
    "make_type_c_cycle",
    "min_degree",
    "oracle_hamiltonian",
    "precheck_exceptional",
    "reopen_cycle",
    "verify_cycle",
]

__version__ = "0.1.0"
