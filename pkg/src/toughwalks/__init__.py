"""Edge-dominating cycles, k-walks and Hamiltonian prisms for 2K2-free graphs,
with brute-force oracles for every witness."""

from .domcycle import GrowthTrace, find_edge_dominating_cycle, find_edge_dominating_cycle_with_triangle
from .errors import *  # noqa: F401,F403
from .generators import (
    corpus,
    fixture_net,
    gen_2k2_free_perturbed,
    gen_3k2_free,
    gen_complete_multipartite,
    gen_split_graph,
)
from .graph_core import (
    Cycle,
    CycleW,
    EdgeW,
    Graph,
    PrismGraph,
    VertexW,
    connected_components,
    find_any_cycle,
    prism,
)
from .kwalk import (
    CapacitatedMatching,
    HallViolator,
    KWalk,
    ToughnessCertificate,
    build_k_walk,
    capacitated_matching,
    minimal_construction_k,
)
from .prism_cycles import Failure, PrismCycle, prism_ham_even, prism_ham_odd, prism_hamiltonian
from .recognition import InducedMatchingWitness, Triangle, find_induced_lk2, find_triangle, is_2k2_free

__version__ = "0.1.0"
