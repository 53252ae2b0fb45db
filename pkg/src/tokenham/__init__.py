"""Token graphs F_k(G), multiset token graphs M_k(G), and Hamiltonian cycles
in F_2 / M_2 of fan graphs and joins."""

from .errors import (
    ConstructionInvalid,
    InvalidCut,
    InvalidEdge,
    InvalidHamPath,
    InvalidK,
    InvalidOrder,
    InvalidPair,
    InvalidVertex,
    RangeExceeded,
    TokenHamError,
)
from .fanham import (
    CutCert,
    FanHamResult,
    HamCycleCert,
    decide_f2_fan,
    decide_m2_fan,
    f2_fan_cycle,
    f2_fan_paths,
    f2_t_paths,
    lift_to_join,
    m2_fan_cycle,
    m2_fan_paths,
    m2_tprime_paths,
)
from .graph import (
    FanLabeling,
    Graph,
    complete_bipartite,
    complete_graph,
    count_components,
    cycle_graph,
    delete_vertices,
    empty_graph,
    fan,
    join,
    make_graph,
    path_graph,
)
from .oracle import (
    OracleOutcome,
    brute_force_hamiltonian,
    hamiltonian_path,
    verify_cut_certificate,
    verify_hamiltonian_cycle,
)
from .tokens import (
    TokenGraph,
    adjacent_tokens,
    enumerate_tokens,
    multiset_token_graph,
    rank_token,
    token_graph,
    unrank_token,
)

__version__ = "0.1.0"
