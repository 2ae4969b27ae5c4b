"""Partial Laplacian eigenvalue sums, perturbed additive compounds and token graphs.

Builds L(G), Q(G), additive compounds, the perturbed compound
M_k(G) = L(G)^[k] - D_k(G) and token-graph Laplacians, computes the three
excesses eps_k, teps_k and epsT_k, and checks them against the known bounds
and open conjectures over small graphs.
"""
from .compound import (
    CompoundMatrix, SubsetIndexer, additive_compound, diag_perturbation, m_k_block_union,
    m_k_direct, m_k_via_compound, sign_pair,
)
from .config import DEFAULT_CAP, DEFAULT_VIOLATION_TOL
from .errors import CapExceededError, EigenSolverError, GraphFormatError, TheoremViolationError
from .excess import (
    BoundRecord, ExcessReport, bound_specs, eps_k, eps_token_k, evaluate_bounds, teps_k,
    teps_star_closed_form, verify_disjoint_union_formula, verify_subadditivity,
)
from .graphs import (
    Bipartition, Graph, complete, conjugate_degree_sum, covering_number, cycle, decode_graph6,
    disjoint_union, empty, encode_graph6, erdos_renyi, format_edge_list, is_bipartite,
    is_clique_free, matching_graph, matching_number, max_induced_edges, minimum_vertex_cover,
    parse_edge_list, path, star, star_cover_decomposition, turan, turan_number,
)
from .harness import SearchConfig, SearchSummary, run_search
from .spectral import (
    eigenvalues_sym, kronecker_sum, laplacian, signless_laplacian, spectral_atol, top_k_sum,
)
from .token import TokenGraph, token_graph, token_laplacian, token_signless_laplacian

__version__ = "0.1.0"
