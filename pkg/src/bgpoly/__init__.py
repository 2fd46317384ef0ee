"""Symmetric edge-type polytopes B_G: exact h*-polynomials, interior polynomials and poset bridges."""

__version__ = "0.1.0"

from .limits import BgpolyError, InputError, IntegrityError, ResourceLimitError, budget, set_budget
from .poly import (
    GammaVector, IntPolynomial, RootCountCertificate, gamma_extract, gamma_substitute, interlaces,
    is_log_concave, is_palindromic, is_real_rooted, is_unimodal, real_root_certificate,
)
from .graphs import (
    Bipartition, Graph, LoopGraph, MatchingProfile, bg_occ, bipartition, chordless_cycles, complement,
    components, hat, is_bipartite, is_bipartite_permutation, is_chordal_bipartite, matching_profile,
    parse_edge_list, satisfies_occ, tilde,
)
from .polytope import (
    EhrhartData, Halfspace, LatticePolytope, build_bg, edge_polytope, ehrhart_hstar, facet_description,
    is_idp, is_reflexive, lattice_points, normalized_volume, orthant_restriction,
)
from .interior import (
    Hypergraph, hstar_bg_fast, hstar_bg_subgraph_formula, hypergraph_from_bipartite, hypertrees,
    interior_hat_via_matchings, interior_polynomial_oracle,
)
from .posets import (
    Poset, complement_comparability_graph, eulerian_polynomial, kpq_hstar, order_polynomial_values,
    parse_poset, two_chain_poset,
)

__all__ = [
    "BgpolyError",
    "InputError",
    "IntegrityError",
    "ResourceLimitError",
    "budget",
    "set_budget",
    "GammaVector",
    "IntPolynomial",
    "RootCountCertificate",
    "gamma_extract",
    "gamma_substitute",
    "interlaces",
    "is_log_concave",
    "is_palindromic",
    "is_real_rooted",
    "is_unimodal",
    "real_root_certificate",
    "Bipartition",
    "Graph",
    "LoopGraph",
    "MatchingProfile",
    "bg_occ",
    "bipartition",
    "chordless_cycles",
    "complement",
    "components",
    "hat",
    "is_bipartite",
    "is_bipartite_permutation",
    "is_chordal_bipartite",
    "matching_profile",
    "parse_edge_list",
    "satisfies_occ",
    "tilde",
    "EhrhartData",
    "Halfspace",
    "LatticePolytope",
    "build_bg",
    "edge_polytope",
    "ehrhart_hstar",
    "facet_description",
    "is_idp",
    "is_reflexive",
    "lattice_points",
    "normalized_volume",
    "orthant_restriction",
    "Hypergraph",
    "hstar_bg_fast",
    "hstar_bg_subgraph_formula",
    "hypergraph_from_bipartite",
    "hypertrees",
    "interior_hat_via_matchings",
    "interior_polynomial_oracle",
    "Poset",
    "complement_comparability_graph",
    "eulerian_polynomial",
    "kpq_hstar",
    "order_polynomial_values",
    "parse_poset",
    "two_chain_poset",
]
