"""Cayley graph constructions and mechanical verification of strong and
distance regularity, spectra, line-graph structure, and symmetry."""

__version__ = "0.1.0"

from .field import FiniteField
from .groups import (
    ConnectionSet,
    FiniteGroup,
    Word,
    affine_square,
    cyclic,
    direct_product,
    elem_abelian,
    evaluate_word,
    heisenberg,
    is_general_product,
    semidirect,
    subgroup_closure,
    subgroups_of_order,
)
from .graphs import (
    Graph,
    cayley_graph,
    complement,
    line_graph,
    metrics,
    named_graph,
    seidel_switch,
)
from .graph6 import graph6_decode, graph6_encode
from .spectral import (
    IntersectionArray,
    Spectrum,
    SrgParams,
    ia_eigenvalues,
    intersection_array,
    least_eigenvalue_at_least,
    spectrum,
    srg_parameters,
)
from .structure import (
    ConnectionStructureReport,
    KrauszDecomposition,
    cocktail_check,
    connection_structure,
    krausz_decomposition,
    lattice_check,
    triangular_cayley,
)
from .symmetry import (
    CayleyCertificate,
    automorphism_group,
    are_isomorphic,
    canonical_form,
    orbits,
    regular_subgroup_search,
)
from .analysis import (
    abelian_groups,
    all_groups_abelian,
    hk_generation_scan,
    line_graph_abelian_obstruction,
    sylow_candidates,
)
from .catalog import catalog_cases, run_all, run_case
from .grammar import parse_group_spec, parse_words

__all__ = [
    "FiniteField",
    "FiniteGroup",
    "ConnectionSet",
    "Word",
    "Graph",
    "Spectrum",
    "SrgParams",
    "IntersectionArray",
    "KrauszDecomposition",
    "ConnectionStructureReport",
    "CayleyCertificate",
    "cyclic",
    "direct_product",
    "elem_abelian",
    "semidirect",
    "heisenberg",
    "affine_square",
    "evaluate_word",
    "subgroup_closure",
    "subgroups_of_order",
    "is_general_product",
    "cayley_graph",
    "line_graph",
    "complement",
    "seidel_switch",
    "metrics",
    "named_graph",
    "graph6_encode",
    "graph6_decode",
    "spectrum",
    "srg_parameters",
    "intersection_array",
    "ia_eigenvalues",
    "least_eigenvalue_at_least",
    "krausz_decomposition",
    "connection_structure",
    "lattice_check",
    "cocktail_check",
    "triangular_cayley",
    "canonical_form",
    "are_isomorphic",
    "automorphism_group",
    "orbits",
    "regular_subgroup_search",
    "sylow_candidates",
    "all_groups_abelian",
    "abelian_groups",
    "line_graph_abelian_obstruction",
    "hk_generation_scan",
    "catalog_cases",
    "run_case",
    "run_all",
    "parse_group_spec",
    "parse_words",
]
