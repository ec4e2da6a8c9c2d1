"""Involutory Cayley graphs over Z_n and truncated polynomial windows.

Vertices are ring elements; a and b are adjacent exactly when (a - b)
squares to 1. The package enumerates involutions in closed form, builds the
graphs, computes exact invariants with certificates, and verifies the
structure theory's predictions against measured values.
"""

from .cayley import (
    CayleyGraph,
    CrtIsomorphism,
    Graph,
    build_cayley_graph,
    build_zn_graph,
    crt_isomorphism_check,
    regular_degree,
    spec_meta,
    tensor_product,
    to_dot,
    to_graphml,
    to_json_obj,
)
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DomainError
from .invariants import (
    BipartiteResult,
    Components,
    InvariantReport,
    PlanarityResult,
    chromatic_number,
    clique_number,
    complement,
    compute_invariants,
    connected_components,
    constant_parity_bipartition,
    find_isomorphism,
    girth,
    independence_number,
    is_bipartite,
    is_proper_bipartition,
    is_proper_coloring,
    is_self_complementary,
    k33_witness_mod4,
    monomial_independent_check,
    odd_modulus_three_coloring,
    planarity_test,
    report_to_json_obj,
    self_complementary_status,
)
from .kernels import BACKEND
from .oracle import (
    GrowthRow,
    Prediction,
    VerificationReport,
    VerificationRow,
    growth_scan,
    growth_to_json_obj,
    predict,
    predicted_component_count,
    verification_to_json_obj,
    verify,
)
from .polyring import (
    PolyRing,
    inv_count_formula,
    involution_indices,
    involutions_bruteforce,
    involutions_closed_form,
)
from .rings import (
    Factorization,
    crt_combine,
    crt_combine_moduli,
    crt_split,
    factorize,
    inv_count_zn,
    involutions_zn,
    involutions_zn_bruteforce,
    is_cycle_modulus,
    is_odd_prime_power,
    prime_power_involutions,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BipartiteResult",
    "CapExceeded",
    "CayleyGraph",
    "Components",
    "CrtIsomorphism",
    "Caps",
    "DEFAULT_CAPS",
    "DomainError",
    "Factorization",
    "Graph",
    "GrowthRow",
    "InvariantReport",
    "PlanarityResult",
    "PolyRing",
    "Prediction",
    "VerificationReport",
    "VerificationRow",
    "build_cayley_graph",
    "build_zn_graph",
    "chromatic_number",
    "clique_number",
    "complement",
    "compute_invariants",
    "connected_components",
    "constant_parity_bipartition",
    "crt_combine",
    "crt_combine_moduli",
    "crt_isomorphism_check",
    "crt_split",
    "factorize",
    "find_isomorphism",
    "girth",
    "growth_scan",
    "growth_to_json_obj",
    "independence_number",
    "inv_count_formula",
    "inv_count_zn",
    "involution_indices",
    "involutions_bruteforce",
    "involutions_closed_form",
    "involutions_zn",
    "involutions_zn_bruteforce",
    "is_bipartite",
    "is_cycle_modulus",
    "is_odd_prime_power",
    "is_proper_bipartition",
    "is_proper_coloring",
    "is_self_complementary",
    "k33_witness_mod4",
    "monomial_independent_check",
    "odd_modulus_three_coloring",
    "planarity_test",
    "predict",
    "predicted_component_count",
    "prime_power_involutions",
    "regular_degree",
    "report_to_json_obj",
    "self_complementary_status",
    "spec_meta",
    "tensor_product",
    "to_dot",
    "to_graphml",
    "to_json_obj",
    "verification_to_json_obj",
    "verify",
]
