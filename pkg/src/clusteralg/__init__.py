"""Exact cluster-algebra computations over integer Laurent polynomials.

Skew-symmetrizable exchange matrices and quivers with mutation, labeled
seeds with exact variable arithmetic, orbit search, sigma-periodicity,
bipartite belts, automorphism group machinery, type classification, and
constructive realization of relabelings by mutations.
"""

from __future__ import annotations

from .classify import (
    BoundWitness,
    Classification,
    Decision,
    Main1Flags,
    ProbeResult,
    automorphism_finiteness_probe,
    classify,
    dynkin_type,
    is_finite_mutation_type,
    is_finite_type,
    main1_conditions,
    search_m_and_acyclic,
)
from .errors import (
    DecomposableMatrix,
    InvariantViolation,
    NotBipartite,
    NotDivisible,
    NotSkewSymmetrizable,
)
from .exchange import (
    Diagram,
    ExchangeMatrix,
    MatrixClass,
    Permutation,
    Quiver,
    all_permutations,
    apply_matrix_sequence,
    apply_permutation_matrix,
    is_inflexion,
    matrix_mutation_class,
    mutate_matrix,
    mutate_quiver,
    structural_predicates,
)
from .groups import (
    AutPlusEnumeration,
    DirectAutomorphism,
    EquivariantResult,
    GroupSummary,
    LPResult,
    SautEnumeration,
    StrictAutomorphism,
    compose_strict,
    compute_L_P,
    enumerate_aut_plus,
    enumerate_saut_plus,
    equivariant_automorphisms,
    in_G,
    in_H,
    same_saut_element,
)
from .periodicity import (
    BeltReport,
    DistinguisherWitness,
    PeriodReport,
    bipartite_belt,
    conjugate_period,
    find_periods,
    is_sigma_period,
    period_set_distinguisher,
    restriction_extension_check,
    subseed,
    tropical_period_filter,
)
from .realize import RealizationPlan, connected_order, realize_permutation, swap_gadget
from .seeds import (
    EquivalenceResult,
    LabeledSeed,
    OrbitGraph,
    apply_sequence,
    format_sequence,
    inverse_sequence,
    is_essential,
    mutate_seed,
    orbit,
    parse_sequence,
    permute_seed,
    seed_equivalence,
    seed_from_json,
    seed_to_json,
    validate_sequence,
)
from .symbolic import LaurentPoly, exact_div
from .verification import CheckResult, run_all

__all__ = [
    "AutPlusEnumeration",
    "BeltReport",
    "BoundWitness",
    "CheckResult",
    "Classification",
    "Decision",
    "DecomposableMatrix",
    "Diagram",
    "DirectAutomorphism",
    "DistinguisherWitness",
    "EquivalenceResult",
    "EquivariantResult",
    "ExchangeMatrix",
    "GroupSummary",
    "InvariantViolation",
    "LPResult",
    "LabeledSeed",
    "LaurentPoly",
    "Main1Flags",
    "MatrixClass",
    "NotBipartite",
    "NotDivisible",
    "NotSkewSymmetrizable",
    "OrbitGraph",
    "PeriodReport",
    "Permutation",
    "ProbeResult",
    "Quiver",
    "RealizationPlan",
    "SautEnumeration",
    "StrictAutomorphism",
    "all_permutations",
    "apply_matrix_sequence",
    "apply_permutation_matrix",
    "apply_sequence",
    "automorphism_finiteness_probe",
    "bipartite_belt",
    "classify",
    "compose_strict",
    "compute_L_P",
    "conjugate_period",
    "connected_order",
    "dynkin_type",
    "enumerate_aut_plus",
    "enumerate_saut_plus",
    "equivariant_automorphisms",
    "exact_div",
    "find_periods",
    "format_sequence",
    "in_G",
    "in_H",
    "inverse_sequence",
    "is_essential",
    "is_finite_mutation_type",
    "is_finite_type",
    "is_inflexion",
    "is_sigma_period",
    "main1_conditions",
    "matrix_mutation_class",
    "mutate_matrix",
    "mutate_quiver",
    "mutate_seed",
    "orbit",
    "parse_sequence",
    "period_set_distinguisher",
    "permute_seed",
    "realize_permutation",
    "restriction_extension_check",
    "run_all",
    "same_saut_element",
    "search_m_and_acyclic",
    "seed_equivalence",
    "seed_from_json",
    "seed_to_json",
    "structural_predicates",
    "subseed",
    "swap_gadget",
    "tropical_period_filter",
    "validate_sequence",
]
