"""Exact integer-lattice computations for K3 Mukai lattices and cubic
fourfold discriminants: Smith/Hermite normal forms, saturations and
orthogonal complements, Hassett's (*) and (**) conditions, central-charge
Gamma sets, and coinvariant lattices of finite isometry actions.

All arithmetic is exact; arbitrary-size python ints are accepted and
returned, rationals travel as "p/q" strings.
"""

from ._core import (
    admissible_discriminants,
    build_l_k,
    central_charge,
    condition_star,
    determinant,
    discriminant_group,
    exponential_charge,
    find_hyperbolic_plane,
    gamma_set,
    genericity_bound,
    hassett_check,
    hermite_normal_form,
    integer_kernel,
    invariant_and_coinvariant,
    invariants,
    k3_symplectic_order_allowed,
    kuznetsov_picard_number,
    labeled_k_gram,
    make_standard,
    mukai_a2_embedding,
    mukai_model_gram,
    orthogonal_complement,
    p_zero_check,
    picard_bound_from_action,
    positive_plane_check,
    saturate,
    smith_normal_form,
    validate_action,
    vectors_of_norm,
)

__all__ = [
    "admissible_discriminants",
    "build_l_k",
    "central_charge",
    "condition_star",
    "determinant",
    "discriminant_group",
    "exponential_charge",
    "find_hyperbolic_plane",
    "gamma_set",
    "genericity_bound",
    "hassett_check",
    "hermite_normal_form",
    "integer_kernel",
    "invariant_and_coinvariant",
    "invariants",
    "k3_symplectic_order_allowed",
    "kuznetsov_picard_number",
    "labeled_k_gram",
    "make_standard",
    "mukai_a2_embedding",
    "mukai_model_gram",
    "orthogonal_complement",
    "p_zero_check",
    "picard_bound_from_action",
    "positive_plane_check",
    "saturate",
    "smith_normal_form",
    "validate_action",
    "vectors_of_norm",
]
