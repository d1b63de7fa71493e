"""Rank one CohFT potentials built from kappa and lambda_1 brackets."""

from .potentials import (
    CohftPoint,
    PotentialPair,
    check_b_form,
    check_getzler,
    check_u_derivative,
    genus_one_from_genus_zero,
    parse_point,
    potential_from_point,
    tensor,
)

__all__ = [
    "CohftPoint", "PotentialPair", "parse_point", "tensor", "potential_from_point",
    "check_getzler", "genus_one_from_genus_zero", "check_b_form", "check_u_derivative",
]
