"""Exact symmetry and potential analysis of finite games via semi-tensor products."""
from .boolean_sym import (
    BooleanSymmetricCoords,
    check_negation_symmetric,
    check_symmetric_boolean,
    negation_potential,
    renaming_boolean_potential,
    symmetric_boolean_potential,
    weighted_boolean_potential,
)
from .config import DEFAULT_BOUNDS, BoundExceeded, Bounds
from .game import Game, index_to_profile, payoff, phi, phi_i, profile_to_index, t_sigma, t_theta
from .group import BlockPermutation, Permutation, block_compose, block_decompose, enumerate_sn, enumerate_theta, parse_cycles, perm_from_cycles
from .potential import PotentialCertificate, PotentialProblem, solve_potential, solve_renaming_potential, verify_potential
from .stp_core import LogicalMatrix, RationalMatrix, khatri_rao, kron, stp, swap_matrix
from .symmetry import (
    Renaming,
    Weights,
    check_name_irrelevant,
    check_ordinary,
    check_renaming,
    check_strategy_symmetry,
    check_weighted,
    infer_weights,
    search_renaming,
    strategy_symmetry_group,
    symmetric_subspace_basis,
)

__version__ = "0.1.0"

__all__ = [
    "block_compose",
    "block_decompose",
    "BlockPermutation",
    "BooleanSymmetricCoords",
    "BoundExceeded",
    "Bounds",
    "check_name_irrelevant",
    "check_negation_symmetric",
    "check_ordinary",
    "check_renaming",
    "check_strategy_symmetry",
    "check_symmetric_boolean",
    "check_weighted",
    "DEFAULT_BOUNDS",
    "enumerate_sn",
    "enumerate_theta",
    "Game",
    "index_to_profile",
    "infer_weights",
    "khatri_rao",
    "kron",
    "LogicalMatrix",
    "negation_potential",
    "parse_cycles",
    "payoff",
    "perm_from_cycles",
    "Permutation",
    "phi",
    "phi_i",
    "PotentialCertificate",
    "PotentialProblem",
    "profile_to_index",
    "RationalMatrix",
    "Renaming",
    "renaming_boolean_potential",
    "search_renaming",
    "solve_potential",
    "solve_renaming_potential",
    "stp",
    "strategy_symmetry_group",
    "swap_matrix",
    "symmetric_boolean_potential",
    "symmetric_subspace_basis",
    "t_sigma",
    "t_theta",
    "verify_potential",
    "weighted_boolean_potential",
    "Weights",
]
