"""Enumeration bounds shared by the group, symmetry and CLI layers."""
from __future__ import annotations

from dataclasses import dataclass


class BoundExceeded(ValueError):
    """An enumeration would exceed its configured size bound."""


@dataclass(frozen=True)
class Bounds:
    sn_degree: int = 6  # largest n for which S_n is enumerated
    theta_size: int = 10**6  # largest |Theta_[n;kappa]| = n! (kappa!)^n
    renaming_count: int = 10**5  # largest (kappa!)^n renaming search
    basis_dim: int = 4096  # largest n * kappa^n for nullspace bases


DEFAULT_BOUNDS = Bounds()
