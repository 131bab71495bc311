"""Weighted potential games: assembling and solving the potential equation.

Player ``i`` has ``k_i`` strategies and the profile space has ``k = prod k_i``
points. The unknowns are ``xi_1, ..., xi_n`` with ``xi_i`` in ``Q^(k / k_i)``;
block row ``j`` (``j = 2..n``) of the system reads

    -w_j E_1 xi_1 + w_1 E_j xi_j = (w_1 V^c_j - w_j V^c_1)^T

and any solution yields the potential ``(V^c_1 - xi_1^T E_1^T) / w_1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional, Sequence

import numpy as np

from .game import Game, index_to_profile, iter_profiles, profile_to_index
from .linalg import solve
from .stp_core import LogicalMatrix, RationalMatrix, kron, to_fraction
from .symmetry import Renaming, renaming_matrix

__all__ = [
    "PotentialProblem",
    "PotentialCertificate",
    "build_Ei",
    "build_E",
    "build_b",
    "solve_potential",
    "verify_potential",
    "solve_renaming_potential",
    "gauge_equivalent",
]


@dataclass(frozen=True)
class PotentialProblem:
    counts: tuple[int, ...]
    payoffs: tuple[tuple[Fraction, ...], ...]
    weights: tuple[Fraction, ...] = ()

    def __post_init__(self):
        counts = tuple(int(k) for k in self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts or any(k < 1 for k in counts):
            raise ValueError("strategy counts must be positive")
        payoffs = tuple(tuple(to_fraction(x) for x in v) for v in self.payoffs)
        object.__setattr__(self, "payoffs", payoffs)
        weights = tuple(to_fraction(w) for w in self.weights) or (Fraction(1),) * len(counts)
        object.__setattr__(self, "weights", weights)
        n = len(counts)
        if len(payoffs) != n or len(weights) != n:
            raise ValueError(f"{n} players need {n} payoff vectors and {n} weights")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        size = prod(counts)
        for i, v in enumerate(payoffs, start=1):
            if len(v) != size:
                raise ValueError(f"payoff vector of player {i} has length {len(v)}, expected {size}")

    @classmethod
    def from_game(cls, g: Game, weights: Optional[Sequence] = None) -> "PotentialProblem":
        return cls((g.kappa,) * g.n, g.payoffs, tuple(weights) if weights is not None else ())

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def size(self) -> int:
        return prod(self.counts)

    def reduced_size(self, i: int) -> int:
        return self.size // self.counts[i - 1]


@dataclass(frozen=True)
class PotentialCertificate:
    """A solution ``xi`` of the potential equation and the potential it produces."""

    xi: tuple[tuple[Fraction, ...], ...]
    potential: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]
    renamed_potential: Optional[tuple[Fraction, ...]] = None


def _drop(profile: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple(profile[: i - 1]) + tuple(profile[i:])


def _reduced_counts(counts: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple(counts[: i - 1]) + tuple(counts[i:])


def _ei_indices(counts: Sequence[int], i: int) -> tuple[int, ...]:
    """For each profile, the 1-based row of ``E_i^T`` picking its ``xi_i`` entry."""
    reduced = _reduced_counts(counts, i)
    return tuple(profile_to_index(_drop(p, i), reduced) if reduced else 1 for p in iter_profiles(len(counts), counts))


def build_Ei(problem: PotentialProblem, i: int) -> RationalMatrix:
    """``E_i = I (x) 1_{k_i} (x) I``, of shape ``k x (k / k_i)``."""
    if not 1 <= i <= problem.n:
        raise ValueError(f"player {i} outside 1..{problem.n}")
    c = problem.counts
    left = LogicalMatrix.identity(prod(c[: i - 1]))
    right = LogicalMatrix.identity(prod(c[i:]))
    ones_row = LogicalMatrix(1, (1,) * c[i - 1])
    # E_i is the transpose of the logical matrix I (x) 1^T (x) I.
    return kron(kron(left, ones_row), right).to_dense().T


def build_E(problem: PotentialProblem) -> RationalMatrix:
    n, k = problem.n, problem.size
    w = problem.weights
    offsets = _offsets(problem)
    arr = np.empty(((n - 1) * k, offsets[-1]), dtype=object)
    arr.fill(Fraction(0))
    e1 = _ei_indices(problem.counts, 1)
    for j in range(2, n + 1):
        ej = _ei_indices(problem.counts, j)
        for r in range(k):
            row = (j - 2) * k + r
            arr[row, offsets[0] + e1[r] - 1] -= w[j - 1]
            arr[row, offsets[j - 1] + ej[r] - 1] += w[0]
    return RationalMatrix._wrap(arr)


def build_b(problem: PotentialProblem) -> tuple[Fraction, ...]:
    w, v = problem.weights, problem.payoffs
    out = []
    for j in range(2, problem.n + 1):
        out.extend(w[0] * a - w[j - 1] * b for a, b in zip(v[j - 1], v[0]))
    return tuple(out)


def _offsets(problem: PotentialProblem) -> list[int]:
    out = [0]
    for i in range(1, problem.n + 1):
        out.append(out[-1] + problem.reduced_size(i))
    return out


def _potential_from_xi1(problem: PotentialProblem, xi1: Sequence[Fraction]) -> tuple[Fraction, ...]:
    e1 = _ei_indices(problem.counts, 1)
    w1 = problem.weights[0]
    return tuple((v - xi1[e - 1]) / w1 for v, e in zip(problem.payoffs[0], e1))


def solve_potential(problem: PotentialProblem, column_order: Optional[Sequence[int]] = None) -> Optional[PotentialCertificate]:
    """Solve the potential equation exactly; ``None`` means the game is not a (weighted) potential game.

    Free variables are set to zero. ``column_order`` changes the pivot order
    and hence which member of the constant-shift family is returned.
    """
    if problem.n == 1:
        xi = ((Fraction(0),) * problem.reduced_size(1),)
        return PotentialCertificate(xi, _potential_from_xi1(problem, xi[0]), problem.weights)
    offsets = _offsets(problem)
    sol = solve(build_E(problem), build_b(problem), column_order=column_order)
    if sol is None:
        return None
    xi = tuple(tuple(sol[offsets[i] : offsets[i + 1]]) for i in range(problem.n))
    cert = PotentialCertificate(xi, _potential_from_xi1(problem, xi[0]), problem.weights)
    if not verify_potential(problem, cert.potential):
        raise AssertionError("potential equation solution failed direct verification")
    return cert


def verify_potential(problem: PotentialProblem, candidate: Sequence) -> bool:
    """Check every unilateral deviation: ``c_i(x_i, s) - c_i(y_i, s) = w_i (P(x_i, s) - P(y_i, s))``."""
    p = tuple(to_fraction(x) for x in candidate)
    if len(p) != problem.size:
        return False
    counts = problem.counts
    for i in range(1, problem.n + 1):
        ci, wi = problem.payoffs[i - 1], problem.weights[i - 1]
        others = [range(1, k + 1) for k in _reduced_counts(counts, i)]
        for rest in itertools.product(*others):
            idx = [profile_to_index(rest[: i - 1] + (a,) + rest[i - 1 :], counts) - 1 for a in range(1, counts[i - 1] + 1)]
            for x, y in itertools.combinations(idx, 2):
                if ci[x] - ci[y] != wi * (p[x] - p[y]):
                    return False
    return True


def solve_renaming_potential(g: Game, r: Renaming) -> Optional[PotentialCertificate]:
    """Potential of ``g`` found through its relabelled game.

    The renamed system has right-hand side ``(I_{n-1} (x) Gamma_r) b``; its
    potential ``V^{P^r}`` is pulled back as ``V^P = V^{P^r} Gamma_r``.
    """
    gamma = renaming_matrix(r)
    renamed = tuple(gamma.T.act_on_row(v) for v in g.payoffs)
    cert = solve_potential(PotentialProblem((g.kappa,) * g.n, renamed))
    if cert is None:
        return None
    vp = gamma.act_on_row(cert.potential)
    return PotentialCertificate(cert.xi, vp, cert.weights, renamed_potential=cert.potential)


def gauge_equivalent(p: Sequence, q: Sequence) -> bool:
    """Whether two potentials differ by a constant."""
    if len(p) != len(q):
        return False
    diffs = {to_fraction(a) - to_fraction(b) for a, b in zip(p, q)}
    return len(diffs) <= 1


def profile_of(problem: PotentialProblem, index: int) -> tuple[int, ...]:
    return index_to_profile(index, problem.n, problem.counts)
