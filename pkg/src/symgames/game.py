"""Finite games in G_[n;kappa] as structure vectors.

Strategy labels are ``1..kappa`` and a profile ``(s_1, ..., s_n)`` sits at
position ``1 + sum_i (s_i - 1) kappa^(n - i)`` of each payoff structure
vector (player 1 most significant). For Boolean games label 1 is logical
true and label 2 logical false.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from .group import BlockPermutation, Permutation
from .stp_core import LogicalMatrix, RationalMatrix, khatri_rao, kron, to_fraction, vstack

__all__ = [
    "Game",
    "profile_to_index",
    "index_to_profile",
    "iter_profiles",
    "phi_i",
    "phi",
    "t_sigma",
    "t_theta",
    "payoff",
    "multiplicity_vector",
]

Profile = tuple[int, ...]


def profile_to_index(profile: Sequence[int], kappa) -> int:
    """1-based position of ``delta_kappa^{s_1} x ... x delta_kappa^{s_n}``.

    ``kappa`` may be a common strategy count or a per-player sequence.
    """
    counts = _counts(kappa, len(profile))
    idx = 0
    for s, k in zip(profile, counts):
        if not 1 <= s <= k:
            raise ValueError(f"strategy {s} outside 1..{k}")
        idx = idx * k + (s - 1)
    return idx + 1


def index_to_profile(index: int, n: int, kappa) -> Profile:
    counts = _counts(kappa, n)
    total = 1
    for k in counts:
        total *= k
    if not 1 <= index <= total:
        raise ValueError(f"profile index {index} outside 1..{total}")
    rest = index - 1
    out = []
    for k in reversed(counts):
        rest, r = divmod(rest, k)
        out.append(r + 1)
    return tuple(reversed(out))


def iter_profiles(n: int, kappa) -> Iterator[Profile]:
    """All profiles in structure-vector order."""
    counts = _counts(kappa, n)
    return itertools.product(*(range(1, k + 1) for k in counts))


def _counts(kappa, n: int) -> tuple[int, ...]:
    if isinstance(kappa, int):
        return (kappa,) * n
    counts = tuple(kappa)
    if len(counts) != n:
        raise ValueError(f"{len(counts)} strategy counts for {n} players")
    return counts


@dataclass(frozen=True)
class Game:
    """``n`` players with ``kappa`` strategies each; ``payoffs[i]`` is V^c_{i+1}."""

    n: int
    kappa: int
    payoffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a game needs at least one player")
        if self.kappa < 2:
            raise ValueError("each player needs at least two strategies")
        payoffs = tuple(tuple(to_fraction(x) for x in v) for v in self.payoffs)
        object.__setattr__(self, "payoffs", payoffs)
        if len(payoffs) != self.n:
            raise ValueError(f"expected {self.n} payoff vectors, got {len(payoffs)}")
        size = self.kappa**self.n
        for i, v in enumerate(payoffs, start=1):
            if len(v) != size:
                raise ValueError(f"payoff vector of player {i} has length {len(v)}, expected {size}")

    @classmethod
    def from_function(cls, n: int, kappa: int, fn: Callable[[int, Profile], object]) -> "Game":
        """Tabulate ``fn(i, profile)`` (player ``i`` is 1-based)."""
        profiles = list(iter_profiles(n, kappa))
        return cls(n, kappa, tuple(tuple(fn(i, p) for p in profiles) for i in range(1, n + 1)))

    @classmethod
    def from_structure_vector(cls, n: int, kappa: int, vg: Sequence) -> "Game":
        size = kappa**n
        if len(vg) != n * size:
            raise ValueError(f"structure vector of length {len(vg)}, expected {n * size}")
        return cls(n, kappa, tuple(tuple(vg[i * size : (i + 1) * size]) for i in range(n)))

    @classmethod
    def zero(cls, n: int, kappa: int) -> "Game":
        return cls(n, kappa, ((0,) * kappa**n,) * n)

    @property
    def size(self) -> int:
        return self.kappa**self.n

    def structure_vector(self) -> tuple[Fraction, ...]:
        """``V_G = [V^c_1, ..., V^c_n]``."""
        return tuple(x for v in self.payoffs for x in v)

    def payoff(self, i: int, profile: Sequence[int]) -> Fraction:
        return payoff(self, i, profile)

    def scaled(self, weights: Sequence) -> "Game":
        """Payoffs ``weights[i] * c_i``."""
        return Game(self.n, self.kappa, tuple(tuple(to_fraction(w) * x for x in v) for w, v in zip(weights, self.payoffs)))


def payoff(g: Game, i: int, profile: Sequence[int]) -> Fraction:
    if not 1 <= i <= g.n:
        raise ValueError(f"player {i} outside 1..{g.n}")
    if len(profile) != g.n:
        raise ValueError(f"profile of length {len(profile)} for {g.n} players")
    return g.payoffs[i - 1][profile_to_index(profile, g.kappa) - 1]


@lru_cache(maxsize=None)
def phi_i(n: int, kappa: int, i: int) -> LogicalMatrix:
    """``Phi_i = 1^T_{kappa^(i-1)} (x) I_kappa (x) 1^T_{kappa^(n-i)}``: picks out x_i from x."""
    if not 1 <= i <= n:
        raise ValueError(f"player {i} outside 1..{n}")
    ones_left = LogicalMatrix(1, (1,) * kappa ** (i - 1))
    ones_right = LogicalMatrix(1, (1,) * kappa ** (n - i))
    return kron(kron(ones_left, LogicalMatrix.identity(kappa)), ones_right)


def phi(n: int, kappa: int) -> RationalMatrix:
    """Stacked ``[Phi_1; ...; Phi_n]``, converting STP form to vector form."""
    return vstack([phi_i(n, kappa, i) for i in range(1, n + 1)])


def _khatri_rao_chain(factors: Sequence[LogicalMatrix]) -> LogicalMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = khatri_rao(out, f)
    return out


@lru_cache(maxsize=4096)
def _t_sigma_cached(images: tuple[int, ...], kappa: int) -> LogicalMatrix:
    n = len(images)
    inv = Permutation(images).inverse()
    return _khatri_rao_chain([phi_i(n, kappa, inv(i)) for i in range(1, n + 1)])


def t_sigma(sigma: Permutation, kappa: int) -> LogicalMatrix:
    """``T_sigma = Phi_{sigma^-1(1)} * ... * Phi_{sigma^-1(n)}`` (Khatri-Rao)."""
    return _t_sigma_cached(sigma.images, kappa)


def t_theta(theta: BlockPermutation) -> LogicalMatrix:
    """``T^theta = (D_1 (x) ... (x) D_n) T_{pi_theta}``."""
    dprod = LogicalMatrix(theta.d[0].n, theta.d[0].images)
    for di in theta.d[1:]:
        dprod = kron(dprod, LogicalMatrix(di.n, di.images))
    return dprod @ t_sigma(theta.pi, theta.kappa)


def multiplicity_vector(profile: Sequence[int], kappa: int, exclude: Optional[int] = None) -> tuple[int, ...]:
    """``#(s)``, or ``#(s_{-i})`` when ``exclude = i``."""
    counts = [0] * kappa
    for j, s in enumerate(profile, start=1):
        if j != exclude:
            counts[s - 1] += 1
    return tuple(counts)
