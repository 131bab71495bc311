"""Linear representations of S_n and Theta_[n;kappa] on G_[n;kappa] and the
symmetry tests built on them.

Every representation used here has the same shape: block ``j`` of ``V_G A``
is ``scale_j * V_{sigma(j)} L`` for a permutation ``sigma`` of the players,
positive scales and a logical permutation matrix ``L`` of size ``kappa^n``.
:class:`BlockAction` stores exactly that, so invariance checks never build
the ``n kappa^n`` square matrix; :meth:`BlockAction.dense` does when asked.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .config import DEFAULT_BOUNDS, BoundExceeded
from .game import Game, t_sigma, t_theta
from .group import (
    BlockPermutation,
    Permutation,
    enumerate_sn,
    iter_theta,
    perm_from_cycles,
    transposition_generators,
)
from .linalg import sparse_nullspace
from .stp_core import LogicalMatrix, RationalMatrix, kron, stp, swap_matrix, to_fraction

__all__ = [
    "Weights",
    "Renaming",
    "BlockAction",
    "Representation",
    "WeightsUndetermined",
    "rep_ordinary",
    "rep_weighted",
    "rep_renaming",
    "rep_strategy",
    "renaming_matrix",
    "renamed_game",
    "check_ordinary",
    "check_weighted",
    "check_renaming",
    "check_strategy_symmetry",
    "check_name_irrelevant",
    "check_ordinary_swap_form",
    "infer_weights",
    "search_renaming",
    "strategy_symmetry_group",
    "symmetric_subspace_basis",
    "strategy_invariant_basis",
]


class WeightsUndetermined(ValueError):
    """Raised when V^c_1 = 0, so no ratio pins down the weights."""


@dataclass(frozen=True)
class Weights:
    mu: tuple[Fraction, ...]

    def __post_init__(self):
        mu = tuple(to_fraction(x) for x in self.mu)
        object.__setattr__(self, "mu", mu)
        if not mu:
            raise ValueError("weights need at least one entry")
        if any(x <= 0 for x in mu):
            raise ValueError(f"weights must be positive, got {[str(x) for x in mu]}")

    @classmethod
    def unit(cls, n: int) -> "Weights":
        return cls((1,) * n)

    def normalized(self) -> "Weights":
        """Scaled so that ``mu_1 = 1``."""
        return Weights(tuple(x / self.mu[0] for x in self.mu))

    def integer_form(self) -> tuple[int, ...]:
        """Smallest positive integers proportional to ``mu``."""
        lcm = 1
        for x in self.mu:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in self.mu]
        g = 0
        for k in ints:
            g = _gcd(g, k)
        return tuple(k // g for k in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class Renaming:
    """One relabelling ``r_i`` in S_kappa per player."""

    r: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if not self.r:
            raise ValueError("a renaming needs at least one player")
        if len({p.n for p in self.r}) != 1:
            raise ValueError("all renaming permutations must act on the same strategy set")

    @classmethod
    def identity(cls, n: int, kappa: int) -> "Renaming":
        return cls((Permutation.identity(kappa),) * n)

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def kappa(self) -> int:
        return self.r[0].n

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self.r)

    def __str__(self):
        return ",".join(str(p) for p in self.r)


@dataclass(frozen=True)
class BlockAction:
    """Right action ``V_G -> V_G A`` with block ``j`` equal to ``scales[j] * V_{perm(j)} L``."""

    perm: Permutation
    scales: tuple[Fraction, ...]
    inner: LogicalMatrix

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def size(self) -> int:
        return self.inner.rows

    def apply(self, vg: Sequence) -> tuple[Fraction, ...]:
        k = self.size
        blocks = [tuple(vg[i * k : (i + 1) * k]) for i in range(self.n)]
        out = []
        for j in range(1, self.n + 1):
            src = self.inner.act_on_row(blocks[self.perm(j) - 1])
            s = self.scales[j - 1]
            out.extend(src if s == 1 else (s * x for x in src))
        return tuple(out)

    def fixes(self, vg: Sequence) -> bool:
        return self.apply(vg) == tuple(vg)

    def dense(self) -> RationalMatrix:
        k, n = self.size, self.n
        arr = np.empty((n * k, n * k), dtype=object)
        arr.fill(Fraction(0))
        for j in range(1, n + 1):
            a = self.perm(j)
            for c, r in enumerate(self.inner.indices):
                arr[(a - 1) * k + r - 1, (j - 1) * k + c] = self.scales[j - 1]
        return RationalMatrix._wrap(arr)

    def constraint_rows(self) -> list[dict[int, Fraction]]:
        """Sparse rows of ``(A - I)^T``, i.e. the equations ``V A = V``."""
        k = self.size
        rows = []
        for j in range(1, self.n + 1):
            a = self.perm(j)
            s = self.scales[j - 1]
            for c, r in enumerate(self.inner.indices):
                lhs = (j - 1) * k + c
                rhs = (a - 1) * k + r - 1
                if lhs == rhs and s == 1:
                    continue
                row = {lhs: Fraction(-1)}
                row[rhs] = row.get(rhs, 0) + s
                rows.append(row)
        return rows


@dataclass(frozen=True)
class Representation:
    """``sigma -> P_sigma (x) T_sigma`` with optional weight conjugation or renaming."""

    n: int
    kappa: int
    weights: Optional[Weights] = None
    renaming: Optional[Renaming] = None

    def __post_init__(self):
        if self.weights is not None and len(self.weights.mu) != self.n:
            raise ValueError(f"{len(self.weights.mu)} weights for {self.n} players")
        if self.renaming is not None and (self.renaming.n, self.renaming.kappa) != (self.n, self.kappa):
            raise ValueError("renaming shape does not match the game")

    @property
    def dim(self) -> int:
        return self.n * self.kappa**self.n

    def action(self, sigma: Permutation) -> BlockAction:
        if sigma.n != self.n:
            raise ValueError(f"permutation on {sigma.n} points for {self.n} players")
        inner = t_sigma(sigma, self.kappa)
        if self.renaming is not None and not self.renaming.is_identity():
            gamma = renaming_matrix(self.renaming)
            inner = gamma.T @ inner @ gamma
        if self.weights is None:
            scales = (Fraction(1),) * self.n
        else:
            mu = self.weights.mu
            scales = tuple(mu[sigma(j) - 1] / mu[j - 1] for j in range(1, self.n + 1))
        return BlockAction(sigma, scales, inner)

    def matrix_for(self, sigma: Permutation) -> RationalMatrix:
        return self.action(sigma).dense()

    def generator_actions(self) -> list[BlockAction]:
        return [self.action(s) for s in transposition_generators(self.n)]


def strategy_action(theta: BlockPermutation) -> BlockAction:
    return BlockAction(theta.pi, (Fraction(1),) * theta.n, t_theta(theta))


def renaming_matrix(r: Renaming) -> LogicalMatrix:
    """``Gamma_r = P_{r_1} (x) ... (x) P_{r_n}``."""
    out = LogicalMatrix(r.kappa, r.r[0].images)
    for p in r.r[1:]:
        out = kron(out, LogicalMatrix(p.n, p.images))
    return out


def renamed_game(g: Game, r: Renaming) -> Game:
    """The relabelled game, ``V^r_i = V^c_i Gamma_r^T``."""
    gt = renaming_matrix(r).T
    return Game(g.n, g.kappa, tuple(gt.act_on_row(v) for v in g.payoffs))


def rep_ordinary(sigma: Permutation, n: int, kappa: int) -> RationalMatrix:
    return Representation(n, kappa).matrix_for(sigma)


def rep_weighted(sigma: Permutation, weights: Weights, kappa: int) -> RationalMatrix:
    return Representation(sigma.n, kappa, weights=weights).matrix_for(sigma)


def rep_renaming(sigma: Permutation, r: Renaming) -> RationalMatrix:
    return Representation(sigma.n, r.kappa, renaming=r).matrix_for(sigma)


def rep_strategy(theta: BlockPermutation) -> RationalMatrix:
    """``P_{pi_theta} (x) T^theta``."""
    return strategy_action(theta).dense()


def _invariant(g: Game, rep: Representation) -> bool:
    vg = g.structure_vector()
    return all(a.fixes(vg) for a in rep.generator_actions())


def check_ordinary(g: Game) -> bool:
    return _invariant(g, Representation(g.n, g.kappa))


def check_weighted(g: Game, w: Union[Weights, Sequence]) -> bool:
    if not isinstance(w, Weights):
        w = Weights(tuple(w))
    return _invariant(g, Representation(g.n, g.kappa, weights=w))


def check_renaming(g: Game, r: Renaming) -> bool:
    return _invariant(g, Representation(g.n, g.kappa, renaming=r))


def check_strategy_symmetry(g: Game, theta: BlockPermutation) -> bool:
    """``V^c_i = V^c_{pi(i)} T^theta`` for every player ``i``."""
    if (theta.n, theta.kappa) != (g.n, g.kappa):
        raise ValueError("block permutation shape does not match the game")
    return strategy_action(theta).fixes(g.structure_vector())


def check_ordinary_swap_form(g: Game) -> bool:
    """Ordinary symmetry through swap matrices alone.

    ``V^c_1`` must be invariant under ``I_kappa (x) W_[kappa^(s-2),kappa] W_[kappa,kappa^(s-1)]``
    for ``s = 2..n-1`` (reordering the opponents) and every other player must
    satisfy ``V^c_i = V^c_1 |x W_[kappa^(i-1),kappa]``.
    """
    k, n = g.kappa, g.n
    v1 = RationalMatrix.row(g.payoffs[0])
    for s in range(2, n):
        # exchanges the opponents in slots 2 and s + 1
        w = stp(swap_matrix(k ** (s - 2), k), swap_matrix(k, k ** (s - 1)))
        m = kron(RationalMatrix.identity(k), w)
        if stp(v1, m) != v1:
            return False
    for i in range(2, n + 1):
        if stp(v1, swap_matrix(k ** (i - 1), k)).flat() != g.payoffs[i - 1]:
            return False
    return True


def infer_weights(g: Game) -> Optional[Weights]:
    """Weights with ``mu_1 = 1`` under which ``g`` is weighted symmetric, or ``None``.

    Player ``i`` must satisfy ``V^c_i = e_i V^c_1 T_(1,i)`` for a positive
    ratio ``e_i``; then ``mu_i = 1 / e_i``.
    """
    v1 = g.payoffs[0]
    if not any(v1):
        if any(any(v) for v in g.payoffs[1:]):
            return None
        raise WeightsUndetermined("V^c_1 = 0: every weight vector works, none is singled out")
    mu = [Fraction(1)]
    for i in range(2, g.n + 1):
        moved = t_sigma(perm_from_cycles(g.n, [(1, i)]), g.kappa).act_on_row(v1)
        vi = g.payoffs[i - 1]
        pos = next(k for k, x in enumerate(moved) if x != 0)
        e = vi[pos] / moved[pos]
        if e <= 0 or any(e * x != y for x, y in zip(moved, vi)):
            return None
        mu.append(1 / e)
    w = Weights(tuple(mu))
    return w if check_weighted(g, w) else None


def search_renaming(g: Game, bound: Optional[int] = None) -> Optional[Renaming]:
    """First renaming (lexicographic over (S_kappa)^n) making ``g`` ordinary symmetric."""
    bound = DEFAULT_BOUNDS.renaming_count if bound is None else bound
    local = enumerate_sn(g.kappa, bound=max(g.kappa, DEFAULT_BOUNDS.sn_degree))
    total = len(local) ** g.n
    if total > bound:
        raise BoundExceeded(f"{total} renamings exceed the search bound {bound}")
    for combo in itertools.product(local, repeat=g.n):
        r = Renaming(combo)
        if check_renaming(g, r):
            return r
    return None


def _compose_images(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[x - 1] for x in b)


def strategy_symmetry_group(g: Game, bound: Optional[int] = None, verify_closure: bool = True) -> list[BlockPermutation]:
    """Theta(G) in enumeration order."""
    found = [t for t in iter_theta(g.n, g.kappa, bound) if check_strategy_symmetry(g, t)]
    if verify_closure:
        full = [t.to_full().images for t in found]
        members = set(full)
        for a in full:
            for b in full:
                if _compose_images(a, b) not in members:
                    raise AssertionError("strategy symmetries are not closed under composition")
    return found


def player_shadow(thetas: Iterable[BlockPermutation]) -> list[Permutation]:
    """Pi(G): the distinct ``pi_theta``, sorted by image tuple."""
    return sorted({t.pi for t in thetas}, key=lambda p: p.images)


def check_name_irrelevant(g: Game, bound: Optional[int] = None) -> bool:
    """Whether every player permutation is realised by some strategy symmetry."""
    seen = set()
    target = len(enumerate_sn(g.n, bound=max(g.n, DEFAULT_BOUNDS.sn_degree)))
    for t in iter_theta(g.n, g.kappa, bound):
        if t.pi.images in seen:
            continue
        if check_strategy_symmetry(g, t):
            seen.add(t.pi.images)
            if len(seen) == target:
                return True
    return False


def symmetric_subspace_basis(
    n: int,
    kappa: int,
    kind: Union[str, Weights, Renaming] = "ordinary",
    bound: Optional[int] = None,
) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the games invariant under the generators of the chosen representation."""
    bound = DEFAULT_BOUNDS.basis_dim if bound is None else bound
    dim = n * kappa**n
    if dim > bound:
        raise BoundExceeded(f"structure space of dimension {dim} exceeds the bound {bound}")
    if isinstance(kind, Weights):
        rep = Representation(n, kappa, weights=kind)
    elif isinstance(kind, Renaming):
        rep = Representation(n, kappa, renaming=kind)
    elif kind == "ordinary":
        rep = Representation(n, kappa)
    else:
        raise ValueError(f"unknown symmetry kind {kind!r}")
    rows = [row for a in rep.generator_actions() for row in a.constraint_rows()]
    return sparse_nullspace(rows, dim)


def strategy_invariant_basis(
    n: int, kappa: int, thetas: Sequence[BlockPermutation], bound: Optional[int] = None
) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the games having every ``theta`` in ``thetas`` as a strategy symmetry."""
    bound = DEFAULT_BOUNDS.basis_dim if bound is None else bound
    dim = n * kappa**n
    if dim > bound:
        raise BoundExceeded(f"structure space of dimension {dim} exceeds the bound {bound}")
    rows = [row for t in thetas for row in strategy_action(t).constraint_rows()]
    return sparse_nullspace(rows, dim)
