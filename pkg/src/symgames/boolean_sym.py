"""Boolean games (kappa = 2): closed-form symmetric bases and potentials.

Label 1 is logical true and label 2 logical false, so ``M = delta_2[2,1]``
is negation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .game import Game
from .linalg import solve
from .potential import PotentialCertificate, PotentialProblem, build_E, build_Ei
from .stp_core import LogicalMatrix, RationalMatrix, hstack, kron, stp, swap_matrix, to_fraction, vstack
from .symmetry import Renaming, Weights, check_weighted, renamed_game, renaming_matrix

__all__ = [
    "BooleanSymmetricCoords",
    "NEGATION",
    "build_Tn",
    "build_Hn",
    "build_Rn",
    "build_Qn",
    "build_Kn",
    "build_Kn_recursive",
    "build_B",
    "build_boolean_E",
    "psi_matrix",
    "symmetric_lift",
    "check_symmetric_boolean",
    "game_from_symmetric_coords",
    "symmetric_boolean_potential",
    "symmetric_boolean_certificate",
    "weighted_boolean_potential",
    "renaming_boolean_potential",
    "check_negation_symmetric",
    "negation_partner",
    "negation_potential",
    "negation_B",
    "negation_Gamma",
]

NEGATION = LogicalMatrix(2, (2, 1))


@dataclass(frozen=True)
class BooleanSymmetricCoords:
    """Coordinates ``v`` in ``Q^(2n)`` with ``V^c_1 = (H_n v)^T``."""

    n: int
    v: tuple[Fraction, ...]

    def __post_init__(self):
        v = tuple(to_fraction(x) for x in self.v)
        object.__setattr__(self, "v", v)
        if len(v) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} coordinates, got {len(v)}")


def _require_n(n: int):
    if n < 2:
        raise ValueError("Boolean constructions need n >= 2")


def _zeros(m: int, n: int) -> RationalMatrix:
    return RationalMatrix.zeros(m, n)


def build_Tn(n: int) -> RationalMatrix:
    """``T_2 = I_2``, ``T_{k+1} = [[T_k, 0], [0, T_k]]`` (zero columns pad the offsets)."""
    _require_n(n)
    t = RationalMatrix.identity(2)
    for _ in range(2, n):
        z = _zeros(t.rows, 1)
        t = vstack([hstack([t, z]), hstack([z, t])])
    return t


def build_Hn(n: int) -> RationalMatrix:
    """``H_n = I_2 (x) T_n``; its columns span the admissible ``V^c_1``."""
    return kron(RationalMatrix.identity(2), build_Tn(n))


def build_Rn(n: int) -> RationalMatrix:
    """``R_2 = delta_2^1``, ``R_{t+1} = [[R_t, 1], [0, R_t]]``."""
    _require_n(n)
    r = RationalMatrix.column([1, 0])
    for _ in range(2, n):
        m = r.rows
        r = vstack([hstack([r, RationalMatrix.ones(m, 1)]), hstack([_zeros(m, 1), r])])
    return r


def build_Qn(n: int) -> RationalMatrix:
    """``Q_n = [0, -R_n, R_n, 0]``."""
    r = build_Rn(n)
    z = _zeros(r.rows, 1)
    return hstack([z, -r, r, z])


def build_Kn_recursive(n: int) -> RationalMatrix:
    """``K_n = 1_n (x) Q_n`` for every ``n``."""
    return kron(RationalMatrix.ones(n, 1), build_Qn(n))


# For two players the recursive K_2 and the one used in the worked 2x2 examples
# differ by a constant shift of one column; both solve E(2) K = B(2) H_2.
_K2_BLOCK = RationalMatrix([[0, 0, 1, 0], [0, 1, 0, 0]])


def build_Kn(n: int) -> RationalMatrix:
    """A solution ``K_n`` of ``E(n) K_n = B(n) H_n``."""
    _require_n(n)
    if n == 2:
        return kron(RationalMatrix.ones(2, 1), _K2_BLOCK)
    return build_Kn_recursive(n)


def build_B(n: int) -> RationalMatrix:
    """Stacked ``-I + W_[2, 2^(i-1)] (x) I_{2^(n-i)}``, ``i = 2..n``."""
    _require_n(n)
    eye = RationalMatrix.identity(2**n)
    blocks = []
    for i in range(2, n + 1):
        w = kron(swap_matrix(2, 2 ** (i - 1)), LogicalMatrix.identity(2 ** (n - i)))
        blocks.append(w.to_dense() - eye)
    return vstack(blocks)


def build_boolean_E(n: int) -> RationalMatrix:
    return build_E(_unit_problem(n))


def _unit_problem(n: int, payoffs=None) -> PotentialProblem:
    if payoffs is None:
        payoffs = ((0,) * 2**n,) * n
    return PotentialProblem((2,) * n, payoffs)


def psi_matrix(n: int, k=None) -> RationalMatrix:
    """``H_n^T - (K_n^1)^T E_1^T``: maps coordinates ``v`` to the potential."""
    k = build_Kn(n) if k is None else k
    k1 = k[: 2 ** (n - 1), :]
    e1 = build_Ei(_unit_problem(n), 1)
    return build_Hn(n).T - k1.T @ e1.T


def symmetric_lift(n: int) -> RationalMatrix:
    """``[I; W_[2,2] (x) I; ...; W_[2,2^(n-1)]] H_n``: coordinates to ``V_G^T``."""
    _require_n(n)
    h = build_Hn(n)
    blocks = [h]
    for i in range(2, n + 1):
        w = kron(swap_matrix(2, 2 ** (i - 1)), LogicalMatrix.identity(2 ** (n - i)))
        blocks.append(w @ h)
    return vstack(blocks)


def _require_boolean(g: Game):
    if g.kappa != 2:
        raise ValueError(f"Boolean construction needs kappa = 2, got {g.kappa}")
    _require_n(g.n)


def check_symmetric_boolean(g: Game) -> Optional[BooleanSymmetricCoords]:
    """Coordinates of ``g`` in the symmetric Boolean basis, or ``None`` if ``g`` is not symmetric."""
    _require_boolean(g)
    sol = solve(symmetric_lift(g.n), g.structure_vector())
    return None if sol is None else BooleanSymmetricCoords(g.n, sol)


def game_from_symmetric_coords(coords: BooleanSymmetricCoords) -> Game:
    return Game.from_structure_vector(coords.n, 2, (symmetric_lift(coords.n) @ RationalMatrix.column(coords.v)).flat())


def symmetric_boolean_potential(coords: BooleanSymmetricCoords) -> tuple[Fraction, ...]:
    return (RationalMatrix.row(coords.v) @ psi_matrix(coords.n)).flat()


def symmetric_boolean_certificate(coords: BooleanSymmetricCoords) -> PotentialCertificate:
    """The closed-form solution ``xi = K_n v`` together with its potential."""
    n = coords.n
    xi = (build_Kn(n) @ RationalMatrix.column(coords.v)).flat()
    h = 2 ** (n - 1)
    blocks = tuple(tuple(xi[i * h : (i + 1) * h]) for i in range(n))
    return PotentialCertificate(blocks, symmetric_boolean_potential(coords), (Fraction(1),) * n)


def weighted_boolean_potential(g: Game, mu) -> PotentialCertificate:
    """Potential of a weighted symmetric Boolean game, valid with weights ``w_i = 1 / mu_i``.

    The scaled game ``mu_i c_i`` is ordinary symmetric; its closed-form
    potential serves ``g`` and the ``xi`` blocks are rescaled by ``1 / mu_i``.
    """
    _require_boolean(g)
    mu = mu if isinstance(mu, Weights) else Weights(tuple(mu))
    if not check_weighted(g, mu):
        raise ValueError("game is not weighted symmetric for these weights")
    coords = check_symmetric_boolean(g.scaled(mu.mu))
    base = symmetric_boolean_certificate(coords)
    xi = tuple(tuple(x / m for x in block) for block, m in zip(base.xi, mu.mu))
    return PotentialCertificate(xi, base.potential, tuple(1 / m for m in mu.mu))


def renaming_boolean_potential(g: Game, r: Renaming) -> Optional[PotentialCertificate]:
    """Closed-form potential through the relabelled game, pulled back by ``Gamma_r``."""
    _require_boolean(g)
    coords = check_symmetric_boolean(renamed_game(g, r))
    if coords is None:
        return None
    base = symmetric_boolean_certificate(coords)
    vp = renaming_matrix(r).act_on_row(base.potential)
    return PotentialCertificate(base.xi, vp, base.weights, renamed_potential=base.potential)


def _negation_factor(n: int, i: int) -> LogicalMatrix:
    """``M (x) I_{2^(i-2)} (x) M (x) I_{2^(n-i)}``: negate players 1 and i."""
    out = kron(NEGATION, LogicalMatrix.identity(2 ** (i - 2)))
    out = kron(out, NEGATION)
    return kron(out, LogicalMatrix.identity(2 ** (n - i)))


def negation_partner(v1: Sequence, n: int, i: int, form: str = "gamma") -> tuple[Fraction, ...]:
    """The payoff vector player ``i`` must have in a negation-symmetric game.

    ``form="gamma"`` applies the Kronecker factor directly; ``form="literal"``
    evaluates ``V^c_1 |x ((I_{2^(i-1)} (x) M) |x M)`` with semi-tensor products.
    """
    if form == "gamma":
        return _negation_factor(n, i).act_on_row(tuple(v1))
    if form == "literal":
        inner = stp(kron(LogicalMatrix.identity(2 ** (i - 1)), NEGATION), NEGATION)
        return stp(RationalMatrix.row(v1), inner).flat()
    raise ValueError(f"unknown form {form!r}")


def check_negation_symmetric(g: Game, form: str = "gamma") -> bool:
    """Whether negating the strategies of players 1 and ``i`` carries ``c_1`` to ``c_i`` for all ``i >= 2``."""
    _require_boolean(g)
    v1 = g.payoffs[0]
    return all(negation_partner(v1, g.n, i, form) == g.payoffs[i - 1] for i in range(2, g.n + 1))


def negation_B(n: int) -> RationalMatrix:
    """Stacked ``1^T (x) I`` and ``M (x) I_{2^(i-2)} (x) 1^T (x) I_{2^(n-i)}``; ``B V_1^T`` solves the potential equation."""
    _require_n(n)
    ones = LogicalMatrix(1, (1, 1))
    blocks = [kron(ones, LogicalMatrix.identity(2 ** (n - 1)))]
    for i in range(2, n + 1):
        b = kron(kron(NEGATION, LogicalMatrix.identity(2 ** (i - 2))), ones)
        blocks.append(kron(b, LogicalMatrix.identity(2 ** (n - i))))
    return vstack(blocks)


def negation_Gamma(n: int) -> RationalMatrix:
    """Stacked ``M (x) I (x) M (x) I - I``, ``i = 2..n``."""
    _require_n(n)
    eye = RationalMatrix.identity(2**n)
    return vstack([_negation_factor(n, i).to_dense() - eye for i in range(2, n + 1)])


def negation_potential(g: Game) -> PotentialCertificate:
    """``V^P = -V^c_1 (M (x) I_{2^(n-1)})`` with ``xi = B (V^c_1)^T``."""
    _require_boolean(g)
    if not check_negation_symmetric(g):
        raise ValueError("game is not negation symmetric")
    n = g.n
    v1 = g.payoffs[0]
    vp = tuple(-x for x in kron(NEGATION, LogicalMatrix.identity(2 ** (n - 1))).act_on_row(v1))
    xi = (negation_B(n) @ RationalMatrix.column(v1)).flat()
    h = 2 ** (n - 1)
    blocks = tuple(tuple(xi[i * h : (i + 1) * h]) for i in range(n))
    return PotentialCertificate(blocks, vp, (Fraction(1),) * n)
