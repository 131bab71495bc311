"""Games, profile indexing and the player/strategy permutation matrices."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symgames.game import (
    Game,
    index_to_profile,
    iter_profiles,
    multiplicity_vector,
    phi,
    phi_i,
    profile_to_index,
    t_sigma,
    t_theta,
)
from symgames.group import BlockPermutation, Permutation, block_decompose, parse_cycles
from symgames.stp_core import RationalMatrix, stp

shapes = st.tuples(st.integers(1, 4), st.integers(2, 3))


@st.composite
def profiles_of(draw, n, kappa):
    return tuple(draw(st.integers(1, kappa)) for _ in range(n))


def profile_vector(profile, kappa):
    """x = x_1 |x x_2 |x ... built with the STP itself."""
    x = RationalMatrix(oracles.unit(kappa, profile[0]))
    for s in profile[1:]:
        x = stp(x, RationalMatrix(oracles.unit(kappa, s)))
    return x


# ----------------------------------------------------------------- indexing

@settings(max_examples=80)
@given(shapes.flatmap(lambda s: st.tuples(st.just(s), profiles_of(*s))))
def test_profile_index_round_trip(args):
    (n, kappa), p = args
    idx = profile_to_index(p, kappa)
    assert idx == oracles.index(p, kappa) + 1
    assert index_to_profile(idx, n, kappa) == p
    assert profile_vector(p, kappa).flat() == tuple(Fraction(int(i == idx - 1)) for i in range(kappa**n))


def test_mixed_strategy_counts():
    counts = (2, 3)
    assert [profile_to_index(p, counts) for p in iter_profiles(2, counts)] == list(range(1, 7))
    assert index_to_profile(5, 2, counts) == (2, 2)


def test_first_player_is_most_significant():
    assert list(iter_profiles(2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_multiplicity_vector():
    assert multiplicity_vector((1, 3, 1, 2), 3) == (2, 1, 1)
    assert multiplicity_vector((1, 3, 1, 2), 3, exclude=1) == (1, 1, 1)


# ----------------------------------------------------------------- Game

def test_game_validation():
    with pytest.raises(ValueError):
        Game(2, 2, ((1, 2, 3, 4),))
    with pytest.raises(ValueError):
        Game(2, 2, ((1, 2, 3), (1, 2, 3)))
    with pytest.raises(ValueError):
        Game(2, 1, ((1,), (1,)))
    with pytest.raises(TypeError):
        Game(1, 2, ((0.5, 1),))


def test_game_constructors_agree():
    g = Game.from_function(2, 2, lambda i, p: 10 * i + p[0] - p[1])
    assert g.payoffs == ((10, 9, 11, 10), (20, 19, 21, 20))
    assert Game.from_structure_vector(2, 2, g.structure_vector()) == g
    assert g.payoff(2, (2, 1)) == 21
    assert g.scaled((2, "1/2")).payoffs == ((20, 18, 22, 20), (10, Fraction(19, 2), Fraction(21, 2), 10))
    assert Game.zero(3, 2).structure_vector() == (0,) * 24


@settings(max_examples=40, deadline=None)
@given(shapes, st.data())
def test_payoff_is_structure_vector_times_profile(shape, data):
    n, kappa = shape
    v = [data.draw(st.integers(-5, 5)) for _ in range(kappa**n)]
    g = Game(n, kappa, (tuple(v),) * n)
    p = data.draw(profiles_of(n, kappa))
    lhs = (RationalMatrix.row(v) @ profile_vector(p, kappa)).flat()[0]
    assert g.payoff(1, p) == lhs


# ----------------------------------------------------------------- Phi and T

@settings(max_examples=40, deadline=None)
@given(shapes.flatmap(lambda s: st.tuples(st.just(s), profiles_of(*s))))
def test_phi_extracts_each_strategy(args):
    (n, kappa), p = args
    x = profile_vector(p, kappa)
    for i in range(1, n + 1):
        assert phi_i(n, kappa, i).to_dense() @ x == RationalMatrix(oracles.unit(kappa, p[i - 1]))
    assert (phi(n, kappa) @ x).flat() == tuple(Fraction(int(a == s)) for s in p for a in range(1, kappa + 1))


T_SIGMA_3_3 = {
    "(2,3)": (1, 4, 7, 2, 5, 8, 3, 6, 9, 10, 13, 16, 11, 14, 17, 12, 15, 18, 19, 22, 25, 20, 23, 26, 21, 24, 27),
    "(1,2)": (1, 2, 3, 10, 11, 12, 19, 20, 21, 4, 5, 6, 13, 14, 15, 22, 23, 24, 7, 8, 9, 16, 17, 18, 25, 26, 27),
    "(1,2,3)": (1, 10, 19, 2, 11, 20, 3, 12, 21, 4, 13, 22, 5, 14, 23, 6, 15, 24, 7, 16, 25, 8, 17, 26, 9, 18, 27),
    "(1,3,2)": (1, 4, 7, 10, 13, 16, 19, 22, 25, 2, 5, 8, 11, 14, 17, 20, 23, 26, 3, 6, 9, 12, 15, 18, 21, 24, 27),
    "(1,3)": (1, 10, 19, 4, 13, 22, 7, 16, 25, 2, 11, 20, 5, 14, 23, 8, 17, 26, 3, 12, 21, 6, 15, 24, 9, 18, 27),
}


@pytest.mark.parametrize("cycles", sorted(T_SIGMA_3_3))
def test_t_sigma_three_players_three_strategies(cycles):
    assert t_sigma(parse_cycles(3, cycles), 3).indices == T_SIGMA_3_3[cycles]


def test_t_sigma_identity():
    assert t_sigma(Permutation.identity(3), 3).indices == tuple(range(1, 28))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_t_sigma_permutes_profile_slots(data):
    n = data.draw(st.integers(1, 4))
    kappa = data.draw(st.integers(2, 3))
    sigma = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    p = data.draw(profiles_of(n, kappa))
    moved = tuple(p[sigma.inverse()(j) - 1] for j in range(1, n + 1))
    t = t_sigma(sigma, kappa)
    assert t.act_on_column(profile_vector(p, kappa).flat()) == profile_vector(moved, kappa).flat()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_t_sigma_is_a_homomorphism(data):
    n = data.draw(st.integers(1, 4))
    kappa = data.draw(st.integers(2, 3))
    a = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    b = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    assert t_sigma(a @ b, kappa) == t_sigma(a, kappa) @ t_sigma(b, kappa)


def test_t_theta_of_known_block_permutation():
    beta = block_decompose(parse_cycles(9, "(1,2,3)(4,9,6,8)(5,7)"), 3, 3)
    assert t_theta(beta).indices == (
        15, 12, 18, 13, 10, 16, 14, 11, 17, 24, 21, 27, 22, 19, 25, 23, 20, 26, 6, 3, 9, 4, 1, 7, 5, 2, 8,
    )


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_t_theta_moves_and_relabels(data):
    n = data.draw(st.integers(1, 3))
    kappa = data.draw(st.integers(2, 3))
    pi = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    d = tuple(Permutation(tuple(data.draw(st.permutations(list(range(1, kappa + 1)))))) for _ in range(n))
    theta = BlockPermutation(n, kappa, pi, d)
    p = data.draw(profiles_of(n, kappa))
    moved = tuple(d[j - 1](p[pi.inverse()(j) - 1]) for j in range(1, n + 1))
    assert t_theta(theta).act_on_column(profile_vector(p, kappa).flat()) == profile_vector(moved, kappa).flat()
