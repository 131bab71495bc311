"""Closed-form constructions for two-strategy games."""
import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symgames.boolean_sym import (
    NEGATION,
    BooleanSymmetricCoords,
    build_B,
    build_boolean_E,
    build_Hn,
    build_Kn,
    build_Kn_recursive,
    build_Qn,
    build_Rn,
    build_Tn,
    check_negation_symmetric,
    check_symmetric_boolean,
    game_from_symmetric_coords,
    negation_B,
    negation_Gamma,
    negation_partner,
    negation_potential,
    psi_matrix,
    renaming_boolean_potential,
    symmetric_boolean_certificate,
    symmetric_boolean_potential,
    symmetric_lift,
    weighted_boolean_potential,
)
from symgames.game import Game
from symgames.group import Permutation
from symgames.linalg import rank
from symgames.potential import PotentialProblem, build_b, build_E, gauge_equivalent, solve_potential, verify_potential
from symgames.stp_core import RationalMatrix
from symgames.symmetry import Renaming, Weights, check_ordinary, renamed_game

values = st.integers(-9, 9).map(Fraction)


def coords(n):
    return st.lists(values, min_size=2 * n, max_size=2 * n).map(lambda v: BooleanSymmetricCoords(n, tuple(v)))


def idx(profile):
    return oracles.index(profile, 2)


# ----------------------------------------------------------------- building blocks

def test_small_building_blocks():
    assert build_Tn(2) == RationalMatrix.identity(2)
    assert build_Tn(3) == RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert build_Hn(2) == RationalMatrix.identity(4)
    assert build_Rn(2) == RationalMatrix([[1], [0]])
    assert build_Rn(3) == RationalMatrix([[1, 1], [0, 1], [0, 1], [0, 0]])
    assert build_Qn(2) == RationalMatrix([[0, -1, 1, 0], [0, 0, 0, 0]])
    with pytest.raises(ValueError):
        build_Hn(1)


@pytest.mark.parametrize("n", range(2, 7))
def test_column_indicators(n):
    h, r = build_Hn(n), build_Rn(n)
    assert h.shape == (2**n, 2 * n)
    assert r.shape == (2 ** (n - 1), n - 1)
    for x in itertools.product((1, 2), repeat=n):
        ones = x[1:].count(1)
        row = h[idx(x), :].flat()
        col = n - ones if x[0] == 1 else 2 * n - ones
        assert row == tuple(Fraction(int(j == col)) for j in range(1, 2 * n + 1))
    for x in itertools.product((1, 2), repeat=n - 1):
        assert r[idx(x), :].flat() == tuple(Fraction(int(x.count(1) >= n - i)) for i in range(1, n))


@pytest.mark.parametrize("n", range(2, 6))
def test_both_k_variants_solve_the_linear_identity(n):
    e, rhs = build_boolean_E(n), build_B(n) @ build_Hn(n)
    assert e @ build_Kn(n) == rhs
    assert e @ build_Kn_recursive(n) == rhs


def test_two_player_k_variants_differ_by_a_gauge_direction():
    diff = build_Kn(2) - build_Kn_recursive(2)
    assert diff != RationalMatrix.zeros(4, 4)
    assert build_boolean_E(2) @ diff == RationalMatrix.zeros(4, 4)
    assert build_Kn(2)[:2, :] == RationalMatrix([[0, 0, 1, 0], [0, 1, 0, 0]])


def test_two_player_psi():
    assert psi_matrix(2) == RationalMatrix([[1, 0, 0, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 0, 0, 1]])
    # the recursive K_2 shifts the second row by the all-ones gauge
    assert psi_matrix(2, build_Kn_recursive(2)) == RationalMatrix([[1, 0, 0, 0], [1, 1, 1, 0], [-1, 0, 0, 0], [0, 0, 0, 1]])


# ----------------------------------------------------------------- symmetric games

@pytest.mark.parametrize("n", range(2, 6))
def test_lift_spans_exactly_the_symmetric_games(n):
    lift = symmetric_lift(n)
    assert rank(lift) == 2 * n
    for j in range(2 * n):
        g = Game.from_structure_vector(n, 2, lift.col(j).flat())
        assert oracles.brute_ordinary(g.payoffs, n, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(coords))
def test_coordinates_round_trip(c):
    g = game_from_symmetric_coords(c)
    assert check_ordinary(g)
    assert check_symmetric_boolean(g) == c


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.randoms(use_true_random=False))
def test_symmetric_games_have_their_coordinates(n, rnd):
    rng = random.Random(rnd.random())
    g = Game(n, 2, oracles.random_symmetric_payoffs(rng, n, 2))
    c = check_symmetric_boolean(g)
    assert c is not None
    # the first n coordinates are c_1 with x_1 = true and n - i opponents true
    for i in range(1, n + 1):
        x = (1,) + (1,) * (n - i) + (2,) * (i - 1)
        assert c.v[i - 1] == g.payoff(1, x)


def test_non_symmetric_game_has_no_coordinates():
    assert check_symmetric_boolean(Game(2, 2, ((1, -1, -1, 1), (-1, 1, 1, -1)))) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(coords))
def test_closed_form_potential(c):
    g = game_from_symmetric_coords(c)
    problem = PotentialProblem.from_game(g)
    cert = symmetric_boolean_certificate(c)
    assert cert.potential == symmetric_boolean_potential(c)
    assert verify_potential(problem, cert.potential)
    xi = RationalMatrix.column([x for block in cert.xi for x in block])
    assert (build_E(problem) @ xi).flat() == build_b(problem)
    assert gauge_equivalent(cert.potential, solve_potential(problem).potential)


def test_coordinates_validate_length():
    with pytest.raises(ValueError):
        BooleanSymmetricCoords(3, (1, 2, 3))


# ----------------------------------------------------------------- weighted and renamed

TABLE_1 = Game(2, 2, ((2, 4, 6, 4), (3, 9, 6, 6)))


def test_weighted_two_by_two():
    cert = weighted_boolean_potential(TABLE_1, (3, 2))
    assert cert.potential == (-12, 0, 0, 0)
    assert cert.weights == (Fraction(1, 3), Fraction(1, 2))
    with pytest.raises(ValueError):
        weighted_boolean_potential(TABLE_1, (1, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.randoms(use_true_random=False))
def test_weighted_potential_for_planted_weights(n, rnd):
    rng = random.Random(rnd.random())
    mu = tuple(Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(n))
    base = oracles.random_symmetric_payoffs(rng, n, 2)
    g = Game(n, 2, tuple(tuple(x / m for x in v) for v, m in zip(base, mu)))
    cert = weighted_boolean_potential(g, Weights(mu))
    assert cert.weights == tuple(1 / m for m in mu)
    problem = PotentialProblem.from_game(g, cert.weights)
    assert verify_potential(problem, cert.potential)
    assert oracles.deviations_hold(g.payoffs, (2,) * n, cert.weights, cert.potential)


BATTLE_OF_SEXES = Game(2, 2, ((2, 0, 0, 1), (1, 0, 0, 2)))


def test_renamed_two_by_two():
    r = Renaming((Permutation.identity(2), Permutation((2, 1))))
    cert = renaming_boolean_potential(BATTLE_OF_SEXES, r)
    assert cert.renamed_potential == (-1, 0, 0, -2)
    assert cert.potential == (0, -1, -2, 0)
    assert renaming_boolean_potential(Game(2, 2, ((1, -1, -1, 1), (-1, 1, 1, -1))), r) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.randoms(use_true_random=False))
def test_renamed_potential_for_planted_relabelling(n, rnd):
    rng = random.Random(rnd.random())
    sym = Game(n, 2, oracles.random_symmetric_payoffs(rng, n, 2))
    r = Renaming(tuple(Permutation(rng.choice([(1, 2), (2, 1)])) for _ in range(n)))
    g = renamed_game(sym, Renaming(tuple(p.inverse() for p in r.r)))
    cert = renaming_boolean_potential(g, r)
    assert verify_potential(PotentialProblem.from_game(g), cert.potential)


# ----------------------------------------------------------------- negation symmetry

def test_negation_matrix():
    assert NEGATION.to_dense() == RationalMatrix([[0, 1], [1, 0]])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_negation_partner_forms_agree(n, data):
    v1 = tuple(data.draw(values) for _ in range(2**n))
    for i in range(2, n + 1):
        gamma = negation_partner(v1, n, i, "gamma")
        assert gamma == negation_partner(v1, n, i, "literal")
        for y in itertools.product((1, 2), repeat=n):
            x = list(y)
            x[0], x[i - 1] = 3 - x[0], 3 - x[i - 1]
            assert gamma[idx(y)] == v1[idx(x)]
    with pytest.raises(ValueError):
        negation_partner(v1, n, 2, "other")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.randoms(use_true_random=False), st.booleans())
def test_negation_check_matches_definition(n, rnd, perturb):
    rng = random.Random(rnd.random())
    payoffs = [list(v) for v in oracles.random_negation_symmetric(rng, n)]
    if perturb:
        payoffs[rng.randrange(1, n)][rng.randrange(2**n)] += 1
    g = Game(n, 2, payoffs)
    assert check_negation_symmetric(g) == (not perturb)
    assert check_negation_symmetric(g, "literal") == (not perturb)


@pytest.mark.parametrize("n", range(2, 6))
def test_negation_linear_identity(n):
    assert build_boolean_E(n) @ negation_B(n) == negation_Gamma(n)


def test_two_player_negation_family():
    a, b, c, d = 1, 2, 3, 4
    g = Game(2, 2, ((a, c, d, b), (b, d, c, a)))
    assert check_negation_symmetric(g)
    cert = negation_potential(g)
    assert cert.potential == (-4, -2, -1, -3)
    assert verify_potential(PotentialProblem.from_game(g), cert.potential)
    assert check_negation_symmetric(BATTLE_OF_SEXES)
    with pytest.raises(ValueError):
        negation_potential(TABLE_1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.randoms(use_true_random=False))
def test_negation_potential_verifies(n, rnd):
    rng = random.Random(rnd.random())
    g = Game(n, 2, oracles.random_negation_symmetric(rng, n))
    cert = negation_potential(g)
    problem = PotentialProblem.from_game(g)
    assert verify_potential(problem, cert.potential)
    assert gauge_equivalent(cert.potential, solve_potential(problem).potential)


def test_boolean_constructions_reject_other_strategy_counts():
    with pytest.raises(ValueError):
        check_symmetric_boolean(Game.zero(2, 3))
