"""Recompute the worked small-game results and print them side by side."""
from fractions import Fraction

from symgames import Game, PotentialProblem, Weights, parse_cycles, verify_potential
from symgames.boolean_sym import negation_potential, psi_matrix, renaming_boolean_potential, weighted_boolean_potential
from symgames.group import block_compose, block_decompose
from symgames.symmetry import (
    check_name_irrelevant,
    infer_weights,
    search_renaming,
    strategy_invariant_basis,
    strategy_symmetry_group,
    symmetric_subspace_basis,
)


def fmt(xs):
    return "[" + ", ".join(str(Fraction(x)) for x in xs) + "]"


def main():
    print("ordinary symmetric subspace, 3 players x 3 strategies:", len(symmetric_subspace_basis(3, 3)))

    alpha = block_decompose(parse_cycles(9, "(1,6,3,4,2,5)"), 3, 3)
    beta = block_decompose(parse_cycles(9, "(1,2,3)(4,9,6,8)(5,7)"), 3, 3)
    gamma = block_compose(beta, alpha)
    print("beta o alpha =", gamma.to_full(), " decomposed as", gamma)
    print("games invariant under beta:", len(strategy_invariant_basis(3, 3, [beta])), "dimensions")

    pennies = Game(2, 2, ((1, -1, -1, 1), (-1, 1, 1, -1)))
    group = strategy_symmetry_group(pennies)
    print("matching pennies strategy symmetries:", ", ".join(str(t.to_full()) for t in group))
    print("matching pennies name-irrelevant:", check_name_irrelevant(pennies))

    print("Psi for four players:")
    for row in psi_matrix(4).tolist():
        print("  ", " ".join(f"{int(x):2d}" for x in row))

    weighted = Game(2, 2, ((2, 4, 6, 4), (3, 9, 6, 6)))
    mu = infer_weights(weighted)
    cert = weighted_boolean_potential(weighted, Weights(mu.integer_form()))
    ok = verify_potential(PotentialProblem.from_game(weighted, cert.weights), cert.potential)
    print(f"weighted game: mu = {list(mu.integer_form())}, potential {fmt(cert.potential)} with w = {fmt(cert.weights)}, verified {ok}")

    sexes = Game(2, 2, ((2, 0, 0, 1), (1, 0, 0, 2)))
    r = search_renaming(sexes)
    cert = renaming_boolean_potential(sexes, r)
    print(f"battle of the sexes: renaming {r}, renamed potential {fmt(cert.renamed_potential)}, potential {fmt(cert.potential)}")

    negation = Game(2, 2, ((1, 3, 4, 2), (2, 4, 3, 1)))
    print("negation-symmetric 2x2 (a,b,c,d) = (1,2,3,4): potential", fmt(negation_potential(negation).potential))


if __name__ == "__main__":
    main()
