"""Tabulate symmetric subspace dimensions and solver timings.

Usage: python3 scripts/subspace_dimensions.py [--max-players N] [--max-strategies K]
"""
import argparse
import math
import time

from symgames.boolean_sym import build_B, build_boolean_E, build_Hn, build_Kn
from symgames.config import BoundExceeded
from symgames.symmetry import symmetric_subspace_basis


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-players", type=int, default=5)
    p.add_argument("--max-strategies", type=int, default=3)
    p.add_argument("--bound", type=int, default=4096)
    args = p.parse_args(argv)

    print(f"{'n':>2} {'k':>2} {'dim':>5} {'expected':>8} {'seconds':>8}")
    for kappa in range(2, args.max_strategies + 1):
        for n in range(1, args.max_players + 1):
            expected = kappa * math.comb(n + kappa - 2, kappa - 1)
            t0 = time.perf_counter()
            try:
                dim = len(symmetric_subspace_basis(n, kappa, bound=args.bound))
            except BoundExceeded:
                print(f"{n:>2} {kappa:>2} {'-':>5} {expected:>8} {'bound':>8}")
                continue
            print(f"{n:>2} {kappa:>2} {dim:>5} {expected:>8} {time.perf_counter() - t0:>8.2f}")

    print("\nE(n) K_n = B(n) H_n")
    for n in range(2, 7):
        t0 = time.perf_counter()
        ok = build_boolean_E(n) @ build_Kn(n) == build_B(n) @ build_Hn(n)
        print(f"  n={n}: {ok} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
