"""Command-line interface.

Game files are JSON objects with ``players``, ``strategies`` and ``payoffs``;
payoff entries may be integers, decimals or ``"p/q"`` strings and are read
exactly. Profiles are listed with player 1 most significant, e.g. for two
players with two strategies: (1,1), (1,2), (2,1), (2,2).

Exit codes: 0 completed, 2 input error, 3 enumeration bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Any, Optional, Sequence

from .boolean_sym import (
    check_negation_symmetric,
    check_symmetric_boolean,
    negation_potential,
    renaming_boolean_potential,
    symmetric_boolean_certificate,
    weighted_boolean_potential,
)
from .config import DEFAULT_BOUNDS, BoundExceeded, Bounds
from .game import Game
from .group import parse_cycles
from .potential import PotentialProblem, solve_potential, solve_renaming_potential, verify_potential
from .stp_core import to_fraction
from .symmetry import (
    Renaming,
    Weights,
    WeightsUndetermined,
    check_name_irrelevant,
    check_ordinary,
    check_renaming,
    check_weighted,
    infer_weights,
    player_shadow,
    search_renaming,
    strategy_symmetry_group,
    symmetric_subspace_basis,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BOUND = 3


class InputError(ValueError):
    pass


def _rat(x: Fraction) -> str:
    return str(x)


def _rats(xs) -> list[str]:
    return [_rat(x) for x in xs]


def load_game_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.loads(fh.read(), parse_float=Fraction)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    for key in ("players", "strategies", "payoffs"):
        if key not in data:
            raise InputError(f"{path}: missing field {key!r}")
    players = data["players"]
    if not isinstance(players, int) or isinstance(players, bool) or players < 1:
        raise InputError("'players' must be a positive integer")
    strategies = data["strategies"]
    if isinstance(strategies, list):
        if len(strategies) != players or not all(isinstance(k, int) and not isinstance(k, bool) and k >= 1 for k in strategies):
            raise InputError("'strategies' list must hold one positive integer per player")
    elif not isinstance(strategies, int) or isinstance(strategies, bool) or strategies < 1:
        raise InputError("'strategies' must be a positive integer or a list of them")
    payoffs = data["payoffs"]
    if not isinstance(payoffs, list) or not all(isinstance(v, list) for v in payoffs):
        raise InputError("'payoffs' must be a list of lists")
    try:
        payoffs = tuple(tuple(_parse_number(x) for x in v) for v in payoffs)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad payoff entry: {exc}") from exc
    return {"players": players, "strategies": strategies, "payoffs": payoffs}


def _parse_number(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError(f"boolean {x!r} is not a number")
    return to_fraction(x)


def _game(data: dict) -> Game:
    if isinstance(data["strategies"], list):
        ks = set(data["strategies"])
        if len(ks) != 1:
            raise InputError("this command needs the same strategy count for every player")
        kappa = ks.pop()
    else:
        kappa = data["strategies"]
    try:
        return Game(data["players"], kappa, data["payoffs"])
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _problem(data: dict, weights) -> PotentialProblem:
    counts = data["strategies"] if isinstance(data["strategies"], list) else [data["strategies"]] * data["players"]
    try:
        return PotentialProblem(tuple(counts), data["payoffs"], tuple(weights) if weights else ())
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_weights(text: str) -> tuple[Fraction, ...]:
    try:
        w = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad weights {text!r}: {exc}") from exc
    if any(x <= 0 for x in w):
        raise InputError("weights must be positive")
    return w


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise InputError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def parse_renaming(text: str, n: int, kappa: int) -> Renaming:
    parts = split_top_level(text)
    if len(parts) != n:
        raise InputError(f"renaming lists {len(parts)} permutations for {n} players")
    try:
        return Renaming(tuple(parse_cycles(kappa, p) for p in parts))
    except ValueError as exc:
        raise InputError(f"bad renaming {text!r}: {exc}") from exc


def _bounds(args) -> Bounds:
    if args.bound is None:
        return DEFAULT_BOUNDS
    return replace(DEFAULT_BOUNDS, theta_size=args.bound, renaming_count=args.bound, basis_dim=args.bound)


def cmd_classify(args) -> dict:
    g = _game(load_game_file(args.file))
    bounds = _bounds(args)
    report: dict[str, Any] = {"players": g.n, "strategies": g.kappa, "ordinary": check_ordinary(g)}
    try:
        w = infer_weights(g)
        report["weights"] = list(w.integer_form()) if w else None
        report["weights_normalized"] = _rats(w.normalized().mu) if w else None
    except WeightsUndetermined:
        report["weights"] = "undetermined"
        report["weights_normalized"] = "undetermined"
    try:
        r = search_renaming(g, bound=bounds.renaming_count)
        report["renaming"] = [str(p) for p in r.r] if r else None
    except BoundExceeded:
        if args.strict:
            raise
        report["renaming"] = "skipped"
    try:
        report["name_irrelevant"] = check_name_irrelevant(g, bound=bounds.theta_size)
    except BoundExceeded:
        if args.strict:
            raise
        report["name_irrelevant"] = "skipped"
    report["negation_symmetric"] = check_negation_symmetric(g) if g.kappa == 2 and g.n >= 2 else None
    return report


def cmd_potential(args) -> dict:
    data = load_game_file(args.file)
    weights = parse_weights(args.weights) if args.weights else None
    if weights is not None and len(weights) != data["players"]:
        raise InputError(f"{len(weights)} weights for {data['players']} players")
    problem = _problem(data, weights)
    common = not isinstance(data["strategies"], list) or len(set(data["strategies"])) == 1
    renamed = None
    cert = None
    method = "potential-equation"
    if args.renaming:
        g = _game(data)
        if weights is not None:
            raise InputError("--weights and --renaming cannot be combined")
        r = parse_renaming(args.renaming, g.n, g.kappa)
        if g.kappa == 2 and g.n >= 2 and check_renaming(g, r):
            cert = renaming_boolean_potential(g, r)
            method = "renaming-symmetric-closed-form"
        else:
            cert = solve_renaming_potential(g, r)
            method = "renamed-potential-equation"
        if cert is not None:
            renamed = cert.renamed_potential
    else:
        g = _game(data) if common else None
        boolean = g is not None and g.kappa == 2 and g.n >= 2
        if boolean and weights is not None and check_weighted(g, Weights(tuple(1 / w for w in weights))):
            cert = weighted_boolean_potential(g, tuple(1 / w for w in weights))
            method = "weighted-symmetric-closed-form"
        elif boolean and weights is None:
            coords = check_symmetric_boolean(g)
            if coords is not None:
                cert = symmetric_boolean_certificate(coords)
                method = "symmetric-closed-form"
            elif check_negation_symmetric(g):
                cert = negation_potential(g)
                method = "negation-symmetric-closed-form"
        if cert is None:
            cert = solve_potential(problem)
            method = "potential-equation"
    if cert is not None and not verify_potential(problem, cert.potential):
        raise AssertionError("potential vector failed re-verification")
    report: dict[str, Any] = {
        "is_potential": cert is not None,
        "potential_vector": _rats(cert.potential) if cert else None,
        "weights": _rats(problem.weights),
        "method": method if cert else None,
    }
    if args.renaming:
        report["renamed_potential_vector"] = _rats(renamed) if renamed is not None else None
    return report


def cmd_basis(args) -> dict:
    bounds = _bounds(args)
    if args.players < 1 or args.strategies < 2:
        raise InputError("need players >= 1 and strategies >= 2")
    kind: Any = "ordinary"
    if args.weights and args.renaming:
        raise InputError("--weights and --renaming cannot be combined")
    if args.weights:
        w = parse_weights(args.weights)
        if len(w) != args.players:
            raise InputError(f"{len(w)} weights for {args.players} players")
        kind = Weights(w)
    elif args.renaming:
        kind = parse_renaming(args.renaming, args.players, args.strategies)
    basis = symmetric_subspace_basis(args.players, args.strategies, kind, bound=bounds.basis_dim)
    return {
        "players": args.players,
        "strategies": args.strategies,
        "dimension": len(basis),
        "basis": [_rats(v) for v in basis],
    }


def cmd_strategy_symmetries(args) -> dict:
    g = _game(load_game_file(args.file))
    bounds = _bounds(args)
    group = strategy_symmetry_group(g, bound=bounds.theta_size)
    shadow = player_shadow(group)
    elements = [{"pi": str(t.pi), "d": [str(d) for d in t.d], "full": str(t.to_full())} for t in group]
    full_sn = len(shadow) == _factorial(g.n)
    return {
        "count": len(group),
        "elements": elements,
        "player_symmetries": [str(p) for p in shadow],
        "name_irrelevant": full_sn,
    }


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
        return
    for key, value in report.items():
        if key == "basis":
            out.write(f"{key}:\n")
            for row in value:
                out.write("  [" + ", ".join(row) + "]\n")
        elif key == "elements":
            out.write(f"{key}:\n")
            for e in value:
                out.write(f"  ({e['pi']}; {', '.join(e['d'])})  = {e['full']}\n")
        else:
            out.write(f"{key}: {_text(value)}\n")


def _text(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symgames", description="Symmetry and potential analysis of finite games.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--bound", type=int, default=None, help="cap on enumerated objects / basis dimension")
    common.add_argument("--strict", action="store_true", help="fail with exit code 3 instead of skipping over-bound checks")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="report every symmetry notion")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("potential", parents=[common], help="find a (weighted) potential")
    c.add_argument("file")
    c.add_argument("--weights", help="comma-separated positive rationals, e.g. 1/3,1/2")
    c.add_argument("--renaming", help='one cycle string per player, e.g. "(),(1,2)"')
    c.set_defaults(func=cmd_potential)

    c = sub.add_parser("basis", parents=[common], help="basis of the symmetric subspace")
    c.add_argument("players", type=int)
    c.add_argument("strategies", type=int)
    c.add_argument("--weights")
    c.add_argument("--renaming")
    c.set_defaults(func=cmd_basis)

    c = sub.add_parser("strategy-symmetries", parents=[common], help="list the strategy symmetry group")
    c.add_argument("file")
    c.set_defaults(func=cmd_strategy_symmetries)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(report, args.format, out)
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
