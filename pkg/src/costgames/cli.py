"""Command-line interface.

Subcommands: validate, eval, solve, synthesize, verify, oracle.  Results go
to standard output, diagnostics to standard error.  Exit codes: 0 success,
1 validation or parse error, 2 a profitable deviation was found, 3 internal
invariant failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Mapping, Optional, Sequence

from . import bruteforce, equilibrium, gamefile, solvers
from .core import CostSpec, GameGraph, Player, Vertex, validate_game
from .dot import export_automaton_dot, export_game_dot
from .evaluate import eval_lasso
from .instances import MinMaxInstance
from .rationals import parse_rational

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PROFITABLE = 2
EXIT_INTERNAL = 3


def _load_game(path: str) -> tuple[GameGraph, dict[Player, CostSpec], Vertex]:
    return gamefile.parse_game(Path(path).read_bytes())


def _require_objective(specs: Mapping[Player, CostSpec], g: GameGraph,
                       player: str) -> CostSpec:
    if player not in g.players:
        raise ValueError(f"unknown player {player!r}")
    if player not in specs:
        raise ValueError(f"player {player!r} has no objective")
    return specs[player]


def _parse_overrides(raws: Sequence[str], g: GameGraph
                     ) -> dict[Player, dict[Vertex, Vertex]]:
    """Each argument looks like "p1=A:B,C:D": a player and a comma-separated
    list of vertex:successor assignments."""
    overrides: dict[Player, dict[Vertex, Vertex]] = {}
    for raw in raws:
        player, sep, body = raw.partition("=")
        if not sep or not body:
            raise ValueError(
                f"override must look like player=vertex:succ,...: {raw!r}")
        if player not in g.players:
            raise ValueError(f"override for unknown player {player!r}")
        table = overrides.setdefault(player, {})
        for piece in body.split(","):
            src, sep2, dst = piece.partition(":")
            if not sep2:
                raise ValueError(f"override assignment needs vertex:succ, "
                                 f"got {piece!r}")
            table[src.strip()] = dst.strip()
    return overrides


def _cmd_validate(args: argparse.Namespace) -> int:
    g, specs, _initial = _load_game(args.game)
    report = validate_game(g, specs)
    print(report)
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_eval(args: argparse.Namespace) -> int:
    g, specs, _initial = _load_game(args.game)
    spec = _require_objective(specs, g, args.player)
    play = gamefile.parse_lasso(args.lasso)
    print(eval_lasso(spec, play, g))
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g, specs, _initial = _load_game(args.game)
    spec = _require_objective(specs, g, args.player)
    inst = MinMaxInstance.for_player(g, args.player, spec)
    epsilon = parse_rational(args.epsilon) if args.epsilon else None
    res = solvers.solve(inst, epsilon=epsilon)
    for v in g.vertices:
        print(f"value {v} {res.values[v]}")
    for v in g.vertices:
        if v in inst.min_vertices and v in res.sigma_min.choice:
            print(f"min {v} {res.sigma_min.choice[v]}")
    for v in g.vertices:
        if v in inst.max_vertices and v in res.sigma_max.choice:
            print(f"max {v} {res.sigma_max.choice[v]}")
    return EXIT_OK


def _cmd_synthesize(args: argparse.Namespace) -> int:
    g, specs, initial = _load_game(args.game)
    v0 = args.start or initial
    overrides = _parse_overrides(args.override or [], g)
    profile = equilibrium.synthesize_ne(g, specs, v0, overrides or None)
    print(f"outcome {profile.outcome}")
    for p in g.players:
        print(f"cost {p} {profile.costs[p]}")
    for p in g.players:
        print(f"value {p} {profile.values[p]}")
    for p in g.players:
        aut = profile.automata[p]
        print(f"automaton {p} states {aut.size} initial {aut.initial}")
    if args.emit_json:
        Path(args.emit_json).write_text(
            gamefile.serialize_profile(g, profile.automata, v0),
            encoding="utf-8")
    if args.emit_dot:
        outdir = Path(args.emit_dot)
        outdir.mkdir(parents=True, exist_ok=True)
        goals = set()
        for spec in specs.values():
            goals |= set(getattr(spec, "goal", ()))
        (outdir / "game.dot").write_text(
            export_game_dot(g, sorted(goals)), encoding="utf-8")
        for p in g.players:
            (outdir / f"automaton_{p}.dot").write_text(
                export_automaton_dot(g, profile.automata[p]), encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, specs, initial = _load_game(args.game)
    automata, v0 = gamefile.parse_profile(
        Path(args.profile).read_bytes(), g)
    report = equilibrium.verify_ne(g, specs, automata, v0 or initial)
    for p in g.players:
        audit = report.audits[p]
        line = (f"player {p} outcome {audit.outcome_cost} "
                f"best {audit.best_response}")
        if audit.profitable:
            line += f" profitable witness {audit.witness}"
        else:
            line += " ok"
        print(line)
    return EXIT_PROFITABLE if report.any_profitable else EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, specs, _initial = _load_game(args.game)
    spec = _require_objective(specs, g, args.player)
    inst = MinMaxInstance.for_player(g, args.player, spec)
    result = bruteforce.brute_force_value(inst, cap=args.cap)
    for v in g.vertices:
        print(f"upper {v} {result.upper[v]}")
    for v in g.vertices:
        print(f"lower {v} {result.lower[v]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="costgames",
        description="Solve, synthesize, and audit multiplayer cost games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a game document")
    p.add_argument("game")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("eval", help="evaluate one player's cost of a lasso play")
    p.add_argument("game")
    p.add_argument("--player", required=True)
    p.add_argument("--lasso", required=True,
                   help='play as "prefix;cycle", e.g. "A;B,C"')
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("solve", help="solve one player's two-sided game")
    p.add_argument("game")
    p.add_argument("--player", required=True)
    p.add_argument("--epsilon", default=None,
                   help="accuracy for the approximate discounted mode")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("synthesize", help="synthesize a Nash equilibrium")
    p.add_argument("game")
    p.add_argument("--start", default=None, help="override the initial vertex")
    p.add_argument("--override", action="append", metavar="p=A:B,...",
                   help="replace part of a player's strategy (repeatable); "
                        "must stay optimal")
    p.add_argument("--emit-json", default=None, metavar="FILE",
                   help="write the profile as JSON")
    p.add_argument("--emit-dot", default=None, metavar="DIR",
                   help="write DOT renderings of the game and all automata")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("verify", help="audit a strategy profile")
    p.add_argument("game")
    p.add_argument("--profile", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force one player's game values")
    p.add_argument("game")
    p.add_argument("--player", required=True)
    p.add_argument("--cap", type=int, default=10**6,
                   help="largest profile space the enumeration may scan")
    p.set_defaults(func=_cmd_oracle)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (gamefile.GameFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
