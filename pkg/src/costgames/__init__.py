"""Multiplayer cost games on finite graphs: exact solvers for two-sided
min-max games, Nash equilibrium synthesis with punishment automata, and
independent best-response verification."""

from . import samples
from .bruteforce import BruteForceResult, brute_force_value, profile_outcome
from .core import (CostSpec, DiscountedPrice, Edge, EnergySup, GameGraph,
                   History, LassoPlay, MeanPayoff, Player, PositionalStrategy,
                   RatioAverage, ReachabilityPrice, StrategyAutomaton,
                   ValidationReport, Vertex, validate_game)
from .dot import export_automaton_dot, export_dot, export_game_dot
from .equilibrium import (NashProfile, PlayerAudit, ProfileProvenance,
                          VerificationReport, automata_isomorphic,
                          build_strategy_automaton, coalition_to_automaton,
                          outcome_of, positional_to_automaton, synthesize_ne,
                          synthesize_ne_general, verify_ne)
from .evaluate import (PrefixCoefficients, eval_lasso, partial_price_average,
                       partial_ratio, prefix_decompose, prepend_history)
from .gamefile import (GameFormatError, parse_game, parse_lasso,
                       parse_profile, serialize_game, serialize_profile)
from .instances import MinMaxInstance, SolveResult
from .oneplayer import one_player_optimum
from .rationals import (NEG_INF, POS_INF, ExtRational, format_rational,
                        parse_rational)
from .solvers import (attractor, solve, solve_discounted, solve_mean_payoff,
                      solve_ratio, solve_reachability_price)

__version__ = "0.1.0"

__all__ = [
    "BruteForceResult", "CostSpec", "DiscountedPrice", "Edge", "EnergySup",
    "ExtRational", "GameFormatError", "GameGraph", "History", "LassoPlay",
    "MeanPayoff", "MinMaxInstance", "NashProfile", "NEG_INF", "POS_INF",
    "PlayerAudit", "Player", "PositionalStrategy", "PrefixCoefficients",
    "ProfileProvenance", "RatioAverage", "ReachabilityPrice", "SolveResult",
    "StrategyAutomaton", "ValidationReport", "VerificationReport", "Vertex",
    "attractor", "automata_isomorphic", "brute_force_value",
    "build_strategy_automaton", "coalition_to_automaton", "eval_lasso",
    "export_automaton_dot", "export_dot", "export_game_dot",
    "format_rational", "one_player_optimum", "outcome_of", "parse_game",
    "parse_lasso", "parse_profile", "parse_rational", "partial_price_average",
    "partial_ratio", "positional_to_automaton", "prefix_decompose",
    "prepend_history", "profile_outcome", "samples", "serialize_game",
    "serialize_profile", "solve", "solve_discounted", "solve_mean_payoff",
    "solve_ratio", "solve_reachability_price", "synthesize_ne",
    "synthesize_ne_general", "validate_game", "verify_ne",
]
