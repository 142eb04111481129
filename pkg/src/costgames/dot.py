"""Deterministic DOT export for game graphs and strategy automata.

Conventions: in a two-player game the first player's vertices are drawn as
circles and the second player's as boxes; with any other number of players
every vertex is a box.  Highlighted vertices (e.g. a reachability goal) are
shaded.  Edges are labeled with their price, or "price/reward" as soon as
any edge carries a non-unit reward.  Automaton transitions are labeled
"v/advice", with "-" when the state gives no advice at v.  Output depends
only on input order, never on hashing.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .core import GameGraph, StrategyAutomaton, Vertex
from .rationals import format_rational


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def export_game_dot(g: GameGraph, highlight: Iterable[Vertex] = ()) -> str:
    """DOT text for the game graph, shading the highlighted vertices."""
    shaded = set(highlight)
    unknown = shaded - set(g.vertices)
    if unknown:
        raise ValueError(f"cannot highlight unknown vertices {sorted(unknown)}")
    two_player = len(g.players) == 2
    with_rewards = any(e.reward != 1 for e in g.edges)
    lines = ["digraph game {", "  rankdir=LR;"]
    for v in g.vertices:
        shape = "circle" if two_player and g.owner[v] == g.players[0] else "box"
        attrs = [f"shape={shape}"]
        if v in shaded:
            attrs.append("style=filled")
        lines.append(f"  {_quote(v)} [{', '.join(attrs)}];")
    for e in g.edges:
        label = format_rational(e.price)
        if with_rewards:
            label += "/" + format_rational(e.reward)
        lines.append(f"  {_quote(e.src)} -> {_quote(e.dst)} "
                     f"[label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_automaton_dot(g: GameGraph, aut: StrategyAutomaton) -> str:
    """DOT text for a strategy automaton: one node per state, transitions
    labeled "read-vertex/advice" ("-" when the state advises nothing)."""
    aut.validate(g)
    lines = ["digraph automaton {", "  rankdir=LR;",
             "  __start [shape=point, label=\"\"];"]
    for m in aut.states:
        lines.append(f"  {_quote(m)} [shape=circle];")
    lines.append(f"  __start -> {_quote(aut.initial)};")
    for m in aut.states:
        for v in g.vertices:
            target = aut.delta[(m, v)]
            advice = aut.advice.get((m, v), "-")
            lines.append(f"  {_quote(m)} -> {_quote(target)} "
                         f"[label={_quote(f'{v}/{advice}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(g: GameGraph, automaton: Optional[StrategyAutomaton] = None,
               highlight: Iterable[Vertex] = ()) -> str:
    """Single entry point: the automaton's machine when one is given, the
    game graph (with optional highlighting) otherwise."""
    if automaton is not None:
        return export_automaton_dot(g, automaton)
    return export_game_dot(g, highlight)
