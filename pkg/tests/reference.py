"""Independent history-based interpreter of the punished-deviation profile.

This is the test oracle for the equilibrium automata: it computes, for any
explicit history, who deviated first from the intended outcome (scanning
the history position by position against the play, with no automaton
involved) and what the equilibrium strategy therefore advises.  The
automaton under test must reproduce this advice on every history in which
its own player complies with it.
"""
from __future__ import annotations

from typing import Mapping, Optional, Sequence

from costgames import GameGraph, LassoPlay, PositionalStrategy


def first_deviator(g: GameGraph, rho: LassoPlay, history: Sequence[str]
                   ) -> Optional[str]:
    """The owner of the vertex from which the history first left the play
    `rho`, or None while the history is a prefix of it.  The verdict sticks
    to the first deviator no matter what happens afterwards."""
    if history[0] != rho.first:
        raise ValueError("history must start at the play's first vertex")
    for t in range(1, len(history)):
        if history[t] != rho.vertex(t):
            return g.owner[history[t - 1]]
    return None


def advised_move(g: GameGraph, player: str, rho: LassoPlay,
                 sigma: PositionalStrategy,
                 punish: Mapping[str, PositionalStrategy],
                 history: Sequence[str]) -> str:
    """What the equilibrium strategy of `player` plays after `history`
    (whose last vertex must belong to the player): the on-outcome strategy
    while nobody other than the player deviated first, the punishment
    strategy against the first deviator otherwise."""
    last = history[-1]
    if g.owner[last] != player:
        raise ValueError(f"history does not end in a vertex of {player!r}")
    pun = first_deviator(g, rho, history)
    if pun is None or pun == player:
        return sigma.choice[last]
    return punish[pun].choice[last]
