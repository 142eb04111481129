"""Seeded random generators shared by the test modules.

Everything is driven by an explicit random.Random so failures reproduce.
Graphs keep prices nonnegative and rewards strictly positive, which makes
every objective kind applicable to every generated graph.
"""
from __future__ import annotations

import random
import string
from fractions import Fraction

from costgames import (CostSpec, DiscountedPrice, Edge, GameGraph, MeanPayoff,
                       MinMaxInstance, RatioAverage, ReachabilityPrice,
                       StrategyAutomaton)

SOLVABLE_KINDS = ("reachability_price", "discounted", "mean_payoff", "ratio")

_LAMBDAS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4),
            Fraction(3, 4))


def random_graph(rng: random.Random, max_vertices: int = 8,
                 max_players: int = 4, max_out: int = 3,
                 max_price: int = 4) -> GameGraph:
    """A random sinkless game graph with small nonnegative integer prices
    and strictly positive rewards."""
    n = rng.randint(2, max_vertices)
    vertices = tuple(string.ascii_uppercase[:n])
    k = rng.randint(2, max_players)
    players = tuple(f"p{i + 1}" for i in range(k))
    owner = {v: rng.choice(players) for v in vertices}
    edges = []
    for v in vertices:
        out = rng.sample(vertices, rng.randint(1, min(max_out, n)))
        for u in out:
            edges.append(Edge(v, u, Fraction(rng.randint(0, max_price)),
                              Fraction(rng.randint(1, 3))))
    return GameGraph(players, vertices, owner, tuple(edges))


def random_objective(rng: random.Random, g: GameGraph,
                     kind: str | None = None) -> CostSpec:
    kind = kind or rng.choice(SOLVABLE_KINDS)
    if kind == "reachability_price":
        count = rng.randint(1, len(g.vertices))
        return ReachabilityPrice(rng.sample(g.vertices, count))
    if kind == "discounted":
        return DiscountedPrice(rng.choice(_LAMBDAS))
    if kind == "mean_payoff":
        return MeanPayoff()
    if kind == "ratio":
        return RatioAverage()
    raise ValueError(kind)


def random_game(rng: random.Random, max_vertices: int = 8,
                max_players: int = 4):
    """(graph, specs, initial) with a mixed solvable objective per player."""
    g = random_graph(rng, max_vertices=max_vertices, max_players=max_players)
    specs = {p: random_objective(rng, g) for p in g.players}
    return g, specs, rng.choice(g.vertices)


def random_instance(rng: random.Random, kind: str, max_vertices: int = 6,
                    max_out: int = 3) -> MinMaxInstance:
    """A random two-sided instance of the given objective kind."""
    g = random_graph(rng, max_vertices=max_vertices, max_players=2,
                     max_out=max_out)
    spec = random_objective(rng, g, kind)
    min_side = frozenset(v for v in g.vertices if rng.random() < 0.5)
    return MinMaxInstance(g, min_side,
                          frozenset(g.vertices) - min_side, spec)


def random_walk(rng: random.Random, g: GameGraph, length: int,
                start: str | None = None) -> list[str]:
    """A random edge walk with `length` vertices (length >= 1)."""
    v = start if start is not None else rng.choice(g.vertices)
    walk = [v]
    while len(walk) < length:
        v = rng.choice(g.successors(v))
        walk.append(v)
    return walk


def random_lasso(rng: random.Random, g: GameGraph, start: str | None = None):
    """A random lasso play: walk until some vertex repeats."""
    v = start if start is not None else rng.choice(g.vertices)
    trail = [v]
    seen = {v}
    while True:
        v = rng.choice(g.successors(v))
        trail.append(v)
        if v in seen:
            break
        seen.add(v)
    from costgames import LassoPlay
    return LassoPlay.from_walk(trail)


def compliant_history(rng: random.Random, g: GameGraph,
                      aut: StrategyAutomaton, v0: str, length: int
                      ) -> list[str]:
    """A random history from v0 in which the automaton's player always
    follows the automaton's advice and everyone else moves arbitrarily."""
    state = aut.initial
    walk = [v0]
    v = v0
    for _ in range(length - 1):
        if g.owner[v] == aut.player:
            nxt = aut.advice_at(state, v)
        else:
            nxt = rng.choice(g.successors(v))
        state = aut.step(state, v)
        walk.append(nxt)
        v = nxt
    return walk
