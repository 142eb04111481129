"""Optimal plays when a single decision maker controls every vertex.

`one_player_optimum` returns the optimal cost from a start vertex together
with a witness lasso attaining it.  For the prefix-independent costs the
optimum over plays equals the optimum over reachable cycles (averages of
any play are eventually dominated by the best reachable cycle), so cycle
search is both sound and witness-producing; the reachability and discounted
costs reuse the two-sided solvers with a degenerate side split.
"""
from __future__ import annotations

from typing import Mapping

from . import graphalg, solvers
from .core import (CostSpec, DiscountedPrice, GameGraph, LassoPlay,
                   MeanPayoff, RatioAverage, ReachabilityPrice, Vertex)
from .instances import MinMaxInstance
from .rationals import ExtRational


def _walk_lasso(choice: Mapping[Vertex, Vertex], start: Vertex) -> LassoPlay:
    trail = [start]
    seen = {start}
    while True:
        nxt = choice[trail[-1]]
        trail.append(nxt)
        if nxt in seen:
            return LassoPlay.from_walk(trail)
        seen.add(nxt)


def _cycle_lasso(g: GameGraph, succ: list[list[int]], start: int,
                 cycle: list[int]) -> LassoPlay:
    path = graphalg.bfs_path(succ, start, set(cycle))
    assert path is not None, "witness cycle not reachable"
    entry = path[-1]
    at = cycle.index(entry)
    rotated = cycle[at:] + cycle[:at]
    names = g.vertices
    return LassoPlay([names[i] for i in path[:-1]], [names[i] for i in rotated])


def one_player_optimum(g: GameGraph, spec: CostSpec, owner_is_min: bool,
                       start: Vertex) -> tuple[ExtRational, LassoPlay]:
    """Best achievable cost from `start` when one controller picks every
    move, minimizing if `owner_is_min` else maximizing, with a witness play.
    """
    if start not in set(g.vertices):
        raise ValueError(f"unknown start vertex {start!r}")
    for v in g.vertices:
        if not g.out_edges(v):
            raise ValueError(f"vertex {v!r} has no outgoing edge")
    if not spec.solvable:
        raise ValueError(f"{spec.kind} objective is evaluation-only; "
                         "optimal plays are not computed for it")

    if isinstance(spec, (ReachabilityPrice, DiscountedPrice)):
        everyone = frozenset(g.vertices)
        nobody: frozenset[Vertex] = frozenset()
        if owner_is_min:
            inst = MinMaxInstance(g, everyone, nobody, spec)
        else:
            inst = MinMaxInstance(g, nobody, everyone, spec)
        res = solvers.solve(inst)
        choice = dict(res.sigma_min.choice)
        choice.update(res.sigma_max.choice)
        witness = _walk_lasso(choice, start)
        return res.values[start], witness

    idx = {v: i for i, v in enumerate(g.vertices)}
    succ = [[idx[e.dst] for e in g.out_edges(v)] for v in g.vertices]
    reach = graphalg.reachable_from(succ, idx[start])

    if isinstance(spec, MeanPayoff):
        adj = [[(idx[e.dst], e.price) for e in g.out_edges(v)]
               for v in g.vertices]
        res2 = (graphalg.min_cycle_mean(adj, reach) if owner_is_min
                else graphalg.max_cycle_mean(adj, reach))
        assert res2 is not None, "sink-free graphs always contain a cycle"
        value, cycle = res2
        return ExtRational(value), _cycle_lasso(g, succ, idx[start], cycle)

    if isinstance(spec, RatioAverage):
        radj = [[(idx[e.dst], e.reward) for e in g.out_edges(v)]
                for v in g.vertices]
        worst = graphalg.min_cycle_mean(radj, reach)
        if worst is not None and worst[0] <= 0:
            names = ",".join(g.vertices[i] for i in worst[1])
            raise ValueError(
                f"ratio objective needs positive reward sums on every "
                f"reachable cycle; cycle {names} violates this")
        padj = [[(idx[e.dst], e.price, e.reward) for e in g.out_edges(v)]
                for v in g.vertices]
        res3 = (graphalg.min_cycle_ratio(padj, reach) if owner_is_min
                else graphalg.max_cycle_ratio(padj, reach))
        assert res3 is not None
        value, cycle = res3
        return ExtRational(value), _cycle_lasso(g, succ, idx[start], cycle)

    raise TypeError(f"unsupported cost specification {spec!r}")
