"""Exhaustive positional-profile oracle for small instances.

Independent of the solvers by construction: enumerate every joint positional
strategy profile, evaluate the resulting lasso from every vertex with the
closed-form cost evaluator, and aggregate.  Intentionally simple --- this is
the reference the efficient solvers are tested against.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Mapping

from .core import GameGraph, LassoPlay, Vertex
from .evaluate import eval_lasso
from .instances import MinMaxInstance
from .rationals import ExtRational


@dataclass(frozen=True)
class BruteForceResult:
    """Both one-shot exchange values over positional profiles.

    `upper[v]`  = min over Min profiles of max over Max profiles,
    `lower[v]`  = max over Max profiles of min over Min profiles,
    of the cost of the unique outcome from `v`.  The two coincide whenever
    positional strategies suffice on both sides.
    """
    upper: Mapping[Vertex, ExtRational]
    lower: Mapping[Vertex, ExtRational]

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", dict(self.upper))
        object.__setattr__(self, "lower", dict(self.lower))


def _profiles(g: GameGraph, vertices: tuple[Vertex, ...]
              ) -> Iterator[dict[Vertex, Vertex]]:
    """All positional choices for `vertices`, successors in input order."""
    pools = [g.successors(v) for v in vertices]
    for combo in itertools.product(*pools):
        yield dict(zip(vertices, combo))


def profile_outcome(g: GameGraph, choice: Mapping[Vertex, Vertex],
                    start: Vertex) -> LassoPlay:
    """The unique play from `start` when every vertex follows `choice`."""
    trail = [start]
    seen = {start}
    while True:
        nxt = choice[trail[-1]]
        trail.append(nxt)
        if nxt in seen:
            return LassoPlay.from_walk(trail)
        seen.add(nxt)


def brute_force_value(inst: MinMaxInstance, cap: int = 10 ** 6) -> BruteForceResult:
    """Both exchange values of `inst` over positional profiles.

    Raises ValueError when the profile space (product of out-degrees)
    exceeds `cap`.
    """
    g = inst.graph
    for v in g.vertices:
        if not g.out_edges(v):
            raise ValueError(f"vertex {v!r} has no outgoing edge")
    space = prod(len(g.out_edges(v)) for v in g.vertices)
    if space > cap:
        raise ValueError(f"profile space {space} exceeds cap {cap}")
    min_order = tuple(v for v in g.vertices if v in inst.min_vertices)
    max_order = tuple(v for v in g.vertices if v in inst.max_vertices)

    def outcome_values(choice: Mapping[Vertex, Vertex]) -> list[ExtRational]:
        return [eval_lasso(inst.objective, profile_outcome(g, choice, v), g)
                for v in g.vertices]

    upper: list[ExtRational] = []
    for min_choice in _profiles(g, min_order):
        row: list[ExtRational] = []
        for max_choice in _profiles(g, max_order):
            vals = outcome_values({**min_choice, **max_choice})
            row = vals if not row else [max(a, b) for a, b in zip(row, vals)]
        upper = row if not upper else [min(a, b) for a, b in zip(upper, row)]

    lower: list[ExtRational] = []
    for max_choice in _profiles(g, max_order):
        col: list[ExtRational] = []
        for min_choice in _profiles(g, min_order):
            vals = outcome_values({**min_choice, **max_choice})
            col = vals if not col else [min(a, b) for a, b in zip(col, vals)]
        lower = col if not lower else [max(a, b) for a, b in zip(lower, col)]

    return BruteForceResult(
        upper=dict(zip(g.vertices, upper)),
        lower=dict(zip(g.vertices, lower)),
    )
