"""Two-sided (min/max) views of a game graph, and solver results.

A coalition instance forgets the individual players and keeps only which
vertices minimize and which maximize one shared cost.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import CostSpec, GameGraph, PositionalStrategy, Vertex
from .rationals import ExtRational


@dataclass(frozen=True)
class MinMaxInstance:
    """A game graph whose vertices are split into a minimizing side and a
    maximizing side, with one cost specification both sides compete over."""
    graph: GameGraph
    min_vertices: frozenset[Vertex]
    max_vertices: frozenset[Vertex]
    objective: CostSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_vertices", frozenset(self.min_vertices))
        object.__setattr__(self, "max_vertices", frozenset(self.max_vertices))
        all_vertices = set(self.graph.vertices)
        if self.min_vertices | self.max_vertices != all_vertices \
                or self.min_vertices & self.max_vertices:
            raise ValueError("min/max sides must partition the vertex set")

    @classmethod
    def for_player(cls, g: GameGraph, player: str, objective: CostSpec
                   ) -> "MinMaxInstance":
        """The coalition instance of one player: that player minimizes their
        own cost, everyone else jointly maximizes it."""
        if player not in g.players:
            raise ValueError(f"unknown player {player!r}")
        mine = frozenset(g.vertices_of(player))
        return cls(g, mine, frozenset(set(g.vertices) - mine), objective)

    def side_of(self, v: Vertex) -> str:
        return "min" if v in self.min_vertices else "max"


@dataclass(frozen=True)
class SolveResult:
    """Values plus one positional strategy per side.  Each strategy is
    uniformly optimal: it guarantees the value from every vertex against
    every behaviour of the other side."""
    values: Mapping[Vertex, ExtRational]
    sigma_min: PositionalStrategy
    sigma_max: PositionalStrategy

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", dict(self.values))
