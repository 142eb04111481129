"""Built-in example games used by the test-suite, the scripts and the docs.

Each builder returns `(graph, objectives, initial_vertex)`.  Edge order is
deliberate: all solver tie-breaking follows input order, so reordering edges
changes which of several optimal strategies is returned.
"""
from __future__ import annotations

from fractions import Fraction

from .core import (CostSpec, Edge, EnergySup, GameGraph, History, MeanPayoff,
                   ReachabilityPrice)


def reach_vs_average() -> tuple[GameGraph, dict[str, CostSpec], str]:
    """Two players on four vertices: the first player pays edge prices until
    reaching C (reachability-price), the second pays the long-run average
    price (mean-payoff).  The first player owns A, C, D; the second owns B."""
    g = GameGraph(
        players=("p1", "p2"),
        vertices=("A", "B", "C", "D"),
        owner={"A": "p1", "B": "p2", "C": "p1", "D": "p1"},
        edges=(
            Edge("A", "B", Fraction(1)),
            Edge("B", "C", Fraction(1)),
            Edge("C", "B", Fraction(3)),
            Edge("A", "D", Fraction(2)),
            Edge("D", "B", Fraction(3)),
            Edge("B", "A", Fraction(1)),
        ),
    )
    specs: dict[str, CostSpec] = {
        "p1": ReachabilityPrice(goal=("C",)),
        "p2": MeanPayoff(),
    }
    return g, specs, "A"


def energy_threshold() -> tuple[GameGraph, dict[str, CostSpec], str]:
    """One player, two vertices, prices +-1, supremum-energy cost with
    threshold 2.  Demonstrates a cost that is not affine in its tail."""
    g = GameGraph(
        players=("p1",),
        vertices=("A", "B"),
        owner={"A": "p1", "B": "p1"},
        edges=(
            Edge("A", "A", Fraction(1)),
            Edge("A", "B", Fraction(1)),
            Edge("B", "A", Fraction(-1)),
            Edge("B", "B", Fraction(-1)),
        ),
    )
    specs: dict[str, CostSpec] = {"p1": EnergySup(threshold=Fraction(2))}
    return g, specs, "A"


def oscillating_average() -> tuple[GameGraph, dict[str, CostSpec], str]:
    """One player, two vertices; edges into B cost 1, edges into A cost 0.
    Non-periodic plays with ever-doubling blocks make the partial averages
    oscillate, which separates the limsup from the liminf."""
    g = GameGraph(
        players=("p1",),
        vertices=("A", "B"),
        owner={"A": "p1", "B": "p1"},
        edges=(
            Edge("A", "B", Fraction(1)),
            Edge("B", "B", Fraction(1)),
            Edge("B", "A", Fraction(0)),
            Edge("A", "A", Fraction(0)),
        ),
    )
    specs: dict[str, CostSpec] = {"p1": MeanPayoff()}
    return g, specs, "A"


def doubling_blocks_history(blocks: int) -> History:
    """History on the oscillating-average graph: starting at A, alternate a
    block of 2^n price-1 steps (move to B, stay) with a block of 2^n price-0
    steps (move to A, stay), n = 0, 1, ..., blocks-1."""
    if blocks < 1:
        raise ValueError("need at least one block")
    seq = ["A"]
    for n in range(blocks):
        length = 2 ** n
        seq.append("B")
        seq.extend("B" * (length - 1))
        seq.append("A")
        seq.extend("A" * (length - 1))
    return History(seq)


def ones_block_boundary(n: int) -> History:
    """Prefix of the doubling-blocks play that ends right after the price-1
    block of length 2^n (blocks 2^0..2^n of ones, 2^0..2^(n-1) of zeros)."""
    if n < 0:
        raise ValueError("block index must be nonnegative")
    seq = ["A"]
    for m in range(n + 1):
        length = 2 ** m
        seq.append("B")
        seq.extend("B" * (length - 1))
        if m < n:
            seq.append("A")
            seq.extend("A" * (length - 1))
    return History(seq)


def zeros_block_boundary(n: int) -> History:
    """Prefix of the doubling-blocks play ending right after the price-0
    block of length 2^n."""
    return doubling_blocks_history(n + 1)
