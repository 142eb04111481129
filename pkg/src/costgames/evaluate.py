"""Exact cost evaluation on ultimately periodic plays and finite histories.

Costs map infinite plays to extended rationals.  For a lasso `prefix.cycle^w`
every supported cost has a closed form; for finite histories the affine
decomposition `cost(h . rho) = a + b * cost(rho)` (histories overlap plays on
one vertex) is produced for every cost that admits one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (CostSpec, DiscountedPrice, EnergySup, GameGraph, History,
                   LassoPlay, MeanPayoff, RatioAverage, ReachabilityPrice)
from .rationals import POS_INF, ExtRational


@dataclass(frozen=True)
class PrefixCoefficients:
    """Affine history contribution: cost(h . rho) = a + b * cost(rho)."""
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b < 0:
            raise ValueError("scale coefficient must be nonnegative")

    def apply(self, tail_cost: ExtRational) -> ExtRational:
        return ExtRational(self.a) + ExtRational(self.b) * ExtRational(tail_cost)


def _edge_prices(g: GameGraph, seq: tuple[str, ...]) -> list[Fraction]:
    return [g.edge(a, b).price for a, b in zip(seq, seq[1:])]


def eval_lasso(spec: CostSpec, play: LassoPlay, g: GameGraph) -> ExtRational:
    """Exact cost of an ultimately periodic play."""
    play.check_in(g)
    k = len(play.prefix)
    n = len(play.cycle)
    walk = play.prefix + play.cycle + (play.cycle[0],)
    prices = _edge_prices(g, walk)          # k + n edge prices
    if isinstance(spec, ReachabilityPrice):
        total = Fraction(0)
        for t in range(k + n):
            if play.vertex(t) in spec.goal:
                return ExtRational(total)
            total += prices[t]
        return POS_INF
    if isinstance(spec, DiscountedPrice):
        lam = spec.factor
        head = Fraction(0)
        power = Fraction(1)
        for t in range(k):
            head += power * prices[t]
            power *= lam
        cycle_sum = Fraction(0)
        cpower = Fraction(1)
        for t in range(k, k + n):
            cycle_sum += cpower * prices[t]
            cpower *= lam
        tail = cycle_sum / (1 - lam ** n)
        return ExtRational((1 - lam) * (head + power * tail))
    if isinstance(spec, MeanPayoff):
        return ExtRational(Fraction(sum(prices[k:]), n))
    if isinstance(spec, RatioAverage):
        rewards = [g.edge(a, b).reward for a, b in zip(walk, walk[1:])]
        reward_sum = Fraction(sum(rewards[k:]))
        if reward_sum <= 0:
            raise ValueError("ratio cost needs a positive cycle reward sum, got "
                             f"{reward_sum}")
        return ExtRational(Fraction(sum(prices[k:])) / reward_sum)
    if isinstance(spec, EnergySup):
        cycle_sum = sum(prices[k:])
        if cycle_sum > 0:
            return POS_INF
        running = Fraction(0)
        peak: Optional[Fraction] = None
        for t in range(k + n):
            running += prices[t]
            if peak is None or running > peak:
                peak = running
        assert peak is not None
        if peak > spec.threshold:
            return POS_INF
        return ExtRational(peak)
    raise TypeError(f"unsupported cost specification {spec!r}")


def prefix_decompose(spec: CostSpec, h: History, g: GameGraph) -> PrefixCoefficients:
    """Affine coefficients of a finite history, where the history's last
    vertex is the continuation play's first vertex."""
    g.check_path(h.vertices)
    if not spec.prefix_linear:
        raise ValueError(f"{spec.kind} is not cost-prefix-linear")
    prices = _edge_prices(g, h.vertices)
    k = len(prices)
    if isinstance(spec, ReachabilityPrice):
        total = Fraction(0)
        for t, v in enumerate(h.vertices):
            if v in spec.goal:
                return PrefixCoefficients(total, Fraction(0))
            if t < k:
                total += prices[t]
        return PrefixCoefficients(total, Fraction(1))
    if isinstance(spec, DiscountedPrice):
        lam = spec.factor
        head = Fraction(0)
        power = Fraction(1)
        for t in range(k):
            head += power * prices[t]
            power *= lam
        return PrefixCoefficients((1 - lam) * head, power)
    if isinstance(spec, (MeanPayoff, RatioAverage)):
        return PrefixCoefficients(Fraction(0), Fraction(1))
    raise TypeError(f"unsupported cost specification {spec!r}")


def prepend_history(h: History, play: LassoPlay,
                    g: Optional[GameGraph] = None) -> LassoPlay:
    """The play `h . play`, overlapping on the shared vertex."""
    if h.last != play.first:
        raise ValueError(
            f"history ends at {h.last!r} but the play starts at {play.first!r}")
    combined = LassoPlay(h.vertices[:-1] + play.prefix, play.cycle)
    if g is not None:
        combined.check_in(g)
    return combined


def partial_price_average(path: History, g: GameGraph) -> Fraction:
    """Average edge price along a finite walk of at least one edge."""
    g.check_path(path.vertices)
    if len(path) < 2:
        raise ValueError("partial average needs at least one edge")
    prices = _edge_prices(g, path.vertices)
    return Fraction(sum(prices), len(prices))


def partial_ratio(path: History, g: GameGraph) -> Fraction:
    """Partial price/reward ratio along a finite walk of at least one edge."""
    g.check_path(path.vertices)
    if len(path) < 2:
        raise ValueError("partial ratio needs at least one edge")
    total_p = Fraction(0)
    total_r = Fraction(0)
    for a, b in zip(path.vertices, path.vertices[1:]):
        e = g.edge(a, b)
        total_p += e.price
        total_r += e.reward
    if total_r == 0:
        raise ValueError("partial ratio undefined: reward sum is zero")
    return total_p / total_r


__all__ = [
    "PrefixCoefficients", "eval_lasso", "prefix_decompose", "prepend_history",
    "partial_price_average", "partial_ratio",
]
