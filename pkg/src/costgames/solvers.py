"""Exact two-sided solvers for the four affine-decomposable costs.

Each solver returns exact extended-rational values together with one
uniformly optimal positional strategy per side.  All tie-breaking follows
input order (vertices, then outgoing edges), so results are deterministic.

Algorithms:

* reachability price  -- forced-reachability attractor, then a generalized
  Dijkstra sweep (minimizing vertices become available once one successor is
  settled, maximizing vertices once all are);
* discounted price    -- exact policy iteration (strategy improvement for
  the minimizer against exact maximizer best responses), or optionally
  value iteration to a requested accuracy with greedy extraction;
* mean payoff         -- finite-horizon bootstrapping on integer-scaled
  prices, the horizon chosen so that rounding the per-step average onto the
  grid of representable cycle means is exact;
* ratio               -- bisection over the candidate value, testing the
  sign of the derived mean-payoff game with weights price - t * reward,
  finished by continued-fraction snapping once the interval isolates a
  single representable ratio.

Positional strategies are extracted by edge fixing: candidate edges keep
the successor on the same value level; a candidate is accepted when
re-solving the game with the vertex pinned to it preserves the whole value
vector (skipped when the candidate is unique, in which case every optimal
positional strategy already uses it).  The minimizing side is pinned
cumulatively; the maximizing side is pinned cumulatively as well but starts
again from the unrestricted game.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import graphalg
from .core import (DiscountedPrice, MeanPayoff, PositionalStrategy,
                   RatioAverage, ReachabilityPrice, Vertex)
from .instances import MinMaxInstance, SolveResult
from .rationals import POS_INF, ExtRational

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def deco(f):
            return f

        return deco


# -- compiled index form ------------------------------------------------------

@dataclass
class _Compiled:
    names: tuple[Vertex, ...]
    succ: list[list[int]]            # successor vertex indices, input order
    price: list[list[Fraction]]
    reward: list[list[Fraction]]
    is_min: list[bool]

    @property
    def n(self) -> int:
        return len(self.names)

    def full_keep(self) -> list[list[int]]:
        """One slot per vertex listing the edge positions still allowed."""
        return [list(range(len(row))) for row in self.succ]


def _compile(inst: MinMaxInstance) -> _Compiled:
    g = inst.graph
    idx = {v: i for i, v in enumerate(g.vertices)}
    succ: list[list[int]] = []
    price: list[list[Fraction]] = []
    reward: list[list[Fraction]] = []
    for v in g.vertices:
        edges = g.out_edges(v)
        if not edges:
            raise ValueError(f"vertex {v!r} has no outgoing edge")
        succ.append([idx[e.dst] for e in edges])
        price.append([e.price for e in edges])
        reward.append([e.reward for e in edges])
    is_min = [v in inst.min_vertices for v in g.vertices]
    return _Compiled(g.vertices, succ, price, reward, is_min)


def _strategies_from_choice(c: _Compiled, choice_min: dict[int, int],
                            choice_max: dict[int, int]
                            ) -> tuple[PositionalStrategy, PositionalStrategy]:
    smin = {c.names[v]: c.names[c.succ[v][pos]] for v, pos in choice_min.items()}
    smax = {c.names[v]: c.names[c.succ[v][pos]] for v, pos in choice_max.items()}
    return (PositionalStrategy("min", smin), PositionalStrategy("max", smax))


# -- attractor ----------------------------------------------------------------

def attractor(inst: MinMaxInstance, target: Iterable[Vertex],
              forcing_side: str) -> frozenset[Vertex]:
    """Vertices from which `forcing_side` can force a visit to `target`
    (vertices of `target` included)."""
    if forcing_side not in ("min", "max"):
        raise ValueError("forcing_side must be 'min' or 'max'")
    g = inst.graph
    forcing = inst.min_vertices if forcing_side == "min" else inst.max_vertices
    known = set(g.vertices)
    inside = {v for v in target if v in known}
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in inside:
                continue
            succs = g.successors(v)
            if not succs:
                continue
            if v in forcing:
                hit = any(u in inside for u in succs)
            else:
                hit = all(u in inside for u in succs)
            if hit:
                inside.add(v)
                changed = True
    return frozenset(inside)


# -- reachability price --------------------------------------------------------

def solve_reachability_price(inst: MinMaxInstance) -> SolveResult:
    """Exact values and uniformly optimal positional strategies for the
    reachability-price cost.  Requires nonnegative prices."""
    if not isinstance(inst.objective, ReachabilityPrice):
        raise TypeError("instance objective is not a reachability price")
    c = _compile(inst)
    for v in range(c.n):
        for p in c.price[v]:
            if p < 0:
                raise ValueError(
                    f"negative price on an edge out of {c.names[v]!r}; the "
                    "reachability-price solver needs nonnegative prices")
    known = set(c.names)
    goal_names = {v for v in inst.objective.goal if v in known}
    goal = {i for i, v in enumerate(c.names) if v in goal_names}
    attr_names = attractor(inst, goal_names, "min")
    attr = {i for i, v in enumerate(c.names) if v in attr_names}

    final: dict[int, Fraction] = {}
    sigma_min_pos: dict[int, int] = {}
    sigma_max_pos: dict[int, int] = {}
    while len(final) < len(attr):
        best_v = -1
        best_val: Optional[Fraction] = None
        best_pos = -1
        for v in sorted(attr):
            if v in final:
                continue
            pos = -1
            if v in goal:
                tent: Optional[Fraction] = Fraction(0)
            elif c.is_min[v]:
                tent = None
                for j, u in enumerate(c.succ[v]):
                    if u in final:
                        cand = c.price[v][j] + final[u]
                        if tent is None or cand < tent:
                            tent = cand
                            pos = j
                if tent is None:
                    continue    # no settled successor yet
            else:
                if any(u not in final for u in c.succ[v]):
                    continue    # a maximizer waits for every successor
                tent = None
                for j, u in enumerate(c.succ[v]):
                    cand = c.price[v][j] + final[u]
                    if tent is None or cand > tent:
                        tent = cand
                        pos = j
            assert tent is not None
            if best_val is None or tent < best_val:
                best_v, best_val, best_pos = v, tent, pos
        # some vertex is always available: attractor ranks settle in order
        assert best_v >= 0 and best_val is not None
        final[best_v] = best_val
        if best_v not in goal:
            if c.is_min[best_v]:
                sigma_min_pos[best_v] = best_pos
            else:
                sigma_max_pos[best_v] = best_pos

    values: dict[Vertex, ExtRational] = {}
    for i, name in enumerate(c.names):
        values[name] = ExtRational(final[i]) if i in attr else POS_INF
    for v in range(c.n):
        if c.is_min[v]:
            # goal vertices and vertices outside the forced region take the
            # first edge; the cost is already settled either way
            sigma_min_pos.setdefault(v, 0)
        elif v in attr:
            sigma_max_pos.setdefault(v, 0)   # goal vertex on the max side
        else:
            # stay outside the forced region forever; such a successor
            # exists, otherwise v would have been attracted
            sigma_max_pos[v] = next(j for j, u in enumerate(c.succ[v])
                                    if u not in attr)
    smin, smax = _strategies_from_choice(c, sigma_min_pos, sigma_max_pos)
    return SolveResult(values, smin, smax)


# -- discounted price ----------------------------------------------------------

Adj = Sequence[Sequence[tuple[int, Fraction]]]   # adj[v] = (succ, price)


def _profile_values_discounted(adj: Adj, choice: Sequence[int],
                               lam: Fraction) -> list[Fraction]:
    """Exact values of one positional profile under the normalized
    discounted cost, closing the geometric series along each lasso."""
    n = len(adj)
    one = Fraction(1)
    vals: list[Optional[Fraction]] = [None] * n
    for s in range(n):
        if vals[s] is not None:
            continue
        trail = [s]
        at = {s: 0}
        while True:
            v = trail[-1]
            u, _ = adj[v][choice[v]]
            if vals[u] is not None:
                anchor = vals[u]
                break
            if u in at:
                cyc = trail[at[u]:]
                acc = Fraction(0)
                power = one
                for w in cyc:
                    _, pw = adj[w][choice[w]]
                    acc += power * pw
                    power *= lam
                anchor = (one - lam) * acc / (one - power)   # value at u
                vals[u] = anchor
                break
            at[u] = len(trail)
            trail.append(u)
        # anchor equals the value of the successor of trail[-1]
        tail = anchor
        for w in reversed(trail):
            _, pw = adj[w][choice[w]]
            tail = (one - lam) * pw + lam * tail
            if vals[w] is None:
                vals[w] = tail
            else:
                assert vals[w] == tail   # closing the cycle is consistent
    return [v for v in vals]   # type: ignore[return-value]


def _discounted_pi(adj: Adj, is_min: Sequence[bool], lam: Fraction
                   ) -> tuple[list[Fraction], list[int]]:
    """Exact policy iteration.  Outer loop: strategy improvement for the
    minimizer; inner loop: exact best response of the maximizer.  Both
    improvements switch every improvable vertex to its best strictly
    improving edge (lowest index on ties)."""
    n = len(adj)
    one = Fraction(1)
    choice = [0] * n
    while True:
        # maximizer best response to the current minimizer choices
        while True:
            vals = _profile_values_discounted(adj, choice, lam)
            changed = False
            for v in range(n):
                if is_min[v]:
                    continue
                best = vals[v]
                arg = -1
                for j, (u, p) in enumerate(adj[v]):
                    cand = (one - lam) * p + lam * vals[u]
                    if cand > best:
                        best = cand
                        arg = j
                if arg >= 0:
                    choice[v] = arg
                    changed = True
            if not changed:
                break
        # minimizer improvement against exact best-response values
        vals = _profile_values_discounted(adj, choice, lam)
        changed = False
        for v in range(n):
            if not is_min[v]:
                continue
            best = vals[v]
            arg = -1
            for j, (u, p) in enumerate(adj[v]):
                cand = (one - lam) * p + lam * vals[u]
                if cand < best:
                    best = cand
                    arg = j
            if arg >= 0:
                choice[v] = arg
                changed = True
        if not changed:
            return vals, choice


def _greedy_choice(adj: Adj, is_min: Sequence[bool], lam: Fraction,
                   vals: Sequence[Fraction]) -> list[int]:
    one = Fraction(1)
    choice = [0] * len(adj)
    for v in range(len(adj)):
        best: Optional[Fraction] = None
        arg = 0
        for j, (u, p) in enumerate(adj[v]):
            cand = (one - lam) * p + lam * vals[u]
            if best is None or (cand < best if is_min[v] else cand > best):
                best = cand
                arg = j
        choice[v] = arg
    return choice


def solve_discounted(inst: MinMaxInstance,
                     epsilon: Optional[Fraction] = None) -> SolveResult:
    """Discounted-price solver.

    Exact mode (`epsilon=None`): policy iteration, exact rational values.
    Approximate mode: value iteration until the greedy profile is within
    `epsilon` of optimal, then the extracted profile is re-evaluated
    exactly, so the reported values are exact for the reported strategies
    and within `epsilon` of the true values.
    """
    if not isinstance(inst.objective, DiscountedPrice):
        raise TypeError("instance objective is not a discounted price")
    lam = inst.objective.factor
    if not (0 < lam < 1):
        raise ValueError(f"discount factor {lam} outside (0,1)")
    c = _compile(inst)
    adj: list[list[tuple[int, Fraction]]] = [
        list(zip(c.succ[v], c.price[v])) for v in range(c.n)]
    one = Fraction(1)
    if epsilon is None:
        vals, choice = _discounted_pi(adj, c.is_min, lam)
    else:
        eps = Fraction(epsilon)
        if eps <= 0:
            raise ValueError("accuracy must be positive")
        # stop when the greedy profile of the iterate is eps-optimal:
        # residual r gives ||x - x*|| <= lam/(1-lam) r and the greedy
        # profile is within 2 lam/(1-lam) of that distance
        threshold = eps * (one - lam) ** 2 / (4 * lam)
        x = [Fraction(0)] * c.n
        while True:
            nxt: list[Fraction] = []
            for v in range(c.n):
                best: Optional[Fraction] = None
                for (u, p) in adj[v]:
                    cand = (one - lam) * p + lam * x[u]
                    if best is None or (cand < best if c.is_min[v] else cand > best):
                        best = cand
                assert best is not None
                nxt.append(best)
            residual = max(abs(a - b) for a, b in zip(nxt, x))
            x = nxt
            if residual < threshold:
                break
        choice = _greedy_choice(adj, c.is_min, lam, x)
        vals = _profile_values_discounted(adj, choice, lam)
    values = {c.names[v]: ExtRational(vals[v]) for v in range(c.n)}
    cmin = {v: choice[v] for v in range(c.n) if c.is_min[v]}
    cmax = {v: choice[v] for v in range(c.n) if not c.is_min[v]}
    smin, smax = _strategies_from_choice(c, cmin, cmax)
    return SolveResult(values, smin, smax)


# -- mean payoff ----------------------------------------------------------------

@njit(cache=True)
def _horizon_kernel(indptr, dst, weight, is_min, horizon):  # pragma: no cover
    n = indptr.shape[0] - 1
    cur = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(n, dtype=np.int64)
    for _ in range(horizon):
        for v in range(n):
            first = indptr[v]
            best = weight[first] + cur[dst[first]]
            if is_min[v]:
                for e in range(first + 1, indptr[v + 1]):
                    cand = weight[e] + cur[dst[e]]
                    if cand < best:
                        best = cand
            else:
                for e in range(first + 1, indptr[v + 1]):
                    cand = weight[e] + cur[dst[e]]
                    if cand > best:
                        best = cand
            nxt[v] = best
        tmp = cur
        cur = nxt
        nxt = tmp
    return cur


def _horizon_python(succ: Sequence[Sequence[int]],
                    weight: Sequence[Sequence[int]],
                    is_min: Sequence[bool], horizon: int) -> list[int]:
    n = len(succ)
    cur = [0] * n
    for _ in range(horizon):
        nxt = []
        for v in range(n):
            vals = [weight[v][j] + cur[u] for j, u in enumerate(succ[v])]
            nxt.append(min(vals) if is_min[v] else max(vals))
        cur = nxt
    return cur


def _integer_scale(rows: Sequence[Sequence[Fraction]],
                   keep: Sequence[Sequence[int]]) -> int:
    denoms = [1]
    for v, positions in enumerate(keep):
        for j in positions:
            denoms.append(rows[v][j].denominator)
    return math.lcm(*denoms)


def _mp_values_horizon(c: _Compiled, keep: Sequence[Sequence[int]]
                       ) -> list[Fraction]:
    """Exact mean-payoff values of the restriction `keep`, by running the
    finite-horizon recursion long enough that the per-step average lies
    within half the spacing of representable cycle means, then rounding."""
    n = c.n
    scale = _integer_scale(c.price, keep)
    succ = [[c.succ[v][j] for j in keep[v]] for v in range(n)]
    wint = [[int(c.price[v][j] * scale) for j in keep[v]] for v in range(n)]
    for v in range(n):
        if not succ[v]:
            raise ValueError(f"restriction removed every edge of {c.names[v]!r}")
    w_max = max(1, max(abs(w) for row in wint for w in row))
    horizon = 4 * n ** 3 * w_max
    if _HAVE_NUMBA and horizon * w_max <= 2 ** 60:
        m = sum(len(row) for row in succ)
        indptr = np.zeros(n + 1, dtype=np.int64)
        dst = np.zeros(m, dtype=np.int64)
        wgt = np.zeros(m, dtype=np.int64)
        mins = np.zeros(n, dtype=np.bool_)
        k = 0
        for v in range(n):
            mins[v] = c.is_min[v]
            for j, u in enumerate(succ[v]):
                dst[k] = u
                wgt[k] = wint[v][j]
                k += 1
            indptr[v + 1] = k
        totals = _horizon_kernel(indptr, dst, wgt, mins, horizon)
        nu = [int(t) for t in totals]
    else:
        nu = _horizon_python(succ, wint, c.is_min, horizon)
    # |nu/horizon - value| <= 2 n w_max / horizon = 1/(2 n^2), and distinct
    # cycle means of integer weights differ by at least 1/n^2
    return [Fraction(nu[v], horizon).limit_denominator(n) / scale
            for v in range(n)]


def solve_mean_payoff(inst: MinMaxInstance) -> SolveResult:
    """Exact mean-payoff values and positional strategies for both sides."""
    if not isinstance(inst.objective, MeanPayoff):
        raise TypeError("instance objective is not a mean payoff")
    c = _compile(inst)
    values = _mp_values_horizon(c, c.full_keep())

    def resolve(keep: Sequence[Sequence[int]]) -> list[Fraction]:
        return _mp_values_horizon(c, keep)

    choice_min, _ = _fix_edges(c, values, resolve, side_is_min=True)
    choice_max, _ = _fix_edges(c, values, resolve, side_is_min=False)
    smin, smax = _strategies_from_choice(c, choice_min, choice_max)
    ext = {c.names[v]: ExtRational(values[v]) for v in range(c.n)}
    return SolveResult(ext, smin, smax)


# -- exact mean-payoff values through a steep discount --------------------------

def _mp_values_via_discount(succ: Sequence[Sequence[int]],
                            weights: Sequence[Sequence[Fraction]],
                            is_min: Sequence[bool]) -> list[Fraction]:
    """Exact mean-payoff values computed with the discounted solver at a
    discount close enough to 1 that rounding to the grid of representable
    cycle means is exact.  Iteration count is insensitive to the magnitude
    of the weights, which matters for the bisection-derived games."""
    n = len(succ)
    denoms = [1] + [w.denominator for row in weights for w in row]
    scale = math.lcm(*denoms)
    wint = [[w * scale for w in row] for row in weights]
    w_max = max(1, max(abs(int(w)) for row in wint for w in row))
    eps = Fraction(1, 16 * n ** 3 * w_max)
    lam = 1 - eps
    adj = [list(zip(succ[v], wint[v])) for v in range(n)]
    vals, _ = _discounted_pi(adj, is_min, lam)
    # |discounted - mean-payoff| <= 4 eps n w_max = 1/(4 n^2) < half-spacing
    return [vals[v].limit_denominator(n) / scale for v in range(n)]


# -- ratio ----------------------------------------------------------------------

def _reward_cycles_positive(c: _Compiled) -> None:
    adj = [[(u, c.reward[v][j]) for j, u in enumerate(c.succ[v])]
           for v in range(c.n)]
    res = graphalg.min_cycle_mean(adj)
    if res is not None and res[0] <= 0:
        cycle = ",".join(c.names[i] for i in res[1])
        raise ValueError(
            f"ratio objective needs positive reward sums on every cycle; "
            f"cycle {cycle} violates this")


def solve_ratio(inst: MinMaxInstance) -> SolveResult:
    """Exact ratio values (limit of price sums over reward sums) and
    positional strategies.  Requires positive reward sums on all cycles."""
    if not isinstance(inst.objective, RatioAverage):
        raise TypeError("instance objective is not a ratio")
    c = _compile(inst)
    _reward_cycles_positive(c)
    n = c.n
    scale_p = _integer_scale(c.price, c.full_keep())
    scale_r = _integer_scale(c.reward, c.full_keep())
    pint = [[p * scale_p for p in row] for row in c.price]
    rint = [[r * scale_r for r in row] for row in c.reward]
    p_max = max(1, max(abs(int(p)) for row in pint for p in row))
    r_max = max(1, max(abs(int(r)) for row in rint for r in row))
    denom_cap = n * r_max
    gap = Fraction(1, denom_cap * denom_cap)

    def derived_values(keep: Sequence[Sequence[int]], t: Fraction
                       ) -> list[Fraction]:
        succ = [[c.succ[v][j] for j in keep[v]] for v in range(n)]
        weights = [[pint[v][j] - t * rint[v][j] for j in keep[v]]
                   for v in range(n)]
        return _mp_values_via_discount(succ, weights, c.is_min)

    full = c.full_keep()
    tstar: list[Optional[Fraction]] = [None] * n
    bound = Fraction(n * p_max + 1)
    groups: list[tuple[list[int], Fraction, Fraction]] = [
        (list(range(n)), -bound, bound)]
    while groups:
        verts, lo, hi = groups.pop()
        if hi - lo < gap:
            # the interval holds exactly one ratio with denominator at most
            # denom_cap: all remaining vertices of the group share it
            t = ((lo + hi) / 2).limit_denominator(denom_cap)
            mpv = derived_values(full, t)
            assert all(mpv[v] == 0 for v in verts), "snapped value not exact"
            for v in verts:
                tstar[v] = t
            continue
        mid = (lo + hi) / 2
        mpv = derived_values(full, mid)
        above: list[int] = []
        below: list[int] = []
        for v in verts:
            if mpv[v] == 0:
                tstar[v] = mid
            elif mpv[v] > 0:
                above.append(v)    # derived value positive: t*(v) > mid
            else:
                below.append(v)
        if above:
            groups.append((above, mid, hi))
        if below:
            groups.append((below, lo, mid))
    assert all(t is not None for t in tstar)
    values_scaled: list[Fraction] = tstar  # type: ignore[assignment]

    classes: dict[Fraction, list[int]] = {}
    for v in range(n):
        classes.setdefault(values_scaled[v], []).append(v)

    def preserves(keep: Sequence[Sequence[int]]) -> bool:
        for t, members in classes.items():
            mpv = derived_values(keep, t)
            if any(mpv[v] != 0 for v in members):
                return False
        return True

    def resolve_check(keep: Sequence[Sequence[int]]) -> Optional[list[Fraction]]:
        return values_scaled if preserves(keep) else None

    choice_min, _ = _fix_edges(c, values_scaled, resolve_check, side_is_min=True)
    choice_max, _ = _fix_edges(c, values_scaled, resolve_check, side_is_min=False)
    rescale = Fraction(scale_r, scale_p)
    ext = {c.names[v]: ExtRational(values_scaled[v] * rescale)
           for v in range(n)}
    smin, smax = _strategies_from_choice(c, choice_min, choice_max)
    return SolveResult(ext, smin, smax)


# -- edge fixing -----------------------------------------------------------------

def _fix_edges(c: _Compiled, values: Sequence[Fraction],
               resolve: Callable[[Sequence[Sequence[int]]], Optional[list[Fraction]]],
               side_is_min: bool) -> tuple[dict[int, int], list[list[int]]]:
    """Pin one optimal edge per vertex of one side.

    Candidates are the edges whose successor sits on the same value level
    (prefix-independent costs satisfy value(v) = opt over successors).  A
    unique candidate is provably the only optimal move; otherwise each
    candidate is tried in input order and kept when re-solving the pinned
    game reports the unchanged value vector.  `resolve` returns the value
    vector of a restriction (None allowed as shorthand for "changed").
    """
    keep = c.full_keep()
    choice: dict[int, int] = {}
    for v in range(c.n):
        if c.is_min[v] != side_is_min:
            continue
        cands = [j for j in keep[v] if values[c.succ[v][j]] == values[v]]
        assert cands, "no successor preserves the value level"
        pinned: Optional[int] = None
        if len(cands) == 1:
            pinned = cands[0]
        else:
            for j in cands:
                trial = [list(row) for row in keep]
                trial[v] = [j]
                result = resolve(trial)
                if result is not None and list(result) == list(values):
                    pinned = j
                    break
        assert pinned is not None, "no candidate edge preserves the values"
        keep[v] = [pinned]
        choice[v] = pinned
    return choice, keep


# -- dispatch ----------------------------------------------------------------------

def solve(inst: MinMaxInstance, epsilon: Optional[Fraction] = None) -> SolveResult:
    """Dispatch on the objective kind.  `epsilon` selects the approximate
    discounted mode and is rejected elsewhere."""
    obj = inst.objective
    if isinstance(obj, ReachabilityPrice):
        if epsilon is not None:
            raise ValueError("accuracy parameter only applies to discounted costs")
        return solve_reachability_price(inst)
    if isinstance(obj, DiscountedPrice):
        return solve_discounted(inst, epsilon)
    if isinstance(obj, MeanPayoff):
        if epsilon is not None:
            raise ValueError("accuracy parameter only applies to discounted costs")
        return solve_mean_payoff(inst)
    if isinstance(obj, RatioAverage):
        if epsilon is not None:
            raise ValueError("accuracy parameter only applies to discounted costs")
        return solve_ratio(inst)
    raise ValueError(f"objective {obj.kind!r} has no solver; it is evaluation-only")
