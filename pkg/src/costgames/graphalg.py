"""Exact graph algorithms on integer-indexed adjacency lists.

Everything here works on plain `list[list[...]]` adjacency structures with
Fraction weights, independent of the game-level types, so the data model,
the solvers, and validation can all share one implementation.  All
tie-breaking follows input (index) order, keeping every caller deterministic.
"""
from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Optional, Sequence

Adj = Sequence[Sequence[int]]                     # succ[v] = vertex indices
WAdj = Sequence[Sequence[tuple[int, Fraction]]]   # succ[v] = (dst, weight)


def strongly_connected_components(succ: Adj) -> list[list[int]]:
    """Tarjan's algorithm, iterative.  Components in reverse topological
    order of the condensation; vertices inside a component keep index order
    relative to the discovery stack (deterministic for a fixed input)."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            while ptr < len(succ[v]):
                w = succ[v][ptr]
                ptr += 1
                if index[w] == -1:
                    work[-1] = (v, ptr)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.reverse()
                comps.append(comp)
    return comps


def _karp_value(vertices: list[int], succ: WAdj) -> Fraction:
    """Minimum cycle mean inside one strongly connected component
    (`vertices`, which must contain at least one internal edge).  Classic
    O(V*E) dynamic program over walk lengths."""
    local = {v: i for i, v in enumerate(vertices)}
    k = len(vertices)
    # Self-loop-only SCCs still work: k = 1, walks of length 0 and 1.
    dist: list[list[Optional[Fraction]]] = [[None] * k for _ in range(k + 1)]
    dist[0][0] = Fraction(0)
    for t in range(1, k + 1):
        row = dist[t]
        prev = dist[t - 1]
        for li, v in enumerate(vertices):
            dv = prev[li]
            if dv is None:
                continue
            for (w, weight) in succ[v]:
                lw = local.get(w)
                if lw is None:
                    continue
                cand = dv + weight
                cur = row[lw]
                if cur is None or cand < cur:
                    row[lw] = cand
    best: Optional[Fraction] = None
    for li in range(k):
        dk = dist[k][li]
        if dk is None:
            continue
        worst: Optional[Fraction] = None
        for t in range(k):
            dt = dist[t][li]
            if dt is None:
                continue
            cand = Fraction(dk - dt, k - t)
            if worst is None or cand > worst:
                worst = cand
        if worst is not None and (best is None or worst < best):
            best = worst
    assert best is not None, "component without internal cycle"
    return best


def _tight_cycle(vertices: list[int], succ: WAdj, mu: Fraction) -> list[int]:
    """A cycle of mean exactly `mu` inside one SCC where `mu` is the minimum
    cycle mean.  Shift weights by -mu, compute shortest-path potentials
    (Bellman-Ford; no negative cycle exists after the shift), then walk the
    tight subgraph, prune dead ends, and close a cycle deterministically."""
    inside = set(vertices)
    src = vertices[0]
    pot: dict[int, Fraction] = {src: Fraction(0)}
    for _ in range(len(vertices)):
        changed = False
        for v in vertices:
            dv = pot.get(v)
            if dv is None:
                continue
            for (w, weight) in succ[v]:
                if w not in inside:
                    continue
                cand = dv + weight - mu
                if w not in pot or cand < pot[w]:
                    pot[w] = cand
                    changed = True
        if not changed:
            break
    tight: dict[int, list[int]] = {v: [] for v in vertices}
    indeg: dict[int, int] = {v: 0 for v in vertices}
    for v in vertices:
        for (w, weight) in succ[v]:
            if w in inside and pot[v] + weight - mu == pot[w]:
                tight[v].append(w)
    alive = set(vertices)
    # Remove vertices that cannot lie on a tight cycle (no tight out-edge).
    queue = deque(v for v in vertices if not tight[v])
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for u in vertices:
            if u in alive and tight[u] and all(w not in alive for w in tight[u]):
                queue.append(u)
    assert alive, "tight subgraph lost every cycle"
    start = min(alive)
    trail = [start]
    seen = {start: 0}
    while True:
        v = trail[-1]
        nxt = next(w for w in tight[v] if w in alive)
        if nxt in seen:
            return trail[seen[nxt]:]
        seen[nxt] = len(trail)
        trail.append(nxt)


def min_cycle_mean(succ: WAdj, restrict: Optional[set[int]] = None
                   ) -> Optional[tuple[Fraction, list[int]]]:
    """Minimum mean over all cycles (optionally within `restrict`), with a
    witness cycle given as a vertex list (closing edge back to the first
    entry implied).  None when the (restricted) graph is acyclic."""
    n = len(succ)
    allowed = set(range(n)) if restrict is None else set(restrict)
    filtered: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    plain: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if v not in allowed:
            continue
        for (w, weight) in succ[v]:
            if w in allowed:
                filtered[v].append((w, weight))
                plain[v].append(w)
    best: Optional[Fraction] = None
    best_comp: Optional[list[int]] = None
    for comp in strongly_connected_components(plain):
        comp = [v for v in comp if v in allowed]
        if not comp:
            continue
        members = set(comp)
        has_edge = any(w in members for v in comp for (w, _) in filtered[v])
        if not has_edge:
            continue
        mu = _karp_value(comp, filtered)
        if best is None or mu < best:
            best = mu
            best_comp = comp
    if best is None:
        return None
    assert best_comp is not None
    cycle = _tight_cycle(best_comp, filtered, best)
    return best, cycle


def max_cycle_mean(succ: WAdj, restrict: Optional[set[int]] = None
                   ) -> Optional[tuple[Fraction, list[int]]]:
    negated = [[(w, -weight) for (w, weight) in row] for row in succ]
    res = min_cycle_mean(negated, restrict)
    if res is None:
        return None
    value, cycle = res
    return -value, cycle


def min_cycle_ratio(succ: Sequence[Sequence[tuple[int, Fraction, Fraction]]],
                    restrict: Optional[set[int]] = None
                    ) -> Optional[tuple[Fraction, list[int]]]:
    """Minimum over cycles of (sum of first weights) / (sum of second
    weights), assuming every cycle's second-weight sum is positive.  Exact:
    bisection on the parameter t with a minimum-cycle-mean test on the
    shifted weights, finished by continued-fraction snapping once the
    interval isolates a single representable ratio."""
    n = len(succ)
    allowed = set(range(n)) if restrict is None else set(restrict)
    denoms = [1]
    for v in range(n):
        if v in allowed:
            for (w, p, r) in succ[v]:
                if w in allowed:
                    denoms.append(p.denominator)
                    denoms.append(r.denominator)
    scale = math.lcm(*denoms)
    # After multiplying both weight kinds by `scale`, cycle ratios become
    # (integer)/(integer) with the denominator bounded by n * max reward.
    max_reward = 1
    max_price = 1
    cyclic = False
    shifted: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for v in range(n):
        if v not in allowed:
            continue
        for (w, p, r) in succ[v]:
            if w in allowed:
                cyclic = True
                max_reward = max(max_reward, abs(int(r * scale)))
                max_price = max(max_price, abs(int(p * scale)))
    if not cyclic:
        return None
    ratio_denom = n * max_reward
    lo = Fraction(-(n * max_price) - 1)
    hi = Fraction(n * max_price + 1)
    gap = Fraction(1, ratio_denom * ratio_denom)

    def shifted_adj(t: Fraction) -> WAdj:
        rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
        for v in range(n):
            if v not in allowed:
                continue
            for (w, p, r) in succ[v]:
                if w in allowed:
                    rows[v].append((w, scale * (p - t * r)))
        return rows

    value: Optional[Fraction] = None
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        res = min_cycle_mean(shifted_adj(mid), allowed)
        assert res is not None
        mu = res[0]
        if mu == 0:
            value = mid
            break
        if mu > 0:
            lo = mid
        else:
            hi = mid
    if value is None:
        value = ((lo + hi) / 2).limit_denominator(ratio_denom)
    res = min_cycle_mean(shifted_adj(value), allowed)
    assert res is not None and res[0] == 0, "snapped ratio is not a cycle value"
    return value, res[1]


def max_cycle_ratio(succ: Sequence[Sequence[tuple[int, Fraction, Fraction]]],
                    restrict: Optional[set[int]] = None
                    ) -> Optional[tuple[Fraction, list[int]]]:
    negated = [[(w, -p, r) for (w, p, r) in row] for row in succ]
    res = min_cycle_ratio(negated, restrict)
    if res is None:
        return None
    value, cycle = res
    return -value, cycle


def reachable_from(succ: Adj, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def bfs_path(succ: Adj, start: int, targets: set[int]) -> Optional[list[int]]:
    """Shortest path (ties: input edge order) from start to any target,
    inclusive of both endpoints.  None when unreachable."""
    if start in targets:
        return [start]
    parent: dict[int, int] = {start: start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w in parent:
                continue
            parent[w] = v
            if w in targets:
                path = [w]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None
