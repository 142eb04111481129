"""Data model for turn-based multi-player cost games on finite graphs.

A game is a finite directed graph whose vertices are partitioned among the
players; every edge carries an exact rational price and a rational reward.
Plays are infinite vertex sequences; ultimately periodic plays are kept in a
canonical lasso form so that equal plays compare equal structurally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Iterable, Iterator, Mapping, Optional, Union

from . import graphalg
from .rationals import format_rational

Player = str
Vertex = str


def _as_fraction(value: Union[int, str, Fraction], what: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"{what} must be an exact rational, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError) as exc:
        raise TypeError(f"{what} must be an exact rational, got {value!r}") from exc


@dataclass(frozen=True)
class Edge:
    """Directed edge with an exact price and a (default 1) reward."""
    src: Vertex
    dst: Vertex
    price: Fraction
    reward: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "price", _as_fraction(self.price, "edge price"))
        object.__setattr__(self, "reward", _as_fraction(self.reward, "edge reward"))


@dataclass(frozen=True)
class GameGraph:
    """Finite directed game graph with an ownership partition.

    Immutable after construction; derived lookup tables are built once.
    Structural requirements (unique names, total ownership, known endpoints,
    no parallel edges) are enforced here; everything that depends on the
    objectives in play (sinks, price signs, reward cycles, ...) is reported
    by :func:`validate_game` instead of raising.
    """
    players: tuple[Player, ...]
    vertices: tuple[Vertex, ...]
    owner: Mapping[Vertex, Player]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        players = tuple(self.players)
        vertices = tuple(self.vertices)
        edges = tuple(self.edges)
        owner = dict(self.owner)
        object.__setattr__(self, "players", players)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "owner", owner)
        if not players:
            raise ValueError("a game needs at least one player")
        if len(set(players)) != len(players):
            raise ValueError("duplicate player name")
        if not vertices:
            raise ValueError("a game needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex name")
        vertex_set = set(vertices)
        player_set = set(players)
        for v in vertices:
            if v not in owner:
                raise ValueError(f"vertex {v!r} has no owner")
            if owner[v] not in player_set:
                raise ValueError(f"vertex {v!r} owned by unknown player {owner[v]!r}")
        for v in owner:
            if v not in vertex_set:
                raise ValueError(f"owner map mentions unknown vertex {v!r}")
        seen_pairs: set[tuple[Vertex, Vertex]] = set()
        succ: dict[Vertex, list[Edge]] = {v: [] for v in vertices}
        lookup: dict[tuple[Vertex, Vertex], Edge] = {}
        for e in edges:
            if e.src not in vertex_set:
                raise ValueError(f"edge from unknown vertex {e.src!r}")
            if e.dst not in vertex_set:
                raise ValueError(f"edge to unknown vertex {e.dst!r}")
            if (e.src, e.dst) in seen_pairs:
                raise ValueError(f"parallel edge {e.src!r} -> {e.dst!r}")
            seen_pairs.add((e.src, e.dst))
            succ[e.src].append(e)
            lookup[(e.src, e.dst)] = e
        object.__setattr__(self, "_succ", {v: tuple(es) for v, es in succ.items()})
        object.__setattr__(self, "_lookup", lookup)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vertices)})

    # -- lookups ---------------------------------------------------------
    def out_edges(self, v: Vertex) -> tuple[Edge, ...]:
        """Outgoing edges of `v` in input order."""
        return self._succ[v]  # type: ignore[attr-defined]

    def successors(self, v: Vertex) -> tuple[Vertex, ...]:
        return tuple(e.dst for e in self.out_edges(v))

    def edge(self, src: Vertex, dst: Vertex) -> Edge:
        try:
            return self._lookup[(src, dst)]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(f"no edge {src!r} -> {dst!r}") from None

    def has_edge(self, src: Vertex, dst: Vertex) -> bool:
        return (src, dst) in self._lookup  # type: ignore[attr-defined]

    def index(self, v: Vertex) -> int:
        return self._index[v]  # type: ignore[attr-defined]

    def vertices_of(self, player: Player) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if self.owner[v] == player)

    def check_path(self, seq: Iterable[Vertex]) -> tuple[Vertex, ...]:
        """Assert that `seq` is a nonempty walk along edges; return it."""
        path = tuple(seq)
        if not path:
            raise ValueError("empty vertex sequence")
        for v in path:
            if v not in self._index:  # type: ignore[attr-defined]
                raise ValueError(f"unknown vertex {v!r}")
        for a, b in zip(path, path[1:]):
            if not self.has_edge(a, b):
                raise ValueError(f"no edge {a!r} -> {b!r}")
        return path


# -- cost specifications --------------------------------------------------

@dataclass(frozen=True)
class CostSpec:
    """Base class for the per-player cost functions on plays."""
    kind: ClassVar[str] = ""
    solvable: ClassVar[bool] = True       # supported by the value solvers
    prefix_linear: ClassVar[bool] = True  # cost(h.rho) is affine in cost(rho)


@dataclass(frozen=True)
class ReachabilityPrice(CostSpec):
    """Sum of edge prices until the goal set is first visited; +inf if never."""
    goal: frozenset[Vertex]
    kind: ClassVar[str] = "reachability_price"

    def __init__(self, goal: Iterable[Vertex]) -> None:
        object.__setattr__(self, "goal", frozenset(goal))


@dataclass(frozen=True)
class DiscountedPrice(CostSpec):
    """Normalized discounted price sum: (1 - factor) * sum factor^(i-1) * price_i."""
    factor: Fraction
    kind: ClassVar[str] = "discounted"

    def __post_init__(self) -> None:
        object.__setattr__(self, "factor", _as_fraction(self.factor, "discount factor"))


@dataclass(frozen=True)
class MeanPayoff(CostSpec):
    """Limit superior of the partial price averages."""
    kind: ClassVar[str] = "mean_payoff"


@dataclass(frozen=True)
class RatioAverage(CostSpec):
    """Limit superior of (partial price sum) / (partial reward sum)."""
    kind: ClassVar[str] = "ratio"


@dataclass(frozen=True)
class EnergySup(CostSpec):
    """Supremum of the partial price sums, +inf once it exceeds the threshold.

    Evaluation-only: not affine in the tail cost, hence excluded from the
    solvers and from equilibrium synthesis.
    """
    threshold: Fraction
    kind: ClassVar[str] = "energy_sup"
    solvable: ClassVar[bool] = False
    prefix_linear: ClassVar[bool] = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "threshold", _as_fraction(self.threshold, "energy threshold"))


# -- plays -----------------------------------------------------------------

@dataclass(frozen=True)
class History(object):
    """Nonempty finite vertex sequence (validity in a graph is checked where
    a graph is available, via GameGraph.check_path)."""
    vertices: tuple[Vertex, ...]

    def __init__(self, vertices: Iterable[Vertex]) -> None:
        object.__setattr__(self, "vertices", tuple(vertices))
        if not self.vertices:
            raise ValueError("a history has at least one vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def first(self) -> Vertex:
        return self.vertices[0]

    @property
    def last(self) -> Vertex:
        return self.vertices[-1]

    def __str__(self) -> str:
        return ",".join(self.vertices)


def _canonical_lasso(prefix: tuple[Vertex, ...], cycle: tuple[Vertex, ...]
                     ) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
    """Canonical representative of the ultimately periodic play prefix.cycle^w.

    1. shrink the cycle to its primitive period;
    2. absorb matching prefix tails into the cycle alignment (rotate the
       cycle right while its last vertex equals the prefix's last vertex);
    3. rotate the cycle to its lexicographically smallest phase, extending
       the prefix with the skipped vertices.
    Two representations of the same play map to the same result, and the
    map is idempotent.
    """
    cyc = list(cycle)
    pre = list(prefix)
    n = len(cyc)
    for p in range(1, n + 1):
        if n % p == 0 and cyc == cyc[:p] * (n // p):
            cyc = cyc[:p]
            break
    while pre and pre[-1] == cyc[-1]:
        pre.pop()
        cyc = [cyc[-1]] + cyc[:-1]
    n = len(cyc)
    best = 0
    for j in range(1, n):
        if cyc[j:] + cyc[:j] < cyc[best:] + cyc[:best]:
            best = j
    pre = pre + cyc[:best]
    cyc = cyc[best:] + cyc[:best]
    return tuple(pre), tuple(cyc)


@dataclass(frozen=True)
class LassoPlay:
    """Ultimately periodic play `prefix . cycle^w`, auto-canonicalized."""
    prefix: tuple[Vertex, ...]
    cycle: tuple[Vertex, ...]

    def __init__(self, prefix: Iterable[Vertex], cycle: Iterable[Vertex]) -> None:
        pre = tuple(prefix)
        cyc = tuple(cycle)
        if not cyc:
            raise ValueError("a lasso needs a nonempty cycle")
        pre, cyc = _canonical_lasso(pre, cyc)
        object.__setattr__(self, "prefix", pre)
        object.__setattr__(self, "cycle", cyc)

    @classmethod
    def from_walk(cls, trail: Iterable[Vertex]) -> "LassoPlay":
        """Lasso of the walk obtained by cutting `trail` at the first repeat
        of its final vertex (the trail's last vertex must occur earlier)."""
        seq = list(trail)
        tail = seq[-1]
        pos = seq.index(tail)
        if pos == len(seq) - 1:
            raise ValueError("trail does not end in a repeated vertex")
        return cls(seq[:pos], seq[pos:-1])

    @property
    def first(self) -> Vertex:
        return self.prefix[0] if self.prefix else self.cycle[0]

    def vertex(self, t: int) -> Vertex:
        """Vertex at position t (0-based) of the infinite play."""
        if t < len(self.prefix):
            return self.prefix[t]
        return self.cycle[(t - len(self.prefix)) % len(self.cycle)]

    def segment(self, length: int) -> tuple[Vertex, ...]:
        """First `length` vertices of the play."""
        return tuple(self.vertex(t) for t in range(length))

    def check_in(self, g: GameGraph) -> "LassoPlay":
        """Assert every step (including the cycle's closing edge) is an edge."""
        g.check_path(self.prefix + self.cycle + (self.cycle[0],))
        return self

    def __str__(self) -> str:
        return ",".join(self.prefix) + ";(" + ",".join(self.cycle) + ")"


# -- strategies ------------------------------------------------------------

@dataclass(frozen=True)
class PositionalStrategy:
    """Memoryless strategy: one chosen successor per controlled vertex."""
    player: str
    choice: Mapping[Vertex, Vertex]

    def __post_init__(self) -> None:
        object.__setattr__(self, "choice", dict(self.choice))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PositionalStrategy):
            return NotImplemented
        return self.player == other.player and self.choice == other.choice

    def move(self, v: Vertex) -> Vertex:
        return self.choice[v]

    def restrict(self, vertices: Iterable[Vertex], player: str) -> "PositionalStrategy":
        keep = set(vertices)
        return PositionalStrategy(player, {v: u for v, u in self.choice.items() if v in keep})

    def validate(self, g: GameGraph, domain: Iterable[Vertex]) -> "PositionalStrategy":
        dom = set(domain)
        if set(self.choice) != dom:
            missing = sorted(dom - set(self.choice))
            extra = sorted(set(self.choice) - dom)
            raise ValueError(f"strategy domain mismatch (missing {missing}, extra {extra})")
        for v, u in self.choice.items():
            if not g.has_edge(v, u):
                raise ValueError(f"strategy uses non-edge {v!r} -> {u!r}")
        return self


@dataclass(frozen=True)
class StrategyAutomaton:
    """Finite-memory strategy as a Mealy machine over game vertices.

    `delta[(state, v)]` updates the memory after the play visits `v`;
    `advice[(state, v)]` is the move proposed when `v` belongs to `player`.
    During simulation the memory always reflects the vertices strictly
    before the current one: advice is read first, then the memory steps.
    """
    player: str
    states: tuple[str, ...]
    initial: str
    delta: Mapping[tuple[str, Vertex], str]
    advice: Mapping[tuple[str, Vertex], Vertex]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "advice", dict(self.advice))
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate automaton state")
        if self.initial not in self.states:
            raise ValueError("initial state unknown")

    @property
    def size(self) -> int:
        return len(self.states)

    def step(self, state: str, v: Vertex) -> str:
        return self.delta[(state, v)]

    def advice_at(self, state: str, v: Vertex) -> Vertex:
        return self.advice[(state, v)]

    def validate(self, g: GameGraph) -> "StrategyAutomaton":
        own = set(g.vertices_of(self.player))
        for m in self.states:
            for v in g.vertices:
                if (m, v) not in self.delta:
                    raise ValueError(f"memory update missing for state {m!r}, vertex {v!r}")
                if self.delta[(m, v)] not in self.states:
                    raise ValueError(f"memory update leaves the state set at {m!r}, {v!r}")
                if v in own:
                    if (m, v) not in self.advice:
                        raise ValueError(f"advice missing for state {m!r}, vertex {v!r}")
                    if not g.has_edge(v, self.advice[(m, v)]):
                        raise ValueError(
                            f"advice {v!r} -> {self.advice[(m, v)]!r} is not an edge")
        return self


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    """Structural findings about a game/objective combination.

    Each violation is `(code, message)` with codes:
    `sink`, `objective`, `discount_range`, `negative_price`, `reward_cycle`.
    """
    violations: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {code for code, _ in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(f"violation[{code}] {msg}" for code, msg in self.violations)


def validate_game(g: GameGraph, specs: Mapping[Player, CostSpec]) -> ValidationReport:
    """Collect the conditions the solvers and the equilibrium construction
    rely on, as data rather than exceptions."""
    found: list[tuple[str, str]] = []
    for v in g.vertices:
        if not g.out_edges(v):
            found.append(("sink", f"vertex {v!r} has no outgoing edge"))
    for p in g.players:
        if p not in specs:
            found.append(("objective", f"player {p!r} has no objective"))
    for p in specs:
        if p not in g.players:
            found.append(("objective", f"objective for unknown player {p!r}"))
    for p, spec in sorted(specs.items(), key=lambda kv: kv[0]):
        if isinstance(spec, ReachabilityPrice):
            for v in sorted(spec.goal):
                if v not in g.vertices:
                    found.append(("objective",
                                  f"goal of player {p!r} references unknown vertex {v!r}"))
        if isinstance(spec, DiscountedPrice):
            if not (0 < spec.factor < 1):
                found.append(("discount_range",
                              f"discount factor of player {p!r} is "
                              f"{format_rational(spec.factor)}, outside (0,1)"))
    if any(isinstance(s, ReachabilityPrice) for s in specs.values()):
        for e in g.edges:
            if e.price < 0:
                found.append(("negative_price",
                              f"edge {e.src!r} -> {e.dst!r} has negative price "
                              f"{format_rational(e.price)} but a reachability-price "
                              f"objective is in play"))
    if any(isinstance(s, RatioAverage) for s in specs.values()):
        idx = {v: i for i, v in enumerate(g.vertices)}
        adj: list[list[tuple[int, Fraction]]] = [[] for _ in g.vertices]
        for e in g.edges:
            adj[idx[e.src]].append((idx[e.dst], e.reward))
        res = graphalg.min_cycle_mean(adj)
        if res is not None and res[0] <= 0:
            cycle = [g.vertices[i] for i in res[1]]
            found.append(("reward_cycle",
                          f"cycle {','.join(cycle)} has reward sum "
                          f"{format_rational(res[0] * len(cycle))} <= 0 but a "
                          f"ratio objective is in play"))
    return ValidationReport(tuple(found))
