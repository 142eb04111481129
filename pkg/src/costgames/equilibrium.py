"""Nash equilibrium synthesis and verification for multi-player cost games.

Synthesis solves, for every player i, the two-sided game in which i
minimizes their own cost and the coalition of all other players maximizes
it.  Following the optimal play of every such game simultaneously yields the
equilibrium outcome; each player's equilibrium strategy is a finite-memory
automaton that follows this outcome and, upon the first deviation, locks
into the coalition strategy punishing the deviator (holding them to their
two-sided value, which the deviation cannot beat).

Verification is an independent audit: for each player it freezes everyone
else's automata into a product arena and computes that player's best
response with the one-player optimizer, comparing it to the outcome cost.
The product arena argument is what lets a single one-player solve stand in
for the quantification over all (arbitrary, infinite-memory) deviations:
against fixed finite-memory opponents, every play the deviator can realize
is a play of the finite product graph, where their objective admits an
optimal lasso.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from . import oneplayer, solvers
from .core import (CostSpec, Edge, GameGraph, LassoPlay, Player,
                   PositionalStrategy, ReachabilityPrice, StrategyAutomaton,
                   Vertex, validate_game)
from .evaluate import eval_lasso
from .instances import MinMaxInstance
from .rationals import ExtRational

StrategyLike = Union[PositionalStrategy, Mapping[Vertex, Vertex]]


@dataclass(frozen=True)
class ProfileProvenance:
    """What the equilibrium was assembled from: per player, the strategy
    they follow on the outcome and the coalition strategy that punishes
    them.  `overridden` lists players whose own strategy was supplied."""
    optimal: Mapping[Player, object]
    coalition: Mapping[Player, object]
    overridden: tuple[Player, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "optimal", dict(self.optimal))
        object.__setattr__(self, "coalition", dict(self.coalition))


@dataclass(frozen=True)
class NashProfile:
    """A synthesized equilibrium: one automaton per player, the resulting
    outcome play from the initial vertex, each player's cost of that
    outcome, and each player's two-sided game value at the initial
    vertex."""
    automata: Mapping[Player, StrategyAutomaton]
    outcome: LassoPlay
    costs: Mapping[Player, ExtRational]
    values: Mapping[Player, ExtRational]
    provenance: ProfileProvenance

    def __post_init__(self) -> None:
        object.__setattr__(self, "automata", dict(self.automata))
        object.__setattr__(self, "costs", dict(self.costs))
        object.__setattr__(self, "values", dict(self.values))


@dataclass(frozen=True)
class PlayerAudit:
    """Verification outcome for one player."""
    outcome_cost: ExtRational
    best_response: ExtRational
    profitable: bool
    witness: Optional[LassoPlay]


@dataclass(frozen=True)
class VerificationReport:
    outcome: LassoPlay
    audits: Mapping[Player, PlayerAudit]

    def __post_init__(self) -> None:
        object.__setattr__(self, "audits", dict(self.audits))

    @property
    def any_profitable(self) -> bool:
        return any(a.profitable for a in self.audits.values())


# -- helpers -------------------------------------------------------------------

def _require_clean(g: GameGraph, specs: Mapping[Player, CostSpec]) -> None:
    report = validate_game(g, specs)
    if not report.ok:
        raise ValueError("the game fails validation:\n" + str(report))
    for p, spec in specs.items():
        if not spec.solvable:
            raise ValueError(
                f"objective of player {p!r} ({spec.kind}) is evaluation-only; "
                "equilibrium synthesis is not available for it")


def _as_positional(player: Player, strategy: StrategyLike) -> PositionalStrategy:
    if isinstance(strategy, PositionalStrategy):
        return PositionalStrategy(player, strategy.choice)
    return PositionalStrategy(player, dict(strategy))


def _coalition_response_values(g: GameGraph, player: Player,
                               fixed: PositionalStrategy, spec: CostSpec
                               ) -> Mapping[Vertex, ExtRational]:
    """Exact best the coalition can force against `fixed` from every vertex:
    pin the player's moves, let the coalition control everything."""
    own = set(g.vertices_of(player))
    kept = tuple(e for e in g.edges
                 if e.src not in own or fixed.choice[e.src] == e.dst)
    restricted = GameGraph(g.players, g.vertices, g.owner, kept)
    inst = MinMaxInstance(restricted, frozenset(), frozenset(g.vertices), spec)
    return solvers.solve(inst).values


def positional_to_automaton(g: GameGraph, player: Player,
                            strategy: PositionalStrategy) -> StrategyAutomaton:
    """Wrap a positional strategy of `player` as a single-state automaton."""
    strategy.validate(g, g.vertices_of(player))
    state = "m"
    delta = {(state, v): state for v in g.vertices}
    advice = {(state, v): strategy.choice[v] for v in g.vertices_of(player)}
    return StrategyAutomaton(player, (state,), state, delta, advice)


def coalition_to_automaton(g: GameGraph, excluded: Player,
                           strategy: PositionalStrategy) -> StrategyAutomaton:
    """Wrap a positional coalition strategy (advising every vertex NOT owned
    by `excluded`) as a single-state automaton tagged with the player it
    punishes."""
    others = tuple(v for v in g.vertices if g.owner[v] != excluded)
    strategy.validate(g, others)
    state = "m"
    delta = {(state, v): state for v in g.vertices}
    advice = {(state, v): strategy.choice[v] for v in others}
    return StrategyAutomaton(excluded, (state,), state, delta, advice)


def _validate_coalition_automaton(g: GameGraph, excluded: Player,
                                  aut: StrategyAutomaton) -> None:
    """A coalition automaton advises every vertex NOT owned by `excluded`."""
    others = [v for v in g.vertices if g.owner[v] != excluded]
    for m in aut.states:
        for v in g.vertices:
            if (m, v) not in aut.delta:
                raise ValueError(
                    f"coalition automaton against {excluded!r}: memory update "
                    f"missing for state {m!r}, vertex {v!r}")
        for v in others:
            if (m, v) not in aut.advice:
                raise ValueError(
                    f"coalition automaton against {excluded!r}: advice "
                    f"missing for state {m!r}, vertex {v!r}")
            if not g.has_edge(v, aut.advice[(m, v)]):
                raise ValueError(
                    f"coalition automaton against {excluded!r}: advice "
                    f"{v!r} -> {aut.advice[(m, v)]!r} is not an edge")


# -- punishment automaton (positional inputs) -----------------------------------

def _realign_minimal_prefix(rho: LassoPlay) -> tuple[list[Vertex], list[Vertex]]:
    """Shortest-prefix alignment of a lasso: rotate the cycle right while it
    can absorb the prefix tail.  For plays arising from positional profiles
    this restores the pairwise-distinct walk the simulation produced."""
    pre = list(rho.prefix)
    cyc = list(rho.cycle)
    while pre and pre[-1] == cyc[-1]:
        pre.pop()
        cyc = [cyc[-1]] + cyc[:-1]
    return pre, cyc


def _state_names(pairs: Sequence[tuple[str, str]], punishers: Sequence[str]
                 ) -> tuple[list[str], dict[str, str]]:
    """Readable deterministic names: concatenated vertex pairs when all
    vertex names are single characters ('AA', 'AB', ...), 'u|v' otherwise,
    punishment states named by the player; wholesale fallback to positional
    names on any collision."""
    single = all(len(u) == 1 and len(v) == 1 for u, v in pairs)
    pair_names = [u + v if single else f"{u}|{v}" for u, v in pairs]
    punish_names = {j: j for j in punishers}
    everything = pair_names + list(punish_names.values())
    if len(set(everything)) != len(everything):
        pair_names = [f"m{k}" for k in range(len(pairs))]
        punish_names = {j: f"p{k}" for k, j in enumerate(punishers)}
    return pair_names, punish_names


def build_strategy_automaton(g: GameGraph, player: Player, rho: LassoPlay,
                             sigma: PositionalStrategy,
                             punish: Mapping[Player, PositionalStrategy]
                             ) -> StrategyAutomaton:
    """Equilibrium automaton for one player from positional ingredients.

    Follows the outcome `rho` (which must be consistent with `sigma` at the
    player's own vertices and visit no vertex twice in its shortest-prefix
    alignment), and on the first off-play vertex locks into the punishment
    strategy against the deviating player -- the owner of the last on-play
    vertex.  `punish` maps every other player j to the coalition strategy
    against j, restricted to this player's vertices.

    Memory layout: a start state meaning "nothing played yet", one state
    per play edge (the cycle's closing edge wraps back to the cycle entry),
    and one absorbing state per opponent.  A deviation by the player
    themself cannot arise while the automaton's own advice is followed;
    those transitions stay put and keep advising `sigma`, purely to make
    the machine total.
    """
    rho.check_in(g)
    own = set(g.vertices_of(player))
    sigma = _as_positional(player, sigma)
    sigma.validate(g, own)
    expected = set(g.players) - {player}
    if set(punish) != expected:
        raise ValueError(
            f"punishment strategies must cover exactly the other players "
            f"{sorted(expected)}, got {sorted(punish)}")
    for j, pstrat in punish.items():
        pstrat.validate(g, own)

    pre, cyc = _realign_minimal_prefix(rho)
    walk = pre + cyc
    if len(set(walk)) != len(walk):
        raise ValueError("the outcome play must visit no vertex twice "
                         "(it must come from a positional profile)")
    total = len(walk)
    entry = len(pre)              # index the cycle's closing edge returns to

    def nxt(pos: int) -> int:
        return pos + 1 if pos + 1 < total else entry

    for pos, v in enumerate(walk):
        if v in own and walk[nxt(pos)] != sigma.choice[v]:
            raise ValueError(
                f"outcome play moves {v!r} -> {walk[nxt(pos)]!r} but the "
                f"strategy prescribes {v!r} -> {sigma.choice[v]!r}")

    start = walk[0]
    # pair state 0 = "the play has not begun"; pair state 1+pos = "the play
    # has advanced through walk[pos] and continues at walk[nxt(pos)]"
    pairs = [(start, start)] + [(walk[pos], walk[nxt(pos)])
                                for pos in range(total)]
    punishers = sorted(expected, key=g.players.index)
    pair_names, punish_names = _state_names(pairs, punishers)

    here_of = {0: start}          # last on-play vertex per pair state
    expect_of = {0: start}        # vertex the play continues at
    for k in range(1, len(pairs)):
        here_of[k], expect_of[k] = pairs[k]
    at_pos = {v: pos for pos, v in enumerate(walk)}

    delta: dict[tuple[str, Vertex], str] = {}
    advice: dict[tuple[str, Vertex], Vertex] = {}
    for k, name in enumerate(pair_names):
        u2 = expect_of[k]
        follow = pair_names[1 + at_pos[u2]]   # state for the edge out of u2
        for v in g.vertices:
            if v == u2:
                delta[(name, v)] = follow
                if v in own:
                    advice[(name, v)] = walk[nxt(at_pos[u2])]
            else:
                blamed = g.owner[here_of[k]]
                if blamed == player:
                    # unreachable while this automaton's advice is obeyed
                    delta[(name, v)] = name
                    if v in own:
                        advice[(name, v)] = sigma.choice[v]
                else:
                    delta[(name, v)] = punish_names[blamed]
                    if v in own:
                        advice[(name, v)] = punish[blamed].choice[v]
    for j in punishers:
        pname = punish_names[j]
        for v in g.vertices:
            delta[(pname, v)] = pname
            if v in own:
                advice[(pname, v)] = punish[j].choice[v]

    states = tuple(pair_names) + tuple(punish_names[j] for j in punishers)
    aut = StrategyAutomaton(player, states, pair_names[0], delta, advice)
    return aut.validate(g)


# -- outcome simulation -----------------------------------------------------------

def outcome_of(g: GameGraph, automata: Mapping[Player, StrategyAutomaton],
               v0: Vertex) -> LassoPlay:
    """The unique play from `v0` when every player follows their automaton.
    Configurations (vertex, all memory states) repeat within the product of
    the state spaces, producing a lasso."""
    if set(automata) != set(g.players):
        raise ValueError("need exactly one automaton per player")
    for p, aut in automata.items():
        if aut.player != p:
            raise ValueError(f"automaton under key {p!r} belongs to {aut.player!r}")
        aut.validate(g)
    order = g.players
    config = (v0, tuple(automata[p].initial for p in order))
    seen = {config: 0}
    trail = [config]
    while True:
        v, mems = config
        who = g.owner[v]
        move = automata[who].advice_at(mems[order.index(who)], v)
        if not g.has_edge(v, move):
            raise ValueError(f"advice {v!r} -> {move!r} is not an edge")
        stepped = tuple(automata[p].step(m, v) for p, m in zip(order, mems))
        config = (move, stepped)
        if config in seen:
            k = seen[config]
            vertices = [c[0] for c in trail]
            return LassoPlay(vertices[:k], vertices[k:])
        seen[config] = len(trail)
        trail.append(config)


# -- synthesis ----------------------------------------------------------------------

def synthesize_ne(g: GameGraph, specs: Mapping[Player, CostSpec], v0: Vertex,
                  overrides: Optional[Mapping[Player, StrategyLike]] = None
                  ) -> NashProfile:
    """Solve every player's two-sided game and assemble the equilibrium.

    `overrides` may supply a positional strategy for a player to follow
    instead of the solver's; a partial vertex-to-successor map is completed
    with the solver's own choices.  An override is accepted only if it is
    optimal in that player's two-sided game (the coalition's exact best
    response against it matches the game value at every vertex).
    """
    _require_clean(g, specs)
    if v0 not in set(g.vertices):
        raise ValueError(f"unknown initial vertex {v0!r}")
    overrides = dict(overrides or {})
    for p in overrides:
        if p not in g.players:
            raise ValueError(f"override for unknown player {p!r}")

    own_strategy: dict[Player, PositionalStrategy] = {}
    coalition: dict[Player, PositionalStrategy] = {}
    values: dict[Player, ExtRational] = {}
    for i in g.players:
        inst = MinMaxInstance.for_player(g, i, specs[i])
        res = solvers.solve(inst)
        values[i] = res.values[v0]
        coalition[i] = res.sigma_max
        if i in overrides:
            supplied = overrides[i]
            table = dict(supplied.choice if isinstance(
                supplied, PositionalStrategy) else supplied)
            foreign = [v for v in table if v not in set(g.vertices_of(i))]
            if foreign:
                raise ValueError(
                    f"override for player {i!r} assigns vertices it does "
                    f"not own: {sorted(foreign)}")
            merged = {v: res.sigma_min.choice[v] for v in g.vertices_of(i)}
            merged.update(table)
            candidate = PositionalStrategy(i, merged)
            candidate.validate(g, g.vertices_of(i))
            reply = _coalition_response_values(g, i, candidate, specs[i])
            for v in g.vertices:
                if reply[v] != res.values[v]:
                    raise ValueError(
                        f"override for player {i!r} is not optimal: from "
                        f"vertex {v!r} the coalition forces {reply[v]}, the "
                        f"game value is {res.values[v]}")
            own_strategy[i] = candidate
        else:
            own_strategy[i] = PositionalStrategy(i, {
                v: res.sigma_min.choice[v] for v in g.vertices_of(i)})

    joint: dict[Vertex, Vertex] = {}
    for i in g.players:
        joint.update(own_strategy[i].choice)
    trail = [v0]
    seen = {v0}
    while True:
        step = joint[trail[-1]]
        trail.append(step)
        if step in seen:
            break
        seen.add(step)
    rho = LassoPlay.from_walk(trail)

    costs = {i: eval_lasso(specs[i], rho, g) for i in g.players}
    automata: dict[Player, StrategyAutomaton] = {}
    for i in g.players:
        punish = {j: PositionalStrategy(i, {
            v: coalition[j].choice[v] for v in g.vertices_of(i)})
            for j in g.players if j != i}
        automata[i] = build_strategy_automaton(g, i, rho, own_strategy[i], punish)
    provenance = ProfileProvenance(
        optimal=own_strategy, coalition=coalition,
        overridden=tuple(sorted(overrides)))
    return NashProfile(automata, rho, costs, values, provenance)


# -- synthesis from supplied finite-memory strategies --------------------------------

def synthesize_ne_general(g: GameGraph, specs: Mapping[Player, CostSpec],
                          v0: Vertex,
                          supplied: Mapping[Player, tuple[StrategyAutomaton,
                                                          StrategyAutomaton]]
                          ) -> NashProfile:
    """Assemble an equilibrium from prebuilt finite-memory strategies.

    For every player i, `supplied[i]` is a pair: i's own optimal strategy
    automaton, and the coalition automaton punishing i (advising every
    vertex i does not own).  The outcome is the joint simulation of the own
    strategies over configurations (vertex, all own-memory states); each
    equilibrium automaton mirrors the positional construction with its edge
    states indexed by configuration positions instead of vertex pairs, and
    at the first deviation locks into the punishing coalition automaton
    against the deviator, entered at the memory that automaton holds after
    the play read so far.

    Deviation entry memories along the outcome are those of its first
    traversal; a deviation during a later loop of the cycle enters at the
    first-traversal memory of the same position.  For single-state inputs
    both notions coincide and the construction degenerates exactly to the
    positional one.  State count: one start state, one per simulation step
    (at most |V| times the product of the own automata sizes), plus the
    punishing automata's states.

    Reported game values are solved fresh per player; they are independent
    of the supplied strategies.
    """
    _require_clean(g, specs)
    if v0 not in set(g.vertices):
        raise ValueError(f"unknown initial vertex {v0!r}")
    if set(supplied) != set(g.players):
        raise ValueError("need one (own, coalition) automaton pair per player")
    for i, (own_aut, coal_aut) in supplied.items():
        if own_aut.player != i:
            raise ValueError(f"own automaton under key {i!r} belongs to "
                             f"{own_aut.player!r}")
        own_aut.validate(g)
        _validate_coalition_automaton(g, i, coal_aut)

    order = g.players
    own_auts = {i: supplied[i][0] for i in order}
    coal_auts = {i: supplied[i][1] for i in order}

    # joint simulation over configurations until one repeats
    config = (v0, tuple(own_auts[p].initial for p in order))
    seen = {config: 0}
    trail = [config]
    while True:
        v, mems = config
        who = g.owner[v]
        move = own_auts[who].advice_at(mems[order.index(who)], v)
        if not g.has_edge(v, move):
            raise ValueError(f"advice {v!r} -> {move!r} is not an edge")
        stepped = tuple(own_auts[p].step(m, v) for p, m in zip(order, mems))
        config = (move, stepped)
        if config in seen:
            entry = seen[config]
            break
        seen[config] = len(trail)
        trail.append(config)
    steps = len(trail)
    play = [c[0] for c in trail]
    rho = LassoPlay(play[:entry], play[entry:])
    costs = {i: eval_lasso(specs[i], rho, g) for i in order}
    values: dict[Player, ExtRational] = {}
    for i in order:
        inst = MinMaxInstance.for_player(g, i, specs[i])
        values[i] = solvers.solve(inst).values[v0]

    def nxt(pos: int) -> int:
        return pos + 1 if pos + 1 < steps else entry

    # memory of every supplied automaton along the outcome's first pass:
    # xxx_after[j][t] = state of j's automaton once play[0..t-1] was read
    coal_after: dict[Player, list[str]] = {}
    own_after: dict[Player, list[str]] = {}
    for j in order:
        states = [coal_auts[j].initial]
        for v in play:
            states.append(coal_auts[j].step(states[-1], v))
        coal_after[j] = states
        states = [own_auts[j].initial]
        for v in play:
            states.append(own_auts[j].step(states[-1], v))
        own_after[j] = states

    automata: dict[Player, StrategyAutomaton] = {}
    for i in order:
        own = set(g.vertices_of(i))
        opponents = [j for j in order if j != i]
        pos_names = ["init"] + [f"s{t}" for t in range(steps)]
        pun_name = {(j, q): f"p:{j}:{q}"
                    for j in opponents for q in coal_auts[j].states}
        everything = pos_names + list(pun_name.values())
        if len(set(everything)) != len(everything):
            pos_names = [f"m{k}" for k in range(steps + 1)]
            pun_name = {key: f"p{k}" for k, key in enumerate(
                (j, q) for j in opponents for q in coal_auts[j].states)}

        delta: dict[tuple[str, Vertex], str] = {}
        advice: dict[tuple[str, Vertex], Vertex] = {}
        # state pos_names[0]: nothing read yet, the play continues at
        # play[0]; state pos_names[1+t]: read through position t, the play
        # continues at play[nxt(t)]
        for k, name in enumerate(pos_names):
            expected = 0 if k == 0 else nxt(k - 1)
            read_count = k          # vertices read while this state is held
            here = play[0] if k == 0 else play[k - 1]
            target = play[expected]
            follow = pos_names[1 + expected]
            for v in g.vertices:
                if v == target:
                    delta[(name, v)] = follow
                    if v in own:
                        advice[(name, v)] = play[nxt(expected)]
                else:
                    blamed = g.owner[here]
                    if blamed == i:
                        # unreachable while this automaton's advice is obeyed
                        delta[(name, v)] = name
                        if v in own:
                            advice[(name, v)] = own_auts[i].advice_at(
                                own_after[i][read_count], v)
                    else:
                        q = coal_auts[blamed].step(
                            coal_after[blamed][read_count], v)
                        delta[(name, v)] = pun_name[(blamed, q)]
                        if v in own:
                            advice[(name, v)] = coal_auts[blamed].advice_at(
                                coal_after[blamed][read_count], v)
        for (j, q), pname in pun_name.items():
            for v in g.vertices:
                delta[(pname, v)] = pun_name[(j, coal_auts[j].step(q, v))]
                if v in own:
                    advice[(pname, v)] = coal_auts[j].advice_at(q, v)

        states = tuple(pos_names) + tuple(
            pun_name[(j, q)] for j in opponents for q in coal_auts[j].states)
        automata[i] = StrategyAutomaton(
            i, states, pos_names[0], delta, advice).validate(g)

    provenance = ProfileProvenance(optimal=own_auts, coalition=coal_auts)
    return NashProfile(automata, rho, costs, values, provenance)


# -- verification ----------------------------------------------------------------------

def verify_ne(g: GameGraph, specs: Mapping[Player, CostSpec],
              automata: Mapping[Player, StrategyAutomaton], v0: Vertex
              ) -> VerificationReport:
    """Audit a strategy profile: for each player, freeze everyone else into
    the product arena of their automata and compute that player's exact best
    response with the one-player optimizer.  A profitable deviation is a
    best response strictly cheaper than the profile's outcome cost."""
    _require_clean(g, specs)
    if v0 not in set(g.vertices):
        raise ValueError(f"unknown initial vertex {v0!r}")
    outcome = outcome_of(g, automata, v0)
    audits: dict[Player, PlayerAudit] = {}
    for j in g.players:
        cost = eval_lasso(specs[j], outcome, g)
        best, witness = _best_response(g, specs[j], automata, j, v0)
        profitable = best < cost
        audits[j] = PlayerAudit(cost, best, profitable,
                                witness if profitable else None)
    return VerificationReport(outcome, audits)


def _best_response(g: GameGraph, spec: CostSpec,
                   automata: Mapping[Player, StrategyAutomaton], j: Player,
                   v0: Vertex) -> tuple[ExtRational, LassoPlay]:
    """Exact optimum player j can reach when all others follow their
    automata, with a witness play of the original game.

    The arena is the reachable product of game vertices with the other
    players' memories: vertices of other players keep only the advised
    edge, vertices of j keep all game edges, and every memory advances by
    its automaton's update on the vertex read.  Every deviation of j
    induces a play of this finite one-player graph, so its optimum is the
    true infimum over all of j's strategies."""
    others = [p for p in g.players if p != j]
    start = (v0, tuple(automata[p].initial for p in others))
    names: dict[tuple[Vertex, tuple[str, ...]], str] = {start: "q0"}
    back = [start]
    edges: list[Edge] = []
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        v, mems = cur
        stepped = tuple(automata[p].step(m, v) for p, m in zip(others, mems))
        if g.owner[v] == j:
            moves = [e.dst for e in g.out_edges(v)]
        else:
            owner = g.owner[v]
            moves = [automata[owner].advice_at(mems[others.index(owner)], v)]
        for u in moves:
            if not g.has_edge(v, u):
                raise ValueError(f"advice {v!r} -> {u!r} is not an edge")
            succ = (u, stepped)
            if succ not in names:
                names[succ] = f"q{len(back)}"
                back.append(succ)
                queue.append(succ)
            e = g.edge(v, u)
            edges.append(Edge(names[cur], names[succ], e.price, e.reward))
    product = GameGraph(
        players=("agent",),
        vertices=tuple(names[cfg] for cfg in back),
        owner={names[cfg]: "agent" for cfg in back},
        edges=tuple(edges),
    )
    pspec = spec
    if isinstance(spec, ReachabilityPrice):
        pspec = ReachabilityPrice(
            name for cfg, name in names.items() if cfg[0] in spec.goal)
    value, wit = oneplayer.one_player_optimum(product, pspec, True, "q0")
    to_vertex = {names[cfg]: cfg[0] for cfg in back}
    projected = LassoPlay([to_vertex[q] for q in wit.prefix],
                          [to_vertex[q] for q in wit.cycle])
    return value, projected.check_in(g)


# -- structural comparison ----------------------------------------------------------------

def automata_isomorphic(g: GameGraph, a: StrategyAutomaton,
                        b: StrategyAutomaton) -> bool:
    """Equality of the reachable parts up to state renaming: breadth-first
    exploration from the initial states, reading vertices in input order,
    must produce matching transition and advice tables."""
    if a.player != b.player:
        return False
    own = set(g.vertices_of(a.player))
    pairing = {a.initial: b.initial}
    reverse = {b.initial: a.initial}
    queue = deque([(a.initial, b.initial)])
    while queue:
        sa, sb = queue.popleft()
        for v in g.vertices:
            ta = a.delta.get((sa, v))
            tb = b.delta.get((sb, v))
            if (ta is None) != (tb is None):
                return False
            if v in own and a.advice.get((sa, v)) != b.advice.get((sb, v)):
                return False
            if ta is None:
                continue
            if ta in pairing:
                if pairing[ta] != tb:
                    return False
            elif tb in reverse:
                return False
            else:
                pairing[ta] = tb
                reverse[tb] = ta
                queue.append((ta, tb))
    return True
