"""JSON (de)serialization of games, strategy profiles, and lasso plays.

Documents are strict: unknown keys are rejected so that handwritten files
fail loudly instead of being silently misread.  All numbers are exact --
integers or "num/den" strings, never floats.  Parsing collects every error
it can find, each tagged with the JSON path of the offending element.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Optional

from .core import (CostSpec, DiscountedPrice, Edge, EnergySup, GameGraph,
                   LassoPlay, MeanPayoff, Player, RatioAverage,
                   ReachabilityPrice, StrategyAutomaton, Vertex)
from .rationals import format_rational, parse_rational


class GameFormatError(ValueError):
    """All problems found in a document, each as (json_path, message)."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = list(errors)
        super().__init__("\n".join(f"{path}: {msg}" for path, msg in errors))


class _Collector:
    def __init__(self) -> None:
        self.errors: list[tuple[str, str]] = []

    def add(self, path: str, msg: str) -> None:
        self.errors.append((path, msg))

    def raise_if_any(self) -> None:
        if self.errors:
            raise GameFormatError(self.errors)


def _expect_object(doc: Any, path: str, allowed: set[str], required: set[str],
                   errs: _Collector) -> bool:
    if not isinstance(doc, dict):
        errs.add(path or ".", "expected a JSON object")
        return False
    ok = True
    for key in doc:
        if key not in allowed:
            errs.add(f"{path}.{key}", "unknown key")
            ok = False
    for key in sorted(required):
        if key not in doc:
            errs.add(path or ".", f"missing key {key!r}")
            ok = False
    return ok


def _get_rational(doc: Mapping[str, Any], key: str, path: str,
                  errs: _Collector, default: Optional[Fraction] = None
                  ) -> Optional[Fraction]:
    if key not in doc:
        return default
    try:
        return parse_rational(doc[key])
    except ValueError as exc:
        errs.add(f"{path}.{key}", str(exc))
        return None


def _parse_objective(doc: Any, path: str, errs: _Collector) -> Optional[CostSpec]:
    if not isinstance(doc, dict):
        errs.add(path, "expected a JSON object")
        return None
    kind = doc.get("type")
    if kind == "reachability_price":
        if not _expect_object(doc, path, {"type", "goal"}, {"goal"}, errs):
            return None
        goal = doc["goal"]
        if not isinstance(goal, list) or not all(isinstance(v, str) for v in goal):
            errs.add(f"{path}.goal", "expected a list of vertex ids")
            return None
        return ReachabilityPrice(goal)
    if kind == "discounted":
        if not _expect_object(doc, path, {"type", "lambda"}, {"lambda"}, errs):
            return None
        lam = _get_rational(doc, "lambda", path, errs)
        if lam is None:
            return None
        if not 0 < lam < 1:
            errs.add(f"{path}.lambda", "lambda out of range (0,1)")
            return None
        return DiscountedPrice(lam)
    if kind == "mean_payoff":
        if not _expect_object(doc, path, {"type"}, set(), errs):
            return None
        return MeanPayoff()
    if kind == "ratio":
        if not _expect_object(doc, path, {"type"}, set(), errs):
            return None
        return RatioAverage()
    if kind == "energy_sup":
        if not _expect_object(doc, path, {"type", "threshold"}, {"threshold"}, errs):
            return None
        threshold = _get_rational(doc, "threshold", path, errs)
        if threshold is None:
            return None
        return EnergySup(threshold)
    errs.add(f"{path}.type", f"unknown objective type {kind!r}")
    return None


def parse_game(document: bytes | str
               ) -> tuple[GameGraph, dict[Player, CostSpec], Vertex]:
    """Parse a game document; raise GameFormatError listing every problem
    found, each with the JSON path of the offending element."""
    errs = _Collector()
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            errs.add(".", f"not UTF-8: {exc}")
            errs.raise_if_any()
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        errs.add(".", f"invalid JSON: {exc}")
        errs.raise_if_any()

    top = {"players", "vertices", "edges", "initial", "objectives"}
    if not _expect_object(doc, "", top, top, errs):
        errs.raise_if_any()

    players = doc["players"]
    if not (isinstance(players, list) and players
            and all(isinstance(p, str) for p in players)):
        errs.add(".players", "expected a nonempty list of player names")
        errs.raise_if_any()

    vertices: list[Vertex] = []
    owner: dict[Vertex, Player] = {}
    if not isinstance(doc["vertices"], list):
        errs.add(".vertices", "expected a list")
        errs.raise_if_any()
    for k, entry in enumerate(doc["vertices"]):
        path = f".vertices[{k}]"
        if not _expect_object(entry, path, {"id", "owner"}, {"id", "owner"}, errs):
            continue
        vid, who = entry["id"], entry["owner"]
        if not isinstance(vid, str):
            errs.add(f"{path}.id", "expected a string")
            continue
        if not isinstance(who, str):
            errs.add(f"{path}.owner", "expected a string")
            continue
        if vid in owner:
            errs.add(path, f"duplicate vertex {vid!r}")
            continue
        if who not in players:
            errs.add(f"{path}.owner", f"unknown player {who!r}")
            continue
        vertices.append(vid)
        owner[vid] = who

    edges: list[Edge] = []
    seen_edges: set[tuple[str, str]] = set()
    if not isinstance(doc["edges"], list):
        errs.add(".edges", "expected a list")
        errs.raise_if_any()
    for k, entry in enumerate(doc["edges"]):
        path = f".edges[{k}]"
        if not _expect_object(entry, path, {"from", "to", "price", "reward"},
                              {"from", "to", "price"}, errs):
            continue
        src, dst = entry["from"], entry["to"]
        if not isinstance(src, str) or not isinstance(dst, str):
            errs.add(path, "edge endpoints must be strings")
            continue
        bad = False
        for end, label in ((src, "from"), (dst, "to")):
            if end not in owner:
                errs.add(f"{path}.{label}", f"unknown vertex {end!r}")
                bad = True
        if bad:
            continue
        if (src, dst) in seen_edges:
            errs.add(path, f"duplicate edge {src!r} -> {dst!r}")
            continue
        price = _get_rational(entry, "price", path, errs)
        reward = _get_rational(entry, "reward", path, errs, default=Fraction(1))
        if price is None or reward is None:
            continue
        seen_edges.add((src, dst))
        edges.append(Edge(src, dst, price, reward))

    initial = doc["initial"]
    if not isinstance(initial, str):
        errs.add(".initial", "expected a string")
    elif initial not in owner:
        errs.add(".initial", f"unknown vertex {initial!r}")

    specs: dict[Player, CostSpec] = {}
    if not isinstance(doc["objectives"], dict):
        errs.add(".objectives", "expected an object")
    else:
        for p, obj in doc["objectives"].items():
            spec = _parse_objective(obj, f".objectives.{p}", errs)
            if spec is not None:
                specs[p] = spec

    errs.raise_if_any()
    try:
        graph = GameGraph(tuple(players), tuple(vertices), owner, tuple(edges))
    except ValueError as exc:
        raise GameFormatError([(".", str(exc))]) from exc
    return graph, specs, initial


def _rational_json(q: Fraction) -> int | str:
    return q.numerator if q.denominator == 1 else format_rational(q)


def _objective_json(spec: CostSpec) -> dict[str, Any]:
    if isinstance(spec, ReachabilityPrice):
        return {"type": spec.kind, "goal": sorted(spec.goal)}
    if isinstance(spec, DiscountedPrice):
        return {"type": spec.kind, "lambda": _rational_json(spec.factor)}
    if isinstance(spec, EnergySup):
        return {"type": spec.kind, "threshold": _rational_json(spec.threshold)}
    return {"type": spec.kind}


def serialize_game(g: GameGraph, specs: Mapping[Player, CostSpec],
                   initial: Vertex) -> str:
    """Canonical document text: sorted object keys, edges in input order,
    trailing newline."""
    doc: dict[str, Any] = {
        "players": list(g.players),
        "vertices": [{"id": v, "owner": g.owner[v]} for v in g.vertices],
        "edges": [
            {"from": e.src, "to": e.dst, "price": _rational_json(e.price),
             **({"reward": _rational_json(e.reward)}
                if e.reward != 1 else {})}
            for e in g.edges
        ],
        "initial": initial,
        "objectives": {p: _objective_json(spec) for p, spec in specs.items()},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- strategy profiles -------------------------------------------------------

def parse_profile(document: bytes | str, g: GameGraph
                  ) -> tuple[dict[Player, StrategyAutomaton], Optional[Vertex]]:
    """Parse a strategy-profile document: one automaton per player plus an
    optional starting vertex "v0"."""
    errs = _Collector()
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            errs.add(".", f"not UTF-8: {exc}")
            errs.raise_if_any()
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        errs.add(".", f"invalid JSON: {exc}")
        errs.raise_if_any()
    if not _expect_object(doc, "", {"automata", "v0"}, {"automata"}, errs):
        errs.raise_if_any()
    v0 = doc.get("v0")
    if v0 is not None and (not isinstance(v0, str) or v0 not in set(g.vertices)):
        errs.add(".v0", f"unknown vertex {v0!r}")
    if not isinstance(doc["automata"], dict):
        errs.add(".automata", "expected an object")
        errs.raise_if_any()

    automata: dict[Player, StrategyAutomaton] = {}
    for p, entry in doc["automata"].items():
        path = f".automata.{p}"
        if p not in g.players:
            errs.add(path, f"unknown player {p!r}")
            continue
        keys = {"states", "initial", "delta", "advice"}
        if not _expect_object(entry, path, keys, keys, errs):
            continue
        states = entry["states"]
        if not (isinstance(states, list) and states
                and all(isinstance(s, str) for s in states)):
            errs.add(f"{path}.states", "expected a nonempty list of state names")
            continue
        initial = entry["initial"]
        if initial not in states:
            errs.add(f"{path}.initial", f"unknown state {initial!r}")
            continue
        table_ok = True
        for field, value_check, value_desc in (
                ("delta", lambda x: x in states, "a state name"),
                ("advice", lambda x: x in set(g.vertices), "a vertex id")):
            table = entry[field]
            if not isinstance(table, dict):
                errs.add(f"{path}.{field}", "expected an object")
                table_ok = False
                continue
            for m, row in table.items():
                if m not in states:
                    errs.add(f"{path}.{field}.{m}", f"unknown state {m!r}")
                    table_ok = False
                    continue
                if not isinstance(row, dict):
                    errs.add(f"{path}.{field}.{m}", "expected an object")
                    table_ok = False
                    continue
                for v, out in row.items():
                    if v not in set(g.vertices):
                        errs.add(f"{path}.{field}.{m}.{v}",
                                 f"unknown vertex {v!r}")
                        table_ok = False
                    elif not (isinstance(out, str) and value_check(out)):
                        errs.add(f"{path}.{field}.{m}.{v}",
                                 f"expected {value_desc}, got {out!r}")
                        table_ok = False
        if not table_ok:
            continue
        delta = {(m, v): out for m, row in entry["delta"].items()
                 for v, out in row.items()}
        advice = {(m, v): out for m, row in entry["advice"].items()
                  for v, out in row.items()}
        aut = StrategyAutomaton(p, tuple(states), initial, delta, advice)
        try:
            aut.validate(g)
        except ValueError as exc:
            errs.add(path, str(exc))
            continue
        automata[p] = aut
    errs.raise_if_any()
    return automata, v0


def serialize_profile(g: GameGraph, automata: Mapping[Player, StrategyAutomaton],
                      v0: Vertex) -> str:
    """Canonical profile text mirroring StrategyAutomaton verbatim."""
    body: dict[str, Any] = {"automata": {}, "v0": v0}
    for p in g.players:
        if p not in automata:
            continue
        aut = automata[p]
        delta: dict[str, dict[str, str]] = {}
        advice: dict[str, dict[str, str]] = {}
        for (m, v), out in aut.delta.items():
            delta.setdefault(m, {})[v] = out
        for (m, v), out in aut.advice.items():
            advice.setdefault(m, {})[v] = out
        body["automata"][p] = {
            "states": list(aut.states),
            "initial": aut.initial,
            "delta": delta,
            "advice": advice,
        }
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


# -- lasso plays ---------------------------------------------------------------

def parse_lasso(text: str) -> LassoPlay:
    """Parse "A,B;(C,D)" / "A,B;C,D" / ";(C,D)" into a lasso play.

    The semicolon separates prefix from cycle; parentheses around the cycle
    are tolerated.  An input without a semicolon is all cycle.
    """
    body = text.strip()
    prefix_part, sep, cycle_part = body.partition(";")
    if not sep:
        prefix_part, cycle_part = "", body
    cycle_part = cycle_part.strip()
    if cycle_part.startswith("(") and cycle_part.endswith(")"):
        cycle_part = cycle_part[1:-1]
    prefix = [v.strip() for v in prefix_part.split(",") if v.strip()]
    cycle = [v.strip() for v in cycle_part.split(",") if v.strip()]
    if not cycle:
        raise ValueError(f"lasso needs a nonempty cycle part: {text!r}")
    return LassoPlay(prefix, cycle)
