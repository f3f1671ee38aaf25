"""JSON problem and agent files, and value rendering for reports.

Values in files: integers and ``"n/d"`` strings are rationals, other strings
are symbols, arrays are vectors (all rational) or composite symbols.

Problem file::

    {"moves": ["a", "b"], "outcomes": [1, 3],
     "context": {"a": 1, "b": 3},
     "order": [[3, 1]]}

or, instead of ``moves``/``context``, a profile whose focal player's context
is induced from the other players' fixed moves::

    {"outcomes": ["A", "B"],
     "profile": {"players": [["A", "B"], ["A", "B"], ["A", "B"]],
                 "rule": [{"profile": ["A", "A", "A"], "outcome": "A"}, ...],
                 "focal": 0, "others": ["A", "B"]}}

Agent file::

    {"kind": "dishonest", "params": {"illicit": ["c"], "threshold": 8}}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import agents, orders, reflexive
from .core import (
    Context,
    FiniteDomain,
    Quantifier,
    SelectionFunction,
    as_rational,
    make_context,
    table_quantifier,
    table_selection,
)
from .errors import DecisionError, ValidationError
from .orders import PartialOrder
from .reflexive import ProfileRule

_RATIONAL = re.compile(r"^\s*-?\d+\s*/\s*\d+\s*$")

AGENT_KINDS = (
    "max",
    "argmax",
    "order-max",
    "order-selection",
    "averaging",
    "weighted-averaging",
    "ideal-move",
    "second-best",
    "honest",
    "dishonest",
    "safe",
    "fix",
    "keynesian",
    "voting-judge",
    "coordinating",
    "table",
)


class ParseError(DecisionError):
    def __init__(self, message, *, path=None, field=None, line=None):
        self.path = path
        self.field = field
        self.line = line
        self.reason = message
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{': '.join(where)}: {message}" if where else message)


def parse_value(raw, field="value"):
    if isinstance(raw, bool) or raw is None or isinstance(raw, (float, dict)):
        raise ParseError(f"unsupported value {raw!r}", field=field)
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        return Fraction(raw.replace(" ", "")) if _RATIONAL.match(raw) else raw
    if isinstance(raw, list):
        return tuple(parse_value(v, field) for v in raw)
    raise ParseError(f"unsupported value {raw!r}", field=field)


def to_json(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, tuple):
        return [to_json(v) for v in value]
    return value


def to_text(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(to_text(v) for v in value) + ")"
    return str(value)


def text_list(values) -> str:
    return "[" + ", ".join(to_text(v) for v in values) + "]"


def _lookup(domain: FiniteDomain, key: str, field: str):
    """Resolve a JSON object key (always a string) to a domain element."""
    hits = [e for e in domain if to_text(e) == key or json.dumps(to_json(e)) == key]
    if len(hits) != 1:
        raise ParseError(f"{key!r} does not name exactly one element of {list(map(to_text, domain))}", field=field)
    return hits[0]


def _domain(raw, field) -> FiniteDomain:
    if not isinstance(raw, list):
        raise ParseError("expected a list", field=field)
    return FiniteDomain(parse_value(v, field) for v in raw)


def context_to_json(p: Context) -> dict:
    """Problem-file representation of a single context."""
    return {
        "moves": [to_json(x) for x in p.domain],
        "outcomes": [to_json(r) for r in p.codomain],
        "context": [[to_json(x), to_json(r)] for x, r in p.items()],
    }


def context_to_text(p: Context) -> str:
    return ", ".join(f"{to_text(x)}->{to_text(r)}" for x, r in p.items())


def _load(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path=path) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path=path, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object", path=path, line=1)
    return data


@dataclass
class ProblemFile:
    moves: FiniteDomain
    outcomes: FiniteDomain
    context: Context
    order: PartialOrder | None = None
    profile: ProfileRule | None = None
    focal: int | None = None
    others: tuple = ()


def _parse_order(raw, outcomes: FiniteDomain) -> PartialOrder:
    if raw == "numeric":
        return PartialOrder.numeric(outcomes)
    if not isinstance(raw, list) or not all(isinstance(pr, list) and len(pr) == 2 for pr in raw):
        raise ParseError("order must be a list of [better, worse] pairs or \"numeric\"", field="order")
    return orders.make_partial_order(outcomes, [(parse_value(a, "order"), parse_value(b, "order")) for a, b in raw])


def _parse_profile(raw, outcomes: FiniteDomain):
    if not isinstance(raw, dict):
        raise ParseError("expected an object", field="profile")
    for key in ("players", "rule", "focal", "others"):
        if key not in raw:
            raise ParseError("missing field", field=f"profile.{key}")
    players = raw["players"]
    if not isinstance(players, list) or not players:
        raise ParseError("expected a nonempty list of move lists", field="profile.players")
    domains = [_domain(d, "profile.players") for d in players]
    table = {}
    for entry in raw["rule"]:
        if not isinstance(entry, dict) or "profile" not in entry or "outcome" not in entry:
            raise ParseError("entries need 'profile' and 'outcome'", field="profile.rule")
        key = tuple(parse_value(m, "profile.rule") for m in entry["profile"])
        table[key] = parse_value(entry["outcome"], "profile.rule")
    rule = ProfileRule(domains, outcomes, table)
    focal = raw["focal"]
    if isinstance(focal, bool) or not isinstance(focal, int):
        raise ParseError("expected an integer player index", field="profile.focal")
    others = tuple(parse_value(m, "profile.others") for m in raw["others"])
    return rule, focal, others


def problem_from_dict(data: dict, path=None) -> ProblemFile:
    try:
        if "outcomes" not in data:
            raise ParseError("missing field", field="outcomes")
        outcomes = _domain(data["outcomes"], "outcomes")
        has_context, has_profile = "context" in data, "profile" in data
        if has_context == has_profile:
            raise ParseError("exactly one of 'context' or 'profile' is required", field="context")
        order = _parse_order(data["order"], outcomes) if "order" in data else None
        if has_context:
            if "moves" not in data:
                raise ParseError("missing field", field="moves")
            moves = _domain(data["moves"], "moves")
            raw = data["context"]
            if isinstance(raw, dict):
                pairs = [(_lookup(moves, k, "context"), parse_value(v, f"context.{k}")) for k, v in raw.items()]
            elif isinstance(raw, list) and all(isinstance(e, list) and len(e) == 2 for e in raw):
                pairs = [(parse_value(m, "context"), parse_value(r, "context")) for m, r in raw]
            else:
                raise ParseError("expected an object or a list of [move, outcome] pairs", field="context")
            return ProblemFile(moves, outcomes, make_context(moves, outcomes, pairs), order)
        rule, focal, others = _parse_profile(data["profile"], outcomes)
        p = reflexive.induce_context(rule, focal, others)
        return ProblemFile(p.domain, outcomes, p, order, rule, focal, others)
    except ParseError as exc:
        if exc.path is None and path is not None:
            raise ParseError(exc.reason, path=path, field=exc.field, line=exc.line) from None
        raise


def parse_problem(path) -> ProblemFile:
    return problem_from_dict(_load(path), path)


@dataclass
class Agent:
    name: str
    quantifier: Quantifier | None = None
    selection: SelectionFunction | None = None


@dataclass
class AgentFile:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def build(self, outcomes: FiniteDomain, order: PartialOrder | None = None,
              profile: ProfileRule | None = None) -> Agent:
        """Instantiate against the outcome ground set (needed for order-based kinds)."""
        k, a = self.kind, self.params
        if k == "max":
            return Agent(k, quantifier=orders.max_quantifier_numeric())
        if k == "argmax":
            return Agent(k, selection=orders.argmax_selection_numeric())
        if k in ("order-max", "order-selection", "voting-judge"):
            if "order" in a:
                order = _parse_order(a["order"], outcomes)
            if order is None:
                raise ValidationError(f"{k} needs an order, in the agent params or the problem")
            if order.ground != outcomes:
                raise ValidationError(f"{k} order is over {list(order.ground)}, outcomes are {list(outcomes)}")
            if k == "order-max":
                return Agent(k, quantifier=orders.order_max_quantifier(order))
            if k == "order-selection":
                return Agent(k, selection=orders.order_selection(order))
            return Agent(k, quantifier=reflexive.voting_judge_quantifier(order))
        if k == "fix":
            return Agent(k, reflexive.fix_quantifier(), reflexive.fix_selection())
        if k == "keynesian":
            return Agent(k, reflexive.keynesian_quantifier(), reflexive.keynesian_selection())
        if k == "coordinating":
            player = a.get("player", 0)
            return Agent(k, selection=reflexive.coordinating_selection(profile, player))
        if k == "table":
            return Agent(k, **_table_agent(a))
        spec = agents.AgentSpec(k, _agent_params(k, a))
        return Agent(k, spec.quantifier(), spec.selection())


def _agent_params(kind, a) -> dict:
    out = {}
    for key, value in a.items():
        if key in ("permitted", "illicit"):
            if not isinstance(value, list):
                raise ParseError("expected a list of moves", field=f"params.{key}")
            out[key] = [parse_value(v, f"params.{key}") for v in value]
        elif key == "x0":
            out[key] = parse_value(value, "params.x0")
        elif key in ("radius", "threshold"):
            try:
                out[key] = as_rational(value)
            except (TypeError, ValueError) as exc:
                raise ParseError(str(exc), field=f"params.{key}") from None
        else:
            raise ParseError(f"unknown parameter for {kind}", field=f"params.{key}")
    return out


def _table_agent(a) -> dict:
    mode = a.get("mode")
    if mode not in ("quantifier", "selection"):
        raise ParseError("mode must be 'quantifier' or 'selection'", field="params.mode")
    moves = _domain(a.get("moves"), "params.moves")
    outcomes = _domain(a.get("outcomes"), "params.outcomes")
    table = {}
    for entry in a.get("entries", []):
        if not isinstance(entry, dict) or "context" not in entry or "value" not in entry:
            raise ParseError("entries need 'context' and 'value'", field="params.entries")
        key = tuple(parse_value(v, "params.entries") for v in entry["context"])
        table[key] = [parse_value(v, "params.entries") for v in entry["value"]]
    if mode == "quantifier":
        return {"quantifier": table_quantifier(moves, outcomes, table)}
    return {"selection": table_selection(moves, outcomes, table)}


def agent_from_dict(data: dict, path=None) -> AgentFile:
    kind = data.get("kind")
    if kind not in AGENT_KINDS:
        raise ParseError(f"unknown agent kind {kind!r}", path=path, field="kind")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise ParseError("expected an object", path=path, field="params")
    agent = AgentFile(kind, params)
    if kind in agents.KINDS:
        # Validate eagerly so bad params surface at parse time.
        agents.AgentSpec(kind, _agent_params(kind, params))
    return agent


def parse_agent(path) -> AgentFile:
    return agent_from_dict(_load(path), path)
