"""Command-line front end.

Exit codes: 0 computed / property holds, 1 property fails, 2 usage,
validation or budget error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import demos, properties
from .core import FiniteDomain
from .errors import DecisionError, ValidationError
from .formats import (
    context_to_json,
    context_to_text,
    parse_agent,
    parse_problem,
    text_list,
    to_json,
)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

PROPERTIES = (
    properties.TOTAL,
    properties.ATTAINABLE,
    properties.STRONGLY_ATTAINABLE,
    properties.CONTEXT_INDEPENDENT,
    properties.ATTAINS,
)

_SIGNATURE = re.compile(r"^\s*X\s*=\s*(\d+)\s*(?:,\s*R\s*=\s*(\d+)\s*)?$")


class UsageError(DecisionError):
    pass


def _emit(fmt: str, payload: dict, lines: list[str]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_eval(args) -> int:
    problem = parse_problem(args.problem)
    agent = parse_agent(args.agent).build(problem.outcomes, problem.order, problem.profile)
    p = problem.context
    payload = {"agent": agent.name}
    lines = [f"agent: {agent.name}", f"context: {context_to_text(p)}"]
    if agent.quantifier is not None:
        out = agent.quantifier(p)
        payload["outcomes"] = [to_json(r) for r in out]
        lines.append(f"outcomes: {text_list(out)}")
    if agent.selection is not None:
        out = agent.selection(p)
        payload["moves"] = [to_json(x) for x in out]
        lines.append(f"moves: {text_list(out)}")
    _emit(args.format, payload, lines)
    return EXIT_OK


def parse_signature(text: str) -> tuple[FiniteDomain, FiniteDomain]:
    """``X=n,R=m`` gives moves 0..n-1 and outcomes 0..m-1; ``X=n`` alone means R = X."""
    m = _SIGNATURE.match(text)
    if not m:
        raise UsageError(f"bad signature {text!r}; expected X=<n>,R=<m> or X=<n>")
    n = int(m.group(1))
    k = int(m.group(2)) if m.group(2) is not None else n
    if n < 1 or k < 1:
        raise UsageError("signature sizes must be positive")
    return FiniteDomain(range(n)), FiniteDomain(range(k))


def _witness_json(w: properties.Witness) -> dict:
    out = {"contexts": [context_to_json(p) for p in w.contexts]}
    out["values"] = [[to_json(v) for v in s] for s in w.values]
    if w.move is not None:
        out["move"] = to_json(w.move)
    return out


def _witness_lines(w: properties.Witness) -> list[str]:
    lines = ["witness:"]
    for i, p in enumerate(w.contexts):
        lines.append(f"  context {i + 1}: {json.dumps(context_to_json(p), separators=(',', ':'))}")
        lines.append(f"    {context_to_text(p)}")
    if w.move is not None:
        lines.append(f"  move: {to_json(w.move)}")
    lines.append("  values: " + " vs ".join(text_list(s) for s in w.values))
    return lines


def cmd_check(args) -> int:
    if args.problem:
        problem = parse_problem(args.problem)
        moves, outcomes = problem.moves, problem.outcomes
        order, profile = problem.order, problem.profile
    elif args.signature:
        moves, outcomes = parse_signature(args.signature)
        order = profile = None
    else:
        raise UsageError("check needs --signature or --problem")
    agent = parse_agent(args.agent).build(outcomes, order, profile)
    budget = properties.EnumerationBudget(args.budget)
    if args.property == properties.ATTAINS:
        if not args.against:
            raise UsageError("--property attains needs --against <agent file>")
        against = parse_agent(args.against).build(outcomes, order, profile)
        if agent.selection is None:
            raise ValidationError(f"agent {agent.name} has no selection function")
        if against.quantifier is None:
            raise ValidationError(f"agent {against.name} has no quantifier")
        report = properties.attains(agent.selection, against.quantifier, moves, outcomes, budget)
        label = f"{agent.name} attains {against.name}"
    else:
        if agent.quantifier is None:
            raise ValidationError(f"agent {agent.name} has no quantifier")
        check = {
            properties.TOTAL: properties.is_total,
            properties.ATTAINABLE: properties.is_attainable,
            properties.STRONGLY_ATTAINABLE: properties.is_strongly_attainable,
            properties.CONTEXT_INDEPENDENT: properties.is_context_independent,
        }[args.property]
        report = check(agent.quantifier, moves, outcomes, budget)
        label = agent.name
    payload = {
        "property": report.property,
        "agent": label,
        "moves": [to_json(x) for x in moves],
        "outcomes": [to_json(r) for r in outcomes],
        "verdict": report.verdict,
        "contexts_checked": report.contexts_checked,
        "witness": None if report.witness is None else _witness_json(report.witness),
    }
    lines = [
        f"property: {report.property}",
        f"agent: {label}",
        f"moves: {text_list(moves)}",
        f"outcomes: {text_list(outcomes)}",
        f"verdict: {report.verdict}",
        f"contexts_checked: {report.contexts_checked}",
    ]
    if report.witness is not None:
        lines += _witness_lines(report.witness)
    _emit(args.format, payload, lines)
    return EXIT_OK if report.holds else EXIT_FAILS


def cmd_demo(args) -> int:
    if args.name not in demos.DEMOS:
        raise UsageError(f"unknown demo {args.name!r}; choose from {', '.join(demos.DEMOS)}")
    sys.stdout.write(demos.render(args.name))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quantifiers", description="Evaluate and check higher-order decision agents.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate an agent on a problem")
    ev.add_argument("--problem", required=True)
    ev.add_argument("--agent", required=True)
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.set_defaults(func=cmd_eval)

    ch = sub.add_parser("check", help="decide a structural property by enumeration")
    ch.add_argument("--agent", required=True)
    grounds = ch.add_mutually_exclusive_group(required=True)
    grounds.add_argument("--signature", help="X=<n>,R=<m>; moves 0..n-1, outcomes 0..m-1")
    grounds.add_argument("--problem")
    ch.add_argument("--property", required=True, choices=PROPERTIES)
    ch.add_argument("--against", help="agent file providing the quantifier for 'attains'")
    ch.add_argument("--budget", type=int, default=properties.DEFAULT_BUDGET)
    ch.add_argument("--format", choices=("text", "json"), default="text")
    ch.set_defaults(func=cmd_check)

    dm = sub.add_parser("demo", help="replay a built-in worked example")
    dm.add_argument("name")
    dm.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "budget", 1) <= 0:
            raise UsageError("--budget must be positive")
        return args.func(args)
    except (DecisionError, TypeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
