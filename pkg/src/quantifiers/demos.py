"""Built-in worked examples replayed by ``quantifiers demo <name>``."""

from __future__ import annotations

from .agents import dishonest_quantifier, honest_quantifier, safe_quantifier, second_best_quantifier
from .core import FiniteDomain, make_context, preimage_count
from .formats import context_to_text, text_list
from .orders import argmax_selection_numeric, make_partial_order
from .reflexive import (
    coordinating_selection,
    coordination_rule,
    fix_quantifier,
    fix_selection,
    induce_context,
    keynesian_quantifier,
    keynesian_selection,
    majority_rule,
    voting_judge_quantifier,
)


def beaches() -> list[str]:
    highways = FiniteDomain(["h1", "h2", "h3", "h4", "h5", "h6"])
    beach_set = FiniteDomain(["b1", "b2", "b3"])
    p = make_context(highways, beach_set, {
        "h1": "b1", "h2": "b2", "h3": "b2", "h4": "b3", "h5": "b3", "h6": "b3",
    })
    counts = ", ".join(f"{r}={preimage_count(p, r)}" for r in beach_set)
    return [
        "Safe agent: go to the beach reachable by the most highways",
        f"moves: {text_list(highways)}",
        f"outcomes: {text_list(beach_set)}",
        f"context: {context_to_text(p)}",
        f"highways per beach: {counts}",
        f"safe outcomes: {text_list(safe_quantifier()(p))}",
    ]


def wines() -> list[str]:
    wine_list = FiniteDomain(["w1", "w2", "w3"])
    prices = FiniteDomain([10, 20, 30])
    p = make_context(wine_list, prices, {"w1": 10, "w2": 20, "w3": 30})
    second = second_best_quantifier()(p)
    return [
        "Second-best agent: order the second most expensive wine",
        f"moves: {text_list(wine_list)}",
        f"outcomes: {text_list(prices)}",
        f"context: {context_to_text(p)}",
        f"argmax moves: {text_list(argmax_selection_numeric()(p))}",
        f"second-best outcomes: {text_list(second)}",
        f"second-best moves: {text_list(x for x, r in p.items() if r in second)}",
    ]


def honest() -> list[str]:
    actions = FiniteDomain(["a", "b", "c"])
    money = FiniteDomain([5, 7, 9])
    p = make_context(actions, money, {"a": 5, "b": 7, "c": 9})
    lines = [
        "Honest and dishonest agents: action c is illicit",
        f"moves: {text_list(actions)}",
        f"outcomes: {text_list(money)}",
        f"context: {context_to_text(p)}",
        f"honest (permitted [a, b]) outcomes: {text_list(honest_quantifier(['a', 'b'])(p))}",
    ]
    for threshold in (8, 10):
        out = dishonest_quantifier(["c"], threshold)(p)
        lines.append(f"dishonest (illicit [c], threshold {threshold}) outcomes: {text_list(out)}")
    return lines


def judges() -> list[str]:
    candidates = FiniteDomain(["A", "B"])
    rule = majority_rule(candidates)
    prefers_a = make_partial_order(candidates, [("A", "B")])
    utility = voting_judge_quantifier(prefers_a)
    keynes_q, keynes_s = keynesian_quantifier(), keynesian_selection()
    lines = [
        "Three judges, majority vote; judge 1 decides with the other two votes fixed",
    ]
    for others in (("A", "B"), ("A", "A")):
        p = induce_context(rule, 0, others)
        lines += [
            f"others: {text_list(others)}",
            f"  induced context: {context_to_text(p)}",
            f"  utility judge (A over B) outcomes: {text_list(utility(p))}",
            f"  keynesian outcomes: {text_list(keynes_q(p))}",
            f"  keynesian moves: {text_list(keynes_s(p))}",
        ]
    return lines


def coordination() -> list[str]:
    places = FiniteDomain(["A", "B"])
    rule = coordination_rule(places, places)
    eps = coordinating_selection(rule, 0)
    lines = ["Two players want to meet for lunch; player 0 decides"]
    for other in ("B", "A"):
        p = induce_context(rule, 0, [other])
        lines += [
            f"player 1 goes to: {other}",
            f"  induced context: {context_to_text(p)}",
            f"  coordinating moves: {text_list(eps(p))}",
        ]
    return lines


def fixpoint() -> list[str]:
    line = FiniteDomain([-1, 0, 1])
    identity = make_context(line, line, [(x, x) for x in line])
    negation = make_context(line, line, [(x, -x) for x in line])
    fq, fs = fix_quantifier(), fix_selection()
    lines = ["Fixpoint agent: same image, different fixpoints"]
    for name, p in (("identity", identity), ("negation", negation)):
        lines += [
            f"{name}: {context_to_text(p)}",
            f"  fix outcomes: {text_list(fq(p))}",
            f"  fix moves: {text_list(fs(p))}",
        ]
    return lines


DEMOS = {
    "beaches": beaches,
    "wines": wines,
    "honest": honest,
    "judges": judges,
    "coordination": coordination,
    "fixpoint": fixpoint,
}


def render(name: str) -> str:
    return "\n".join([f"demo: {name}", *DEMOS[name]()]) + "\n"


__all__ = ["DEMOS", "render"]
