"""Heuristic agents over numeric or symbolic outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import (
    SCALAR,
    VECTOR,
    Quantifier,
    SelectionFunction,
    as_rational,
    as_value,
    image,
)
from .errors import (
    EmptyPermissibleSet,
    NegativeRadius,
    NonNumericOutcomes,
    UnknownMove,
    ValidationError,
)
from .orders import PartialOrder, _require_scalar, sub_maximal_elements


def _closest(candidates, target):
    best = min(abs(r - target) for r in candidates)
    return [r for r in candidates if abs(r - target) == best]


def averaging_quantifier() -> Quantifier:
    """Attained outcomes closest to the plain mean of the image."""

    def rule(p):
        _require_scalar(p, "averaging")
        attained = image(p).members
        mean = sum(attained, Fraction(0)) / len(attained)
        return _closest(attained, mean)

    return Quantifier("averaging", rule)


def weighted_averaging_quantifier() -> Quantifier:
    """Attained outcomes closest to the mean over moves (outcomes weighted by preimage size)."""

    def rule(p):
        _require_scalar(p, "weighted-averaging")
        mean = sum(p.values, Fraction(0)) / len(p.values)
        return _closest(image(p).members, mean)

    return Quantifier("weighted-averaging", rule)


def squared_distance(v, w) -> Fraction:
    if isinstance(v, Fraction):
        return (v - w) ** 2
    return sum(((a - b) ** 2 for a, b in zip(v, w)), Fraction(0))


def ideal_move_quantifier(x0, radius) -> Quantifier:
    """All ground outcomes within ``radius`` of the outcome of the ideal move ``x0``.

    The ball is cut out of the declared outcome ground set, so it can contain
    outcomes that no move attains.
    """
    x0 = as_value(x0)
    radius = as_rational(radius)
    if radius < 0:
        raise NegativeRadius(f"radius must be nonnegative, got {radius}")
    limit = radius * radius

    def rule(p):
        if p.codomain.kind not in (SCALAR, VECTOR):
            raise NonNumericOutcomes("ideal-move needs scalar or vector outcomes")
        if x0 not in p.domain:
            raise UnknownMove(x0)
        centre = p(x0)
        return [w for w in p.codomain if squared_distance(centre, w) <= limit]

    return Quantifier(f"ideal-move[{x0}, {radius}]", rule)


def ideal_move_selection(x0) -> SelectionFunction:
    x0 = as_value(x0)

    def rule(p):
        if x0 not in p.domain:
            raise UnknownMove(x0)
        return [x0]

    return SelectionFunction(f"ideal-move[{x0}]", rule)


def second_best_quantifier() -> Quantifier:
    """Sub-maximal attained outcomes under ``>``; empty when only one value is attained."""

    def rule(p):
        _require_scalar(p, "second-best")
        return sub_maximal_elements(image(p), PartialOrder.numeric(p.codomain))

    return Quantifier("second-best", rule)


def _moves(moves) -> frozenset:
    return frozenset(as_value(x) for x in moves)


def _check_moves(p, moves) -> None:
    for x in moves:
        if x not in p.domain:
            raise UnknownMove(x)


def _honest_max(p, permitted):
    values = [r for x, r in p.items() if x in permitted]
    if not values:
        raise EmptyPermissibleSet("no permissible move left to maximise over")
    return [max(values)]


def honest_quantifier(permitted) -> Quantifier:
    """Maximal outcome reachable through the permissible moves only."""
    permitted = _moves(permitted)
    if not permitted:
        raise EmptyPermissibleSet("honest agent needs at least one permissible move")

    def rule(p):
        _require_scalar(p, "honest")
        _check_moves(p, permitted)
        return _honest_max(p, permitted)

    return Quantifier("honest", rule)


def dishonest_quantifier(illicit, threshold) -> Quantifier:
    """Global maximum once an illicit move pays strictly more than ``threshold``, honest otherwise."""
    illicit = _moves(illicit)
    threshold = as_rational(threshold)

    def rule(p):
        _require_scalar(p, "dishonest")
        _check_moves(p, illicit)
        tempting = [r for x, r in p.items() if x in illicit]
        if tempting and max(tempting) > threshold:
            return [max(p.values)]
        return _honest_max(p, frozenset(p.domain) - illicit)

    return Quantifier(f"dishonest[{threshold}]", rule)


def safe_quantifier() -> Quantifier:
    """Attained outcomes reached by the largest number of moves."""

    def rule(p):
        counts = {}
        for r in p.values:
            counts[r] = counts.get(r, 0) + 1
        top = max(counts.values())
        return [r for r, n in counts.items() if n == top]

    return Quantifier("safe", rule)


KINDS = (
    "averaging",
    "weighted-averaging",
    "ideal-move",
    "second-best",
    "honest",
    "dishonest",
    "safe",
)


@dataclass(frozen=True)
class AgentSpec:
    """Declarative description of one of the heuristic agents above.

    Parameters by kind: ideal-move takes ``x0`` and ``radius``; honest takes
    ``permitted``; dishonest takes ``illicit`` and ``threshold``.
    """

    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown agent kind {self.kind!r}")
        required = {
            "ideal-move": {"x0", "radius"},
            "honest": {"permitted"},
            "dishonest": {"illicit", "threshold"},
        }.get(self.kind, set())
        missing = required - set(self.params)
        if missing:
            raise ValidationError(f"{self.kind} agent is missing parameters {sorted(missing)}")
        self.quantifier()

    def quantifier(self) -> Quantifier:
        k, a = self.kind, self.params
        if k == "averaging":
            return averaging_quantifier()
        if k == "weighted-averaging":
            return weighted_averaging_quantifier()
        if k == "ideal-move":
            return ideal_move_quantifier(a["x0"], a["radius"])
        if k == "second-best":
            return second_best_quantifier()
        if k == "honest":
            return honest_quantifier(a["permitted"])
        if k == "dishonest":
            return dishonest_quantifier(a["illicit"], a["threshold"])
        return safe_quantifier()

    def selection(self) -> SelectionFunction | None:
        if self.kind == "ideal-move":
            return ideal_move_selection(self.params["x0"])
        return None


__all__ = [
    "AgentSpec",
    "averaging_quantifier",
    "weighted_averaging_quantifier",
    "ideal_move_quantifier",
    "ideal_move_selection",
    "second_best_quantifier",
    "honest_quantifier",
    "dishonest_quantifier",
    "safe_quantifier",
    "squared_distance",
]
