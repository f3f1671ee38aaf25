"""Reflexive agents (moves and outcomes drawn from the same set) and multi-player outcome rules."""

from __future__ import annotations

import itertools
from typing import Callable, Mapping, Sequence

from .core import (
    Context,
    FiniteDomain,
    Quantifier,
    SelectionFunction,
    Subset,
    as_value,
    domain,
    image,
)
from .errors import (
    ArityMismatch,
    DomainCodomainMismatch,
    IncompleteOthers,
    IncompleteTable,
    IndexOutOfRange,
    NonBinaryCandidates,
    UnknownMove,
    UnknownOutcome,
)
from .orders import PartialOrder, maximal_elements


def _require_endo(p: Context, who: str) -> None:
    if p.domain != p.codomain:
        raise DomainCodomainMismatch(
            f"{who} needs moves == outcomes, got {list(p.domain)} and {list(p.codomain)}"
        )


def fixpoints(p: Context) -> Subset:
    """Un-totalised fixpoint set ``{x | p(x) = x}``."""
    _require_endo(p, "fixpoints")
    return Subset(p.domain, [x for x, r in p.items() if r == x])


def _fix_rule(p):
    _require_endo(p, "fix")
    fixed = [x for x, r in p.items() if r == x]
    return fixed or p.domain.elements


def fix_selection() -> SelectionFunction:
    return SelectionFunction("fix", _fix_rule)


def fix_quantifier() -> Quantifier:
    return Quantifier("fix", _fix_rule)


def keynesian_quantifier() -> Quantifier:
    """Outcomes of fixpoints ``{p(x) | p(x) = x}``; all of ``X`` when there are none."""

    def rule(p):
        _require_endo(p, "keynesian")
        backed = [r for x, r in p.items() if r == x]
        return backed or p.codomain.elements

    return Quantifier("keynesian", rule)


def keynesian_selection() -> SelectionFunction:
    s = fix_selection()
    s.name = "keynesian"
    return s


def majority(a, b, c, candidates: Sequence | None = None):
    """Simple majority of three votes over two candidates."""
    votes = [as_value(v) for v in (a, b, c)]
    if candidates is not None:
        cands = set(as_value(x) for x in candidates)
        if len(cands) != 2:
            raise NonBinaryCandidates(f"majority needs exactly two candidates, got {sorted(map(str, cands))}")
        for v in votes:
            if v not in cands:
                raise NonBinaryCandidates(f"vote {v!r} is not a candidate")
    for v in votes:
        if votes.count(v) >= 2:
            return v
    raise NonBinaryCandidates(f"three distinct votes {votes!r} have no majority")


class ProfileRule:
    """An outcome for every joint move profile of a fixed set of players."""

    __slots__ = ("move_domains", "outcomes", "table")

    def __init__(self, move_domains: Sequence, outcomes, table: Mapping):
        self.move_domains = tuple(domain(d) for d in move_domains)
        self.outcomes = domain(outcomes)
        stored = {}
        for profile, result in table.items():
            profile = tuple(as_value(m) for m in profile)
            result = as_value(result)
            if len(profile) != len(self.move_domains):
                raise ArityMismatch(f"profile {profile!r} has {len(profile)} moves, expected {self.player_count}")
            for i, m in enumerate(profile):
                if m not in self.move_domains[i]:
                    raise UnknownMove(m)
            if result not in self.outcomes:
                raise UnknownOutcome(result)
            stored[profile] = result
        for profile in itertools.product(*(d.elements for d in self.move_domains)):
            if profile not in stored:
                raise IncompleteTable(f"outcome rule undefined on profile {profile!r}")
        self.table = stored

    @property
    def player_count(self) -> int:
        return len(self.move_domains)

    def __call__(self, profile: Sequence):
        return self.table[tuple(as_value(m) for m in profile)]

    @classmethod
    def from_function(cls, move_domains: Sequence, outcomes, fn: Callable) -> "ProfileRule":
        move_domains = [domain(d) for d in move_domains]
        profiles = itertools.product(*(d.elements for d in move_domains))
        return cls(move_domains, outcomes, {prof: fn(*prof) for prof in profiles})


def majority_rule(candidates) -> ProfileRule:
    """Three voters, winner by simple majority."""
    cands = domain(candidates)
    if len(cands) != 2:
        raise NonBinaryCandidates(f"majority needs exactly two candidates, got {list(cands)}")
    return ProfileRule.from_function(
        [cands] * 3, cands, lambda a, b, c: majority(a, b, c, cands.elements)
    )


def coordination_rule(first, second) -> ProfileRule:
    """Two players whose outcome is the pair of places they end up in."""
    first, second = domain(first), domain(second)
    places = FiniteDomain(itertools.product(first.elements, second.elements))
    return ProfileRule.from_function([first, second], places, lambda a, b: (a, b))


def induce_context(rule: ProfileRule, player: int, others: Sequence) -> Context:
    """The context seen by ``player`` when every other player's move is fixed.

    ``others`` lists the fixed moves in player order, skipping ``player``.
    """
    if not 0 <= player < rule.player_count:
        raise IndexOutOfRange(f"player {player} out of range 0..{rule.player_count - 1}")
    others = [as_value(m) for m in others]
    if len(others) != rule.player_count - 1:
        raise IncompleteOthers(
            f"need moves for {rule.player_count - 1} other players, got {len(others)}"
        )
    rest = [d for i, d in enumerate(rule.move_domains) if i != player]
    for m, d in zip(others, rest):
        if m not in d:
            raise UnknownMove(m)
    moves = rule.move_domains[player]
    values = []
    for x in moves:
        profile = others[:player] + [x] + others[player:]
        values.append(rule(profile))
    return Context(moves, rule.outcomes, values)


def voting_judge_quantifier(order: PartialOrder) -> Quantifier:
    """Best attainable winner according to the judge's own ranking of the candidates."""

    def rule(p):
        _require_endo(p, "voting-judge")
        return maximal_elements(image(p), order)

    return Quantifier("voting-judge", rule, outcomes=order.ground)


def coordinating_selection(rule: ProfileRule | None, i: int) -> SelectionFunction:
    """Moves of player ``i`` that land in the same place as the other player.

    Outcomes are pairs ``(place of player 0, place of player 1)``; the result
    is all of player ``i``'s moves when no such move exists.
    """
    if rule is not None and rule.player_count != 2:
        raise ArityMismatch(f"coordination needs 2 players, rule has {rule.player_count}")
    if i not in (0, 1):
        raise IndexOutOfRange(f"player index must be 0 or 1, got {i}")
    other = 1 - i

    def select(p):
        if rule is not None and p.domain != rule.move_domains[i]:
            raise ArityMismatch(f"context moves {list(p.domain)} are not player {i}'s moves")
        for r in p.values:
            if not (isinstance(r, tuple) and len(r) == 2):
                raise ArityMismatch(f"outcome {r!r} is not a pair of places")
        met = [x for x, r in p.items() if r[other] == x]
        return met or p.domain.elements

    return SelectionFunction(f"coordinating[{i}]", select)
