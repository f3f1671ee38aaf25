"""Exhaustive decision procedures for structural properties of quantifiers.

Every check enumerates all ``|R| ** |X|`` contexts of a declared signature
and reports the first violation in enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    Context,
    FiniteDomain,
    Quantifier,
    SelectionFunction,
    Subset,
    domain,
    image,
    iter_contexts,
    table_selection,
)
from .errors import (
    BudgetExceeded,
    InvalidChoiceFunction,
    NonTotalSelection,
    NotAttainable,
    PreconditionViolated,
    ReconstructionMismatch,
)
from .orders import ChoiceFunction, nonempty_subsets

DEFAULT_BUDGET = 1_000_000

TOTAL = "total"
ATTAINABLE = "attainable"
STRONGLY_ATTAINABLE = "strongly-attainable"
CONTEXT_INDEPENDENT = "context-independent"
ATTAINS = "attains"


@dataclass(frozen=True)
class EnumerationBudget:
    max_contexts: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_contexts <= 0:
            raise ValueError("budget must be positive")


def _budget(budget) -> EnumerationBudget:
    if budget is None:
        return EnumerationBudget()
    if isinstance(budget, int):
        return EnumerationBudget(budget)
    return budget


@dataclass(frozen=True)
class Witness:
    """A counterexample: the offending contexts, an optional move, and the values that disagree."""

    contexts: tuple[Context, ...]
    values: tuple[Subset, ...] = ()
    move: object = None


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: Witness | None
    contexts_checked: int

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self) -> bool:
        return self.holds


def count_contexts(moves, outcomes) -> int:
    return len(domain(outcomes)) ** len(domain(moves))


def enumerate_contexts(moves, outcomes, budget=None) -> Iterator[Context]:
    """All contexts over ``(moves, outcomes)`` in mixed-radix order, last move fastest.

    Raises BudgetExceeded before yielding anything if the space is too large.
    """
    moves, outcomes = domain(moves), domain(outcomes)
    budget = _budget(budget)
    n = count_contexts(moves, outcomes)
    if n > budget.max_contexts:
        raise BudgetExceeded(n, budget.max_contexts)
    return iter_contexts(moves, outcomes)


def _scan(name, contexts, violation) -> PropertyReport:
    checked = 0
    for p in contexts:
        checked += 1
        witness = violation(p)
        if witness is not None:
            return PropertyReport(name, False, witness, checked)
    return PropertyReport(name, True, None, checked)


def is_total(phi: Quantifier, moves, outcomes, budget=None) -> PropertyReport:
    def violation(p):
        out = phi(p)
        return None if out else Witness((p,), (out,))

    return _scan(TOTAL, enumerate_contexts(moves, outcomes, budget), violation)


def is_attainable(phi: Quantifier, moves, outcomes, budget=None) -> PropertyReport:
    def violation(p):
        out = phi(p)
        attained = image(p).as_frozenset()
        return None if out.as_frozenset() & attained else Witness((p,), (out,))

    return _scan(ATTAINABLE, enumerate_contexts(moves, outcomes, budget), violation)


def is_strongly_attainable(phi: Quantifier, moves, outcomes, budget=None) -> PropertyReport:
    def violation(p):
        out = phi(p)
        attained = image(p).as_frozenset()
        return None if out.as_frozenset() <= attained else Witness((p,), (out,))

    return _scan(STRONGLY_ATTAINABLE, enumerate_contexts(moves, outcomes, budget), violation)


def is_context_independent(phi: Quantifier, moves, outcomes, budget=None) -> PropertyReport:
    """Outputs must agree on all contexts with the same image.

    Contexts are grouped by image; each new context is compared only with the
    first context seen for its image.
    """
    first_seen: dict[frozenset, tuple[Context, Subset]] = {}

    def violation(p):
        out = phi(p)
        key = image(p).as_frozenset()
        if key not in first_seen:
            first_seen[key] = (p, out)
            return None
        q, q_out = first_seen[key]
        return None if q_out == out else Witness((q, p), (q_out, out))

    return _scan(CONTEXT_INDEPENDENT, enumerate_contexts(moves, outcomes, budget), violation)


def attains(epsilon: SelectionFunction, phi: Quantifier, moves, outcomes, budget=None) -> PropertyReport:
    """Does every selected move reach a preferred outcome on every context?

    Raises NonTotalSelection if ``epsilon`` is empty on some context.
    """
    contexts = list(enumerate_contexts(moves, outcomes, budget))
    selections = []
    for p in contexts:
        chosen = epsilon(p)
        if not chosen:
            raise NonTotalSelection(p)
        selections.append(chosen)

    def violation(pair):
        p, chosen = pair
        preferred = phi(p)
        for x in chosen:
            if p(x) not in preferred:
                return Witness((p,), (chosen, preferred), move=x)
        return None

    return _scan(ATTAINS, zip(contexts, selections), violation)


def attainment_witness(phi: Quantifier, moves, outcomes, budget=None) -> SelectionFunction:
    """Tabulated selection ``p -> {x | p(x) in phi(p)}``, total and attaining ``phi``."""
    report = is_attainable(phi, moves, outcomes, budget)
    if not report.holds:
        raise NotAttainable(report)
    table = {}
    for p in enumerate_contexts(moves, outcomes, budget):
        preferred = phi(p)
        table[p.values] = [x for x, r in p.items() if r in preferred]
    return table_selection(moves, outcomes, table, name=f"witness[{phi.name}]")


def canonical_context(moves: FiniteDomain, outcomes: FiniteDomain, S) -> Context:
    """A context with image exactly ``S``: the first moves carry ``S`` in ground order, the rest repeat its first element."""
    members = Subset(outcomes, S).members
    if not members or len(members) > len(moves):
        raise PreconditionViolated(f"no context over {len(moves)} moves has image {set(members)}")
    values = list(members) + [members[0]] * (len(moves) - len(members))
    return Context(moves, outcomes, values)


def reconstruct_choice_function(phi: Quantifier, moves, outcomes, budget=None) -> ChoiceFunction:
    """Recover ``f`` with ``phi = f . Im`` from a context-independent quantifier."""
    moves, outcomes = domain(moves), domain(outcomes)
    if len(moves) < len(outcomes):
        raise PreconditionViolated(f"|X| = {len(moves)} < |R| = {len(outcomes)}")
    report = is_context_independent(phi, moves, outcomes, budget)
    if not report.holds:
        raise PreconditionViolated(f"{phi.name} is context-dependent: {report.witness}")
    table = {S: phi(canonical_context(moves, outcomes, S)).members for S in nonempty_subsets(outcomes)}
    try:
        f = ChoiceFunction.from_table(outcomes, table, name=f"reconstructed[{phi.name}]")
    except InvalidChoiceFunction as exc:
        raise PreconditionViolated(f"{phi.name} is context-independent but not a choice: {exc}") from exc
    for p in enumerate_contexts(moves, outcomes, budget):
        if phi(p) != f(image(p)):
            raise ReconstructionMismatch(f"phi and f . Im disagree on {p!r}")
    return f
