"""Finite domains, contexts and the evaluable quantifier/selection types.

Outcome values come in three shapes:

* symbols: ``str`` atoms, or tuples containing any non-rational part
  (used for product outcomes such as meeting places ``("A", "B")``);
* scalars: :class:`fractions.Fraction`;
* vectors: tuples of :class:`~fractions.Fraction`.

``int`` inputs are promoted to ``Fraction``; floats are rejected so that
every comparison is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateElement,
    DuplicateMove,
    EmptyDomain,
    IncompleteTable,
    MissingMove,
    MixedOutcomeKinds,
    SignatureMismatch,
    UnknownElement,
    UnknownMove,
    UnknownOutcome,
)

SYMBOL = "symbol"
SCALAR = "scalar"
VECTOR = "vector"


def as_value(value):
    """Normalise a move or outcome to its canonical exact representation."""
    if isinstance(value, bool):
        raise TypeError("booleans are not valid moves or outcomes")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"floating-point value {value!r} rejected; use Fraction or 'n/d'")
    if isinstance(value, str):
        return value
    if isinstance(value, (tuple, list)):
        return tuple(as_value(v) for v in value)
    if isinstance(value, Hashable):
        return value
    raise TypeError(f"unhashable value {value!r}")


def as_rational(value) -> Fraction:
    """Exact rational from an int, Fraction or ``"n/d"`` string; floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"{value!r} is not an exact rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"{value!r} is not a rational") from None
    raise TypeError(f"{value!r} is not an exact rational")


def value_kind(value) -> str:
    if isinstance(value, Fraction):
        return SCALAR
    if isinstance(value, tuple) and value and all(isinstance(v, Fraction) for v in value):
        return VECTOR
    return SYMBOL


class FiniteDomain:
    """An ordered set of distinct moves or outcomes.

    The construction order is the canonical order for every emitted set.
    """

    __slots__ = ("elements", "_index", "kind", "dimension")

    def __init__(self, elements: Iterable, *, allow_empty: bool = False):
        elems = tuple(as_value(e) for e in elements)
        if not elems and not allow_empty:
            raise EmptyDomain("a domain of moves or outcomes must be nonempty")
        index = {}
        for i, e in enumerate(elems):
            if e in index:
                raise DuplicateElement(e)
            index[e] = i
        kinds = {value_kind(e) for e in elems}
        if len(kinds) > 1:
            raise MixedOutcomeKinds(f"elements mix kinds {sorted(kinds)}")
        kind = kinds.pop() if kinds else SYMBOL
        dimension = None
        if kind == VECTOR:
            lengths = {len(e) for e in elems}
            if len(lengths) > 1:
                raise MixedOutcomeKinds(f"vectors of different lengths {sorted(lengths)}")
            dimension = lengths.pop()
        self.elements = elems
        self._index = index
        self.kind = kind
        self.dimension = dimension

    def index(self, element) -> int:
        try:
            return self._index[element]
        except (KeyError, TypeError):
            raise UnknownElement(element) from None

    def __contains__(self, element) -> bool:
        try:
            return element in self._index
        except TypeError:
            return False

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteDomain) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FiniteDomain({list(self.elements)!r})"

    def subset(self, members: Iterable) -> "Subset":
        return Subset(self, members)


def domain(elements) -> FiniteDomain:
    return elements if isinstance(elements, FiniteDomain) else FiniteDomain(elements)


class Subset:
    """An extensional subset of a ground domain, kept in ground order."""

    __slots__ = ("ground", "members", "_set")

    def __init__(self, ground: FiniteDomain, members: Iterable = ()):
        picked = set()
        for m in members:
            m = as_value(m)
            if m not in ground:
                raise UnknownElement(m)
            picked.add(m)
        self.ground = ground
        self.members = tuple(e for e in ground.elements if e in picked)
        self._set = frozenset(self.members)

    def __contains__(self, element) -> bool:
        try:
            return element in self._set
        except TypeError:
            return False

    def __iter__(self) -> Iterator:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subset)
            and self.ground == other.ground
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.members))

    def __le__(self, other) -> bool:
        return self._set <= set(other)

    def as_frozenset(self) -> frozenset:
        return self._set

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self.members)) + "}"


class Context:
    """A total map from moves to outcomes, stored as a value tuple in move order."""

    __slots__ = ("domain", "codomain", "values")

    def __init__(self, domain: FiniteDomain, codomain: FiniteDomain, values: Sequence):
        # Unchecked: use make_context() for validated construction.
        self.domain = domain
        self.codomain = codomain
        self.values = tuple(values)

    def __call__(self, move):
        try:
            return self.values[self.domain.index(move)]
        except UnknownElement:
            raise UnknownMove(move) from None

    def items(self) -> Iterator[tuple]:
        return zip(self.domain.elements, self.values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Context)
            and self.values == other.values
            and self.domain == other.domain
            and self.codomain == other.codomain
        )

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        body = ", ".join(f"{x}->{r}" for x, r in self.items())
        return f"Context({{{body}}})"

    @classmethod
    def from_function(cls, moves, outcomes, fn: Callable) -> "Context":
        moves, outcomes = domain(moves), domain(outcomes)
        return make_context(moves, outcomes, [(x, fn(x)) for x in moves])


def make_context(moves, outcomes, assignment) -> Context:
    """Validated context construction from ``(move, outcome)`` pairs or a mapping."""
    moves, outcomes = domain(moves), domain(outcomes)
    if isinstance(assignment, Mapping):
        assignment = assignment.items()
    seen = {}
    for move, value in assignment:
        move, value = as_value(move), as_value(value)
        if move not in moves:
            raise UnknownMove(move)
        if move in seen:
            raise DuplicateMove(move)
        if value not in outcomes:
            raise UnknownOutcome(value)
        seen[move] = value
    for move in moves:
        if move not in seen:
            raise MissingMove(move)
    return Context(moves, outcomes, [seen[x] for x in moves])


def iter_contexts(moves: FiniteDomain, outcomes: FiniteDomain) -> Iterator[Context]:
    """All contexts in mixed-radix order; the last move varies fastest. Unbudgeted."""
    for values in itertools.product(outcomes.elements, repeat=len(moves)):
        yield Context(moves, outcomes, values)


def image(p: Context) -> Subset:
    return Subset(p.codomain, p.values)


def preimage_count(p: Context, r) -> int:
    r = as_value(r)
    if r not in p.codomain:
        raise UnknownOutcome(r)
    return sum(1 for v in p.values if v == r)


class _HigherOrder:
    """Shared machinery for quantifiers and selection functions.

    ``rule`` maps a context to an iterable of result elements.  When
    ``moves``/``outcomes`` are given the operator is tied to that
    signature and rejects other contexts.
    """

    __slots__ = ("name", "rule", "moves", "outcomes")

    def __init__(self, name: str, rule: Callable, *, moves=None, outcomes=None):
        self.name = name
        self.rule = rule
        self.moves = None if moves is None else domain(moves)
        self.outcomes = None if outcomes is None else domain(outcomes)

    def _check(self, p: Context) -> None:
        if self.moves is not None and p.domain != self.moves:
            raise SignatureMismatch(
                f"{self.name} is defined over moves {list(self.moves)}, got {list(p.domain)}"
            )
        if self.outcomes is not None and p.codomain != self.outcomes:
            raise SignatureMismatch(
                f"{self.name} is defined over outcomes {list(self.outcomes)}, got {list(p.codomain)}"
            )

    def _ground(self, p: Context) -> FiniteDomain:
        raise NotImplementedError

    def __call__(self, p: Context) -> Subset:
        self._check(p)
        result = self.rule(p)
        ground = self._ground(p)
        if isinstance(result, Subset) and result.ground == ground:
            return result
        return Subset(ground, result)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class Quantifier(_HigherOrder):
    """A map from contexts to sets of outcomes."""

    __slots__ = ()

    def _ground(self, p):
        return p.codomain


class SelectionFunction(_HigherOrder):
    """A map from contexts to sets of moves."""

    __slots__ = ()

    def _ground(self, p):
        return p.domain


def eval_quantifier(phi: Quantifier, p: Context) -> Subset:
    return phi(p)


def eval_selection(epsilon: SelectionFunction, p: Context) -> Subset:
    return epsilon(p)


def _tabulate(moves, outcomes, table, ground_of) -> dict:
    moves, outcomes = domain(moves), domain(outcomes)
    stored = {}
    for key, value in (table.items() if isinstance(table, Mapping) else table):
        values = key.values if isinstance(key, Context) else tuple(as_value(v) for v in key)
        if len(values) != len(moves) or any(v not in outcomes for v in values):
            raise IncompleteTable(f"table key {key!r} is not a context over the declared signature")
        ground = moves if ground_of == "moves" else outcomes
        stored[values] = Subset(ground, value)
    missing = len(outcomes) ** len(moves) - len(stored)
    if missing:
        raise IncompleteTable(f"table is missing {missing} of {len(outcomes) ** len(moves)} contexts")
    return stored


def table_quantifier(moves, outcomes, table, name: str = "table") -> Quantifier:
    """A quantifier given by an explicit output for every context over ``(moves, outcomes)``.

    ``table`` maps contexts (or value tuples in move order) to outcome sets.
    """
    moves, outcomes = domain(moves), domain(outcomes)
    stored = _tabulate(moves, outcomes, table, "outcomes")
    return Quantifier(name, lambda p: stored[p.values], moves=moves, outcomes=outcomes)


def table_selection(moves, outcomes, table, name: str = "table") -> SelectionFunction:
    moves, outcomes = domain(moves), domain(outcomes)
    stored = _tabulate(moves, outcomes, table, "moves")
    return SelectionFunction(name, lambda p: stored[p.values], moves=moves, outcomes=outcomes)
