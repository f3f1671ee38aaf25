"""Partial orders on outcomes, choice functions, and the quantifiers they induce."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Mapping

from .core import (
    SCALAR,
    FiniteDomain,
    Quantifier,
    SelectionFunction,
    Subset,
    as_value,
    domain,
    image,
)
from .errors import (
    AntisymmetryViolation,
    GroundMismatch,
    IncompleteTable,
    InvalidChoiceFunction,
    NonNumericOutcomes,
    UnknownOutcome,
)


class PartialOrder:
    """A reflexive, transitive, antisymmetric relation ``a >= b`` on a finite ground."""

    __slots__ = ("ground", "matrix")

    def __init__(self, ground: FiniteDomain, matrix):
        # Unchecked: use make_partial_order() or PartialOrder.numeric().
        self.ground = ground
        self.matrix = tuple(tuple(bool(c) for c in row) for row in matrix)

    def geq(self, a, b) -> bool:
        return self.matrix[self.ground.index(a)][self.ground.index(b)]

    def gt(self, a, b) -> bool:
        return a != b and self.geq(a, b)

    def strict_pairs(self) -> list[tuple]:
        g = self.ground.elements
        n = len(g)
        return [(g[i], g[j]) for i in range(n) for j in range(n) if i != j and self.matrix[i][j]]

    def is_total(self) -> bool:
        n = len(self.ground)
        return all(self.matrix[i][j] or self.matrix[j][i] for i in range(n) for j in range(n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialOrder)
            and self.ground == other.ground
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.matrix))

    def __repr__(self) -> str:
        shown = ", ".join(f"{a}>{b}" for a, b in self.strict_pairs())
        return f"PartialOrder({shown or 'discrete'})"

    @classmethod
    def numeric(cls, ground) -> "PartialOrder":
        """The usual ``>=`` on a scalar ground set."""
        ground = domain(ground)
        if ground.kind != SCALAR:
            raise NonNumericOutcomes("numeric order needs scalar outcomes")
        g = ground.elements
        return cls(ground, [[a >= b for b in g] for a in g])


def _find_cycle(ground: FiniteDomain, pairs, a, b) -> list:
    succ = {}
    for x, y in pairs:
        succ.setdefault(x, []).append(y)

    def path(src, dst):
        prev = {src: None}
        queue = deque([src])
        while queue:
            node = queue.popleft()
            if node == dst:
                out = []
                while node is not None:
                    out.append(node)
                    node = prev[node]
                return out[::-1]
            for nxt in succ.get(node, ()):
                if nxt not in prev:
                    prev[nxt] = node
                    queue.append(nxt)
        return [src, dst]

    return path(a, b)[:-1] + path(b, a)[:-1]


def make_partial_order(ground, pairs: Iterable[tuple]) -> PartialOrder:
    """Reflexive-transitive closure of ``pairs`` (each ``(a, b)`` meaning a >= b)."""
    ground = domain(ground)
    n = len(ground)
    m = [[i == j for j in range(n)] for i in range(n)]
    clean = []
    for a, b in pairs:
        a, b = as_value(a), as_value(b)
        for v in (a, b):
            if v not in ground:
                raise UnknownOutcome(v)
        clean.append((a, b))
        m[ground.index(a)][ground.index(b)] = True
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                row_k = m[k]
                row_i = m[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] and m[j][i]:
                a, b = ground.elements[i], ground.elements[j]
                raise AntisymmetryViolation(_find_cycle(ground, clean, a, b))
    return PartialOrder(ground, m)


def _as_subset(S, ground: FiniteDomain) -> Subset:
    if isinstance(S, Subset):
        if S.ground != ground:
            raise GroundMismatch(f"set over {list(S.ground)} used with order over {list(ground)}")
        return S
    return Subset(ground, S)


def maximal_elements(S, order: PartialOrder) -> Subset:
    S = _as_subset(S, order.ground)
    return Subset(order.ground, [s for s in S if not any(order.gt(t, s) for t in S)])


def sub_maximal_elements(S, order: PartialOrder) -> Subset:
    """Second elements of the maximal strict chains inside ``S``.

    A maximal chain starts at a maximal element of ``S`` and its next element
    is covered by that top inside ``S``, so the result is the union of the
    lower covers of the maximal elements.  Empty when ``S`` has a single value.
    """
    S = _as_subset(S, order.ground)
    out = []
    for top in maximal_elements(S, order):
        below = [s for s in S if order.gt(top, s)]
        for s in below:
            if not any(order.gt(top, t) and order.gt(t, s) for t in below):
                out.append(s)
    return Subset(order.ground, out)


def nonempty_subsets(ground: FiniteDomain) -> list[tuple]:
    """All nonempty subsets as ground-ordered tuples, by size then ground order."""
    g = ground.elements
    return [c for k in range(1, len(g) + 1) for c in itertools.combinations(g, k)]


class ChoiceFunction:
    """A map ``S -> f(S)`` on nonempty subsets of a ground with ``f(S)`` nonempty and ``⊆ S``."""

    __slots__ = ("ground", "name", "rule")

    def __init__(self, ground: FiniteDomain, rule: Callable, name: str = "choice"):
        self.ground = ground
        self.rule = rule
        self.name = name

    def __call__(self, S) -> Subset:
        S = _as_subset(S, self.ground)
        result = self.rule(S)
        return result if isinstance(result, Subset) else Subset(self.ground, result)

    def table(self) -> dict[frozenset, frozenset]:
        return {frozenset(S): self(S).as_frozenset() for S in nonempty_subsets(self.ground)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChoiceFunction)
            and self.ground == other.ground
            and self.table() == other.table()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ChoiceFunction({self.name!r})"

    @classmethod
    def from_order(cls, order: PartialOrder) -> "ChoiceFunction":
        return cls(order.ground, lambda S: maximal_elements(S, order), name="maximal-elements")

    @classmethod
    def from_table(cls, ground, table: Mapping, name: str = "table") -> "ChoiceFunction":
        ground = domain(ground)
        stored = {}
        for key, value in table.items():
            S = Subset(ground, key)
            f_S = Subset(ground, value)
            if not S:
                continue
            if not f_S.as_frozenset() <= S.as_frozenset():
                raise InvalidChoiceFunction(f"f({S!r}) = {f_S!r} is not a subset of its argument")
            if not f_S:
                raise InvalidChoiceFunction(f"f({S!r}) is empty")
            stored[S.as_frozenset()] = f_S
        missing = [S for S in nonempty_subsets(ground) if frozenset(S) not in stored]
        if missing:
            raise IncompleteTable(f"choice table undefined on {len(missing)} subsets, e.g. {set(missing[0])}")
        return cls(ground, lambda S: stored[S.as_frozenset()], name=name)


def choice_quantifier(f: ChoiceFunction) -> Quantifier:
    """The quantifier ``p -> f(Im(p))``."""
    return Quantifier(f"choice[{f.name}]", lambda p: f(image(p)), outcomes=f.ground)


def order_max_quantifier(order: PartialOrder) -> Quantifier:
    q = choice_quantifier(ChoiceFunction.from_order(order))
    q.name = "order-max"
    return q


def order_selection(order: PartialOrder) -> SelectionFunction:
    """Moves whose outcome is not strictly beaten by any attained outcome."""

    def rule(p):
        attained = image(p)
        return [x for x, r in p.items() if not any(order.gt(s, r) for s in attained)]

    return SelectionFunction("order-selection", rule, outcomes=order.ground)


def _require_scalar(p, who: str) -> None:
    if p.codomain.kind != SCALAR:
        raise NonNumericOutcomes(f"{who} needs scalar outcomes, got {p.codomain.kind}")


def max_quantifier_numeric() -> Quantifier:
    def rule(p):
        _require_scalar(p, "max")
        return [max(p.values)]

    return Quantifier("max", rule)


def argmax_selection_numeric() -> SelectionFunction:
    def rule(p):
        _require_scalar(p, "argmax")
        top = max(p.values)
        return [x for x, r in p.items() if r == top]

    return SelectionFunction("argmax", rule)
