"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DecisionError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DecisionError, ValueError):
    """A value failed a construction-time or evaluation-time precondition."""


class EmptyDomain(ValidationError):
    pass


class DuplicateElement(ValidationError):
    def __init__(self, element, message=None):
        self.element = element
        super().__init__(message or f"duplicate element {element!r}")


class UnknownElement(ValidationError):
    def __init__(self, element, message=None):
        self.element = element
        super().__init__(message or f"{element!r} is not in the ground set")


class UnknownMove(UnknownElement):
    def __init__(self, move):
        super().__init__(move, f"unknown move {move!r}")


class UnknownOutcome(UnknownElement):
    def __init__(self, outcome):
        super().__init__(outcome, f"unknown outcome {outcome!r}")


class MissingMove(ValidationError):
    def __init__(self, move):
        self.move = move
        super().__init__(f"context assigns no outcome to move {move!r}")


class DuplicateMove(DuplicateElement):
    def __init__(self, move):
        super().__init__(move, f"move {move!r} is assigned more than once")


class MixedOutcomeKinds(ValidationError):
    pass


class SignatureMismatch(ValidationError):
    pass


class GroundMismatch(ValidationError):
    pass


class NonNumericOutcomes(ValidationError):
    pass


class AntisymmetryViolation(ValidationError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        shown = " >= ".join(repr(c) for c in self.cycle + self.cycle[:1])
        super().__init__(f"order is not antisymmetric: cycle {shown}")


class InvalidChoiceFunction(ValidationError):
    pass


class IncompleteTable(ValidationError):
    pass


class NegativeRadius(ValidationError):
    pass


class EmptyPermissibleSet(ValidationError):
    pass


PermissibleSetEmpty = EmptyPermissibleSet


class DomainCodomainMismatch(ValidationError):
    pass


class NonBinaryCandidates(ValidationError):
    pass


class IncompleteOthers(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class BudgetExceeded(DecisionError):
    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__(f"enumeration needs {count} contexts, budget is {budget}")


class NonTotalSelection(DecisionError):
    def __init__(self, context):
        self.context = context
        super().__init__(f"selection function is empty on context {context!r}")


class NotAttainable(DecisionError):
    def __init__(self, report):
        self.report = report
        super().__init__("quantifier is not attainable")


class PreconditionViolated(DecisionError):
    pass


class ReconstructionMismatch(DecisionError):
    pass
