from __future__ import annotations


class PrivwordError(Exception):
    """Base error for privword."""



class InvalidInputError(PrivwordError):
    """Raised when inputs violate domain constraints."""



class DomainError(InvalidInputError):
    """Raised when an analytic expression is evaluated outside its domain.

    level is the first iterated-logarithm level that became non-positive;
    threshold is the validity threshold N_j when one applies.
    """

    def __init__(self, message: str, *, level: int | None = None, threshold: int | None = None):
        super().__init__(message)
        self.level = level
        self.threshold = threshold



class BudgetExceededError(PrivwordError):
    """Raised when the estimated work of an exhaustive computation exceeds the budget."""

    def __init__(self, message: str, *, estimated: int, budget: int):
        super().__init__(f"{message} (estimated work {estimated}, budget {budget})")
        self.estimated = estimated
        self.budget = budget



class NotSupportedError(PrivwordError):
    """Raised when a suite/format name is unsupported."""
