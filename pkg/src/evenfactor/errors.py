"""Exceptions shared across modules."""


class ScaleError(RuntimeError):
    """An exhaustive enumeration was requested beyond its configured cap."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before deciding; distinct from absence."""
