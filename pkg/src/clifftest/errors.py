"""Shared exception types."""

from __future__ import annotations


class BudgetExceededError(Exception):
    """An enumeration or dense computation exceeded its desk-scale guard.

    Attributes:
        guard: Human-readable description of the cap that fired,
            e.g. "enumerate_elements requires dim <= 24 (got 30)".
    """

    def __init__(self, guard: str):
        super().__init__(guard)
        self.guard = guard
