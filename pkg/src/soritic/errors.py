"""Exception types shared across the package."""

from __future__ import annotations


class SoriticError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SoriticError, ValueError):
    """Malformed arguments, scenarios, or data files."""


class BudgetError(SoriticError, RuntimeError):
    """An enumeration would exceed the caller-supplied budget cap."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration requires {required} covers, exceeding the cap of {cap}"
        )


class NoChainError(SoriticError):
    """The supplied cover admits no vicinity chain between the endpoints.

    Raised when a claimed-tolerant cover turns out to disconnect the pair,
    refuting the connectedness claim relative to that cover.  The optional
    ``globally_connected`` flag records whether the pair is connected once
    all covers are considered (None when that check was not requested).
    """

    def __init__(self, x, y, globally_connected: bool | None = None):
        self.x = x
        self.y = y
        self.globally_connected = globally_connected
        super().__init__(f"the given cover admits no chain from {x!r} to {y!r}")


class StaleReportError(SoriticError):
    """A tolerance report does not match the system it is used against."""


class InternalInconsistencyError(SoriticError):
    """A result that is provably impossible was about to be produced."""
