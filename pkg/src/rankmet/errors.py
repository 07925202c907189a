"""Exception types shared across the package."""


class RankmetError(Exception):
    """Base class for all package errors."""


class ValidationError(RankmetError, ValueError):
    """Bad input: failed preconditions, malformed literals, invalid parameters."""


class BudgetError(RankmetError, RuntimeError):
    """An enumeration or size budget would be exceeded; nothing was computed."""


class InternalError(RankmetError, RuntimeError):
    """A self-check that can only fail on an implementation bug."""
