"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: invalid or non-rational input is 2,
a resource bound is 3, and an internal cross-check failure is 1.
"""


class RatcircError(Exception):
    """Base class for all package-specific errors."""


class NotRationalError(RatcircError):
    """An operation that requires a rational (trace-closed) input got one that is not."""


class BoundExceededError(RatcircError):
    """A configured resource bound (degree, divisor count, oracle size) was exceeded."""


class InternalConsistencyError(RatcircError):
    """Two independent computations of the same quantity disagreed.

    This is never expected to happen; it indicates a bug, not bad input.
    """
