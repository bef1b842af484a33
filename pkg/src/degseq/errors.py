"""Exception types raised by the public API."""


class DegseqError(ValueError):
    """Base class for all degseq errors."""


class NotMonotoneError(DegseqError):
    """Input sequence is not non-increasing."""


class OutOfBoundsError(DegseqError):
    """Some element lies outside [0, n - 1]."""


class LengthMismatchError(DegseqError):
    """Declared length does not match the data."""


class UnknownAlgorithmError(DegseqError):
    """Algorithm name not recognized by the dispatcher."""


class BadBoundsError(DegseqError):
    """Lower bound exceeds upper bound."""


class BadKError(DegseqError):
    """Distinct-value count k outside [1, min(n, m)]."""


class BadJError(DegseqError):
    """Block index j outside [1, n]."""


class IncompleteTableError(DegseqError):
    """A required table entry is missing."""


class EmptyConditionError(DegseqError):
    """Conditional expectation over an empty event."""


class MixedReportsError(DegseqError):
    """Aggregation over reports with differing parameters."""


class BudgetExceededError(DegseqError):
    """Requested enumeration exceeds the configured budget."""
