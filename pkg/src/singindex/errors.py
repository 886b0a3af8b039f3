"""Exception types shared across the library.

The distinction matters for callers (the CLI maps these onto its exit
codes): bad input data, hitting the configurable degree cap, and failing
to find generic linear forms are three different situations.
"""


class SingindexError(Exception):
    """Base class for all library errors."""


class RejectedInputError(SingindexError, ValueError):
    """Input violates a documented precondition (wrong shape, mixed
    variable contexts, non-symmetric matrix, inconsistent data, ...)."""


class NotIsolatedError(SingindexError):
    """A computation needed a finite colength but the ideal is not
    zero-dimensional, i.e. the singular point is not (algebraically)
    isolated."""


class DegreeCapError(SingindexError):
    """A basis computation exceeded the configured degree cap.

    The cap exists to abort pathological runs; it is not part of any
    correctness claim."""


class GenericityError(SingindexError):
    """Repeated draws of generic linear forms all failed to be generic."""


class InternalCheckError(SingindexError):
    """An internal consistency assertion failed.  Indicates a bug, not a
    user error; these should never occur on valid input."""
