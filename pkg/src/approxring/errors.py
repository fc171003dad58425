"""Exception hierarchy shared by every module."""


class ApproxError(Exception):
    """Base class for all library errors."""


class DomainMismatchError(ApproxError, ValueError):
    """Arguments come from different descriptive spaces."""


class MembershipError(ApproxError, KeyError):
    """An element label or index is not part of the carrier."""

    def __str__(self):
        return Exception.__str__(self)


class DegenerateInputError(ApproxError, ValueError):
    """Empty or otherwise degenerate input where a definition needs content."""


class ContainmentError(ApproxError, ValueError):
    """A subset is not contained in the set it must live in."""


class AmbiguityError(ApproxError):
    """More than one candidate identity acts on the subset."""


class MissingZeroError(ApproxError):
    """No additive identity could be located in the upper approximation."""


class MissingUnityError(ApproxError):
    """No multiplicative identity could be located in the upper approximation."""


class StructureError(ApproxError):
    """A structural precondition (e.g. closure of the upper approximation) fails."""


class PreconditionError(ApproxError):
    """A checker's precondition fails; ``report`` holds the failing check if any."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAGridError(ApproxError, ValueError):
    """A grid rule was requested on a carrier without coordinates."""


class ClosureError(ApproxError, ValueError):
    """A named rule would produce an element outside the carrier."""


class TableError(ApproxError, ValueError):
    """An extensional operation table is incomplete, duplicated or unresolvable."""


class FixtureError(ApproxError, ValueError):
    """A fixture document fails validation."""


class BudgetError(ApproxError):
    """A requested enumeration exceeds its size limit."""
