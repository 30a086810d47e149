"""Exception hierarchy shared across the package."""


class CompCountError(Exception):
    """Base class for every package-specific error."""


class DomainError(CompCountError, ValueError):
    """An argument lies outside an operation's domain."""


class NegativeUpperIndex(DomainError):
    """Binomial coefficient requested with a negative upper index.

    The closed forms implemented here never evaluate one inside their
    stated summation limits, so hitting this means an index bug.
    """


class GuardExceeded(CompCountError):
    """A brute-force input exceeds the configured safety guard.

    Oracles must never silently truncate: too-large inputs are refused.
    """


class IndexOutOfRange(CompCountError, IndexError):
    """A row/column index set refers outside the matrix."""


class AlphabetParseError(CompCountError, ValueError):
    """A textual alphabet spec could not be parsed."""


class UnsupportedClosedForm(CompCountError):
    """No closed-form evaluator exists for the requested alphabet."""
