"""Exception types shared across the package."""


class GraphCertError(Exception):
    """Base class for all package errors."""


class InvalidArgument(GraphCertError, ValueError):
    """An operation's precondition or a statement's hypothesis failed."""


class NoSuchFan(GraphCertError):
    """A requested path fan does not exist.

    ``which`` names the precondition that failed: ``"required"`` when the
    pinned targets cannot all be reached independently, ``"size"`` when fewer
    than the requested number of independent paths exist.
    """

    def __init__(self, which, message):
        super().__init__(message)
        self.which = which


class AssemblyError(GraphCertError):
    """Path fragments could not be assembled into a valid subdivision."""


class BudgetExhausted(GraphCertError):
    """A bounded search ran out of nodes, time, or was cancelled."""


class InternalConsistencyError(GraphCertError, AssertionError):
    """A certificate failed re-validation or a guaranteed outcome did not occur.

    Raised only when the code disagrees with a proved dichotomy, so it always
    indicates a bug rather than bad input.
    """
