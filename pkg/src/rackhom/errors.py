"""Exception hierarchy for rackhom."""

from typing import Any, Optional


class RackhomError(Exception):
    """Base class for all errors raised by the library."""


class InputError(RackhomError, ValueError):
    """Malformed or out-of-range input (tables, tuples, files)."""


class AxiomFailure(RackhomError):
    """An axiom check failed; ``witness`` is the first offending instance.

    Args:
        message: Human-readable description.
        witness: The lexicographically first failing instance.
    """

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class UnsupportedOperation(RackhomError):
    """The operation's precondition on the shelf or coefficients does not hold."""


class ContractViolation(RackhomError, AssertionError):
    """An internal identity that must hold exactly did not."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitExceeded(RackhomError):
    """A computation would exceed the configured size cap."""

    def __init__(self, message: str, dimension: int):
        super().__init__(message)
        self.dimension = dimension
