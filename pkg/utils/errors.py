"""
Exception hierarchy for the UECSM toolkit.
"""
from typing import Optional


class UECSMError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatch(UECSMError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class NonSquareMatrix(DimensionMismatch):
    """A matrix was expected to be square."""


class NonFiniteEntries(UECSMError, ValueError):
    """A matrix or vector holds NaN or infinite entries."""


class NotHermitian(UECSMError, ValueError):
    """The input to a Hermitian routine is not Hermitian within tolerance."""


class NotSkewHermitian(UECSMError, ValueError):
    """The input to the skew-Hermitian exponential is not skew-Hermitian."""


class NoConvergence(UECSMError, ArithmeticError):
    """The Jacobi sweep cap was reached with too much off-diagonal mass left."""


class PreconditionViolated(UECSMError):
    """A certificate routine was called on input that does not meet its precondition."""


class NotSharedEigenvector(PreconditionViolated):
    """The supplied vector is not a common eigenvector of A and B."""


class CannotMakeProper(UECSMError):
    """No zero-free pivot row and column exist in the overlap matrix."""


class ZeroDenominator(UECSMError, ArithmeticError):
    """A first-row or first-column overlap entry vanished in the ratio test."""


class RankOutOfRange(UECSMError, ValueError):
    """A requested partial-isometry rank lies outside 0..n."""


class ConfigError(UECSMError, ValueError):
    """A configuration file or override is invalid."""


class UsageError(UECSMError):
    """The command line could not be understood."""


class ParseError(UECSMError, ValueError):
    """
    A matrix document could not be parsed.

    The line and column are 1-based and point at the offending character.
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        """
        Initialize the parse error.

        Args:
            message: What went wrong
            line: 1-based line of the offending text
            column: 1-based column of the offending text
        """
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
