"""Exception hierarchy.

``NumericalFailure`` groups the conditions that map to CLI exit code 2
(an algorithm broke down on valid input); everything else signals a bad
request and maps to exit code 1.
"""


class MatFrechetError(Exception):
    """Base class for all package errors."""


class NumericalFailure(MatFrechetError):
    """An algorithm failed on numerically hostile but well-formed input."""


class SingularMatrixError(NumericalFailure):
    """A pivot fell below the breakdown threshold during factorization."""


class SingularResolventError(NumericalFailure):
    """A quadrature node produced a numerically singular shifted matrix."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class NonConvergenceError(NumericalFailure):
    """An iteration exhausted its budget without meeting its tolerance."""


class MatrixOverflowError(NumericalFailure):
    """Matrix norm too large to scale within the floating-point range."""


class MultipleMinEigenvalueError(NumericalFailure):
    """Smallest eigenvalue not simple; the exact level-2 formula degrades
    to a lower bound and is reported as an error instead of a value."""


class DimensionMismatchError(MatFrechetError):
    pass


class OrderTooLargeError(MatFrechetError):
    pass


class SizeCapExceededError(MatFrechetError):
    pass


class IncompatibleRuleError(MatFrechetError):
    pass


class UnknownFunctionError(MatFrechetError):
    pass


class UnsupportedClassError(MatFrechetError):
    pass


class NotHermitianError(MatFrechetError):
    pass


class NotHPDError(MatFrechetError):
    pass


class SpectrumDomainError(MatFrechetError):
    pass


class ComplexInputError(MatFrechetError):
    pass


class BadParamsError(MatFrechetError):
    pass


class ParseError(MatFrechetError):
    """Matrix Market parse failure; carries the 1-based offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedFieldError(MatFrechetError):
    pass
