"""Exception types shared across the library.

Domain errors (bad inputs, inapplicable operations) derive from ValueError
where that is the natural builtin, so callers can catch either the precise
class or the generic one.  Internal errors signal bugs or blown safety caps
and should never be swallowed.
"""


class AmohError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZeroPoly(AmohError, ZeroDivisionError):
    """Polynomial or rational-function division by zero."""


class TrivialAlgebra(AmohError, ValueError):
    """Both generators are constants, so the subalgebra is just the scalars."""


class NotInSemigroup(AmohError):
    """A degree admits no representation over the generators."""


class BadDegree(AmohError, ValueError):
    """A requested inner degree does not divide the polynomial degree."""


class NotComposable(AmohError, ValueError):
    """No left cofactor exists for the given inner polynomial."""


class NotMonic(AmohError, ValueError):
    """An operation that requires monic nonconstant inputs got something else."""


class PreconditionViolated(AmohError, ValueError):
    """An argument is outside the documented range of the operation."""


class InternalLimitExceeded(AmohError):
    """A safety cap on completion work was hit.  Raise the cap or report a bug."""


class InternalInconsistency(AmohError):
    """Two independent decision routes disagreed.  Always a bug."""


class ParseError(AmohError, ValueError):
    """Rejected input text, with the offending position and the expected tokens."""

    def __init__(self, message: str, position: int, expected: tuple = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)
