"""Exception types raised by the library.

Validation problems (bad shapes, non-Hermitian input, mismatched
dimensions) derive from :class:`ValidationError`; parameter-domain
violations such as ``alpha == 1`` derive from :class:`DomainError`.
The CLI maps these to exit codes 2 and 3 respectively.
"""


class MagicJSDError(Exception):
    pass


class ValidationError(MagicJSDError, ValueError):
    pass


class DomainError(MagicJSDError, ValueError):
    pass


class NonHermitian(ValidationError):
    pass


class InvalidState(ValidationError):
    pass


class DimMismatch(ValidationError):
    pass


class BadRank(ValidationError):
    pass


class NonUnitary(ValidationError):
    pass


class Unsupported(ValidationError):
    pass


class DegenerateKernel(MagicJSDError, ArithmeticError):
    """Raised when Tr(rho^a sigma^(1-a)) underflows to (numerically) zero."""
