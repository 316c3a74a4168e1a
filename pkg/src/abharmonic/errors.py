"""Exception types shared across the package."""


class AbharmonicError(Exception):
    """Base class for all library errors."""


class DomainError(AbharmonicError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Gamma evaluated at zero or a negative integer."""


class NoConvergence(AbharmonicError, ArithmeticError):
    """A series or iteration hit its term cap before the stop rule fired."""


class DegenerateCoefficient(AbharmonicError, ValueError):
    """A series coefficient would require dividing a nonzero value by zero."""


class PreconditionFailed(AbharmonicError, ValueError):
    """Input data violates a structural precondition of the operation."""


class StepTooLarge(DomainError):
    """A finite-difference stencil would leave the open unit disc."""


class DegenerateFit(AbharmonicError, ValueError):
    """A least-squares fit was requested on data that is identically zero."""
