"""Exception hierarchy shared by all qfht modules."""


class QfhtError(Exception):
    """Base class for every error raised by qfht."""


class DomainError(QfhtError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ConvergenceError(QfhtError, ArithmeticError):
    """A truncated series did not reach its tolerance within the term cap."""


class NumericalError(QfhtError, ArithmeticError):
    """A linear-algebra step (eigen-solve, Newton polish) failed."""


class RuleMismatchError(QfhtError, ValueError):
    """Two signals are sampled on different quadrature rules."""


class ConfigMismatchError(QfhtError, ValueError):
    """Two operators cannot be combined (different alpha or rule)."""


class ExactnessError(QfhtError, ValueError):
    """A series degree exceeds what a disc quadrature rule integrates exactly."""
