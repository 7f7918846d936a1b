"""Exception hierarchy shared by every module."""


class PElasticaError(Exception):
    """Base class for all library errors."""


class DomainError(PElasticaError, ValueError):
    """An argument lies outside the admissible domain of an operation."""


class ToleranceError(PElasticaError, ArithmeticError):
    """An iterative scheme failed to reach its requested tolerance."""


class AmbiguityError(PElasticaError, ValueError):
    """The supplied data do not determine a unique answer without a hint."""


class FitError(PElasticaError, ArithmeticError):
    """A regression on probe samples could not be carried out."""
