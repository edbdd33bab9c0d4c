from ..utils import CdadtException


class NumericsException(CdadtException):
    """Base class for exceptions in this module."""

    pass


class DimensionError(NumericsException):
    """Operand shapes are incompatible."""

    pass


class ContractError(NumericsException):
    """An input violates a documented precondition, e.g. it is not symmetric."""

    pass


class NonFiniteError(NumericsException):
    """An input contains NaN or infinite entries."""

    pass


class NotPositiveDefiniteError(NumericsException):
    """A matrix required to be symmetric positive definite is not."""

    pass


class RankDeficiencyError(NumericsException):
    """The M-Gram matrix of a point is singular, so it cannot be projected."""

    pass
