from ..utils import CdadtException


class ProblemException(CdadtException):
    """Base class for exceptions in this module."""

    pass


class PartitionError(ProblemException):
    """A column partition does not cover the samples with positive blocks."""

    pass


class ProblemBuildError(ProblemException):
    """Local components are inconsistent or their M sum is not positive definite."""

    pass


class MatrixFileError(ProblemException):
    """A matrix file could not be read or written."""

    pass


class EmptyMatrixFileError(MatrixFileError):
    pass


class RaggedRowError(MatrixFileError):
    pass


class UnparseableCellError(MatrixFileError):
    pass


class NonFiniteEntryError(MatrixFileError):
    pass
