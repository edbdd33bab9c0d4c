from ..utils import CdadtException


class OracleException(CdadtException):
    """Base class for exceptions in this module."""

    pass
