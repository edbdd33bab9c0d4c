from ..utils import CdadtException


class NetworkException(CdadtException):
    """Base class for exceptions in this module."""

    pass


class TopologyError(NetworkException):
    """An edge list or generator argument does not describe a valid graph."""

    pass


class DisconnectedTopologyError(NetworkException):
    """A mixing matrix was requested for a disconnected graph."""

    pass


class TopologyGenerationError(NetworkException):
    """No connected random graph was drawn within the retry budget."""

    pass
