from ..utils import CdadtException


class EngineException(CdadtException):
    """Base class for exceptions in this module."""

    pass


class ConfigError(EngineException):
    """A run configuration value is out of range."""

    pass


class DivergenceError(EngineException):
    """An iterate became non-finite.

    Attributes
    ----------
    iteration : `int`
        Iteration at which the non-finite value appeared.
    logs : `list` of `~cdadt.engine.IterationLog`
        Records of the iterations completed before divergence.
    """

    def __init__(self, message, iteration, logs=()):
        super().__init__(message)
        self.iteration = iteration
        self.logs = list(logs)


class LogFormatError(EngineException):
    """A per-iteration log file is missing columns or holds invalid values."""

    pass
