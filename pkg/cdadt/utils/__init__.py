# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .cdadt_exception import CdadtException
from ._config import DEFAULT_CONFIG_PATH, read_config
from ._command import (
    EXIT_IO,
    EXIT_RUNTIME,
    EXIT_USAGE,
    CdadtCommand,
    CdadtGroup,
    IOFailure,
    RuntimeFailure,
    UsageFailure,
)

__all__ = [
    "CdadtException",
    "DEFAULT_CONFIG_PATH",
    "read_config",
    "CdadtCommand",
    "CdadtGroup",
    "IOFailure",
    "RuntimeFailure",
    "UsageFailure",
    "EXIT_IO",
    "EXIT_RUNTIME",
    "EXIT_USAGE",
]
