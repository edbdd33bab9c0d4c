import configparser
import logging
import os

from .cdadt_exception import CdadtException

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.abspath(
    os.path.join(os.path.dirname(__file__), "../config/cdadt.cfg")
)


def read_config(config_path=None):
    """Read the packaged defaults and overlay an optional user config file.

    Parameters
    ----------
    config_path : `str`, optional
        Path to a ``.cfg`` file using the sections of the packaged
        ``cdadt.cfg``. Keys it sets replace the packaged defaults.

    Returns
    -------
    `configparser.ConfigParser`

    Raises
    ------
    `~cdadt.utils.CdadtException`
        If the user file does not exist or cannot be parsed.
    """
    config = configparser.ConfigParser()
    config.read(DEFAULT_CONFIG_PATH)

    if config_path is not None:
        if not os.path.isfile(config_path):
            raise CdadtException("Config file '%s' does not exist" % config_path)
        logger.info("Using config file: %s" % config_path)
        try:
            config.read(config_path)
        except configparser.Error:
            raise CdadtException("Error parsing config file '%s'" % config_path)

    return config


def _get_list(config, section, option, type=float):
    """Split a comma-separated config value into a list of ``type``."""
    raw = config.get(section, option, fallback="")
    return [type(v.strip()) for v in raw.split(",") if v.strip() != ""]
