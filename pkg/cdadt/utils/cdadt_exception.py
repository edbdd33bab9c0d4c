from astropy.utils.exceptions import AstropyWarning


class CdadtException(AstropyWarning, Exception):
    """Base class for all exceptions in cdadt."""

    pass
