"""Tolerances shared by the numerical kernels.

Values are read at call time, so `configure_tolerances` takes effect for
every later call. `override_tolerances` sets them for one block only.
"""

import logging
from contextlib import contextmanager

from .numerics_exception import NumericsException

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
SPD_REL_TOL = 1e-12


def configure_tolerances(config):
    """Set the module tolerances from the ``[numerics]`` section of a config."""
    global SYMMETRY_TOL, SPD_REL_TOL

    SYMMETRY_TOL = config.getfloat("numerics", "symmetry_tol", fallback=SYMMETRY_TOL)
    SPD_REL_TOL = config.getfloat("numerics", "spd_rel_tol", fallback=SPD_REL_TOL)
    logger.debug(
        f"configure_tolerances: symmetry_tol={SYMMETRY_TOL}, spd_rel_tol={SPD_REL_TOL}"
    )


@contextmanager
def override_tolerances(symmetry_tol=None, spd_rel_tol=None):
    """Use the given tolerances inside a ``with`` block and restore the previous ones after.

    ``None`` keeps the current value.
    """
    global SYMMETRY_TOL, SPD_REL_TOL

    saved = SYMMETRY_TOL, SPD_REL_TOL
    try:
        values = (
            saved[0] if symmetry_tol is None else float(symmetry_tol),
            saved[1] if spd_rel_tol is None else float(spd_rel_tol),
        )
    except (TypeError, ValueError) as e:
        raise NumericsException(f"invalid tolerance: {e}")
    SYMMETRY_TOL, SPD_REL_TOL = values
    try:
        yield
    finally:
        SYMMETRY_TOL, SPD_REL_TOL = saved
