# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .oracle_exception import OracleException
from .cca_solution import CcaSolution, solve_cca_centralized, penalty_descent
from .finite_diff import fd_gradient

__all__ = [
    "OracleException",
    "CcaSolution",
    "solve_cca_centralized",
    "penalty_descent",
    "fd_gradient",
]
