# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .numerics_exception import (
    NumericsException,
    DimensionError,
    ContractError,
    NonFiniteError,
    NotPositiveDefiniteError,
    RankDeficiencyError,
)
from . import tolerances
from .tolerances import configure_tolerances, override_tolerances
from .kernels import (
    as_mat,
    sym,
    fro_norm,
    spec_norm,
    sym_eig,
    spd_inv_sqrt,
    spd_solve,
    project_gstiefel,
    riemannian_grad,
)

__all__ = [
    "NumericsException",
    "DimensionError",
    "ContractError",
    "NonFiniteError",
    "NotPositiveDefiniteError",
    "RankDeficiencyError",
    "tolerances",
    "configure_tolerances",
    "override_tolerances",
    "as_mat",
    "sym",
    "fro_norm",
    "spec_norm",
    "sym_eig",
    "spd_inv_sqrt",
    "spd_solve",
    "project_gstiefel",
    "riemannian_grad",
]
