import logging

import numpy as np
import pytest

from cdadt.network import metropolis_weights, ring
from cdadt.problem import CcaData, build_cca, synth_correlated, synth_factor, uniform_partition

CORRELATIONS = [0.9, 0.5]


@pytest.fixture(autouse=True)
def reset_cli_logging():
    yield
    package_logger = logging.getLogger("cdadt")
    for handler in list(package_logger.handlers):
        if getattr(handler, "_cdadt_cli", False):
            package_logger.removeHandler(handler)
    package_logger.setLevel(logging.INFO)


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)


@pytest.fixture()
def planted():
    """Whitened 3+3 view problem on 4 agents with canonical correlations 0.9, 0.5.

    With no ridge the optimal value for p = 2 is -(1.9 + 1.5) / 2.
    """
    A, B = synth_correlated(3, 3, 60, CORRELATIONS, seed=0)
    data = CcaData(A, B, uniform_partition(60, 4))
    return build_cca(data, regularizer=0.0, p=2)


@pytest.fixture()
def factor_problem():
    """Small decaying-spectrum problem, n = 8 + 6, q = 64, d = 4, p = 2."""
    A = synth_factor(8, 64, 0.9, seed=3)
    B = synth_factor(6, 64, 0.8, seed=4)
    data = CcaData(A, B, uniform_partition(64, 4))
    return build_cca(data, p=2)


@pytest.fixture()
def ring4():
    return metropolis_weights(ring(4))
