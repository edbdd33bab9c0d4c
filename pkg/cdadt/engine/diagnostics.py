import logging

import numpy as np

from ..numerics import fro_norm, project_gstiefel, riemannian_grad

logger = logging.getLogger(__name__)

METRIC_NAMES = ("stat_viol", "consensus_err", "feas_viol")


def feasibility_residual(X, M):
    """``||X^T M X - I||_F``."""
    return fro_norm(X.T @ M @ X - np.eye(X.shape[1]))


def epsilon_stationarity(X, problem):
    """Accuracy of ``X`` as an approximate solution of the constrained problem.

    Returns ``max(||grad f(P(X))||_F, ||X^T M X - I||_F)`` where ``P`` is
    the projection onto the constraint and ``grad f`` the Riemannian
    gradient.
    """
    Y = project_gstiefel(X, problem.M)
    grad = riemannian_grad(Y, problem.gradient(Y), problem.M)
    return max(fro_norm(grad), feasibility_residual(X, problem.M))


def reduces_stationarity(result):
    """Accept a probe run that converged or ended below its initial ``stat_viol``."""
    if result.converged:
        return True
    return result.logs[-1].stat_viol < result.logs[0].stat_viol


def merit_is_monotone(result, slack=1e-12):
    """Whether the recorded merit never increases by more than ``slack`` (relative).

    Runs without a recorded merit are rejected.
    """
    values = [entry.merit for entry in result.logs]
    if any(v is None for v in values):
        return False
    for prev, cur in zip(values, values[1:]):
        if cur > prev + slack * max(abs(prev), 1.0):
            return False
    return True


def iterations_to_threshold(logs, threshold, metrics=METRIC_NAMES):
    """First iteration at which all the named metrics are at or below ``threshold``.

    Returns ``None`` if the log never gets there.
    """
    for entry in logs:
        if all(getattr(entry, name) <= threshold for name in metrics):
            return entry.iter
    return None
