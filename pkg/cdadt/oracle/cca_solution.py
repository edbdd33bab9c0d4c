import logging
from dataclasses import dataclass

import numpy as np

from ..engine import epsilon_stationarity, penalty_grad
from ..numerics import fro_norm, spd_inv_sqrt, sym, sym_eig
from ..problem import CcaComponent
from .oracle_exception import OracleException

logger = logging.getLogger(__name__)

EIGEN_GAP_TOL = 1e-10


@dataclass(frozen=True)
class CcaSolution:
    """Centralized CCA optimum.

    ``X_star`` satisfies ``X_star^T M X_star = I`` and
    ``objective_star = -sum(top_eigvals) / 2``. ``X_star`` is unique only
    up to a right orthogonal factor, so compare objectives, not entries.
    """

    X_star: np.ndarray
    objective_star: float
    top_eigvals: np.ndarray


def solve_cca_centralized(problem, p=None):
    """Solve the CCA problem through ``T = M^(-1/2) Sigma M^(-1/2)``.

    The top ``p`` eigenvectors ``v_j`` of ``T`` give
    ``X_star = M^(-1/2) [v_1 ... v_p]``. A warning is logged when the
    ``p``-th and ``(p+1)``-th eigenvalues coincide, since the optimal
    subspace is then not unique.

    Parameters
    ----------
    problem : `~cdadt.problem.Problem`
        Built from `~cdadt.problem.CcaComponent` instances.
    p : `int`, optional
        Number of directions. Defaults to ``problem.p``.

    Returns
    -------
    `CcaSolution`

    Raises
    ------
    `~cdadt.oracle.OracleException`
        If a component is not a CCA component or ``p`` is out of range.
    """
    p = problem.p if p is None else p
    if not 1 <= p <= problem.n:
        raise OracleException(f"p must satisfy 1 <= p <= {problem.n}, got {p}")

    Sigma = np.zeros((problem.n, problem.n))
    for i, comp in enumerate(problem.components):
        if not isinstance(comp, CcaComponent):
            raise OracleException(f"component {i} is not a CCA component")
        Sigma = Sigma + comp.Sigma

    M_inv_sqrt = spd_inv_sqrt(problem.M)
    T = sym(M_inv_sqrt @ sym(Sigma) @ M_inv_sqrt)
    eigvals, eigvecs = sym_eig(T)

    if p < eigvals.size and abs(eigvals[p - 1] - eigvals[p]) <= EIGEN_GAP_TOL:
        logger.warning(
            f"eigenvalues {p} and {p + 1} coincide ({eigvals[p - 1]:.12g}), "
            "the optimal subspace is not unique"
        )

    top = eigvals[:p].copy()
    X_star = M_inv_sqrt @ eigvecs[:, :p]
    objective_star = -0.5 * float(np.sum(top))
    logger.debug(f"solve_cca_centralized: p={p}, objective_star={objective_star:.12g}")
    return CcaSolution(X_star=X_star, objective_star=objective_star, top_eigvals=top)


def penalty_descent(problem, X0, beta, eta, tol=1e-8, max_iters=100000):
    """Gradient descent on the penalty function with its exact gradient.

    Iterates ``X <- X - eta grad h(X)`` until
    `~cdadt.engine.epsilon_stationarity` is at most ``tol``.

    Returns
    -------
    X : `numpy.ndarray`
    iterations : `int`

    Raises
    ------
    `~cdadt.oracle.OracleException`
        If the iterate becomes non-finite or ``max_iters`` is reached.
    """
    X = np.array(X0, dtype=np.float64)
    for k in range(max_iters + 1):
        if epsilon_stationarity(X, problem) <= tol:
            logger.debug(f"penalty_descent: converged after {k} iteration(s)")
            return X, k
        if k == max_iters:
            break
        X = X - eta * penalty_grad(X, problem, beta)
        if not np.all(np.isfinite(X)):
            raise OracleException(f"penalty descent diverged at iteration {k + 1}")

    raise OracleException(
        f"penalty descent did not reach {tol:.1e} in {max_iters} iterations "
        f"(gradient norm {fro_norm(penalty_grad(X, problem, beta)):.3e})"
    )
