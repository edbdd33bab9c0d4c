import logging

import numpy as np

from ..numerics import DimensionError
from .problem_exception import ProblemBuildError

logger = logging.getLogger(__name__)


def synth_factor(n, q, xi, seed):
    """Random ``n x q`` factor with singular values ``xi, xi^2, ..., xi^n``.

    Returns ``U diag(xi^k) V^T`` with ``U`` a random orthogonal ``n x n``
    matrix and ``V`` a random ``q x n`` matrix with orthonormal columns.
    The result is a pure function of the arguments.

    Raises
    ------
    `~cdadt.problem.ProblemBuildError`
        If ``n < 1`` or ``xi`` is outside ``(0, 1)``.
    `~cdadt.numerics.DimensionError`
        If ``q < n``.
    """
    if n < 1:
        raise ProblemBuildError(f"n must be positive, got {n}")
    if q < n:
        raise DimensionError(f"q={q} must be at least n={n}")
    if not 0 < xi < 1:
        raise ProblemBuildError(f"xi must lie in (0, 1), got {xi}")

    rng = np.random.default_rng(seed)
    U, _ = np.linalg.qr(rng.standard_normal((n, n)))
    V, _ = np.linalg.qr(rng.standard_normal((q, n)))
    singular = xi ** np.arange(1, n + 1, dtype=np.float64)
    return (U * singular) @ V.T


def synth_correlated(n, m, q, correlations, seed):
    """Two views with whitened covariances and planted canonical correlations.

    The rows of ``A`` (``n x q``) and ``B`` (``m x q``) are built from one
    orthonormal family, with ``B_j = c_j A_j + sqrt(1 - c_j^2) W_j``, so
    that ``A A^T = I``, ``B B^T = I`` and ``A B^T = diag(c)``. The
    canonical correlations are the given ``c``, padded with zeros, and the
    optimal CCA value with ``p`` directions is
    ``-(sum of the p largest (1 + c_j)) / 2``.

    Raises
    ------
    `~cdadt.problem.ProblemBuildError`
        If ``n + m > q``, more than ``min(n, m)`` correlations are given,
        or a correlation lies outside ``[0, 1)``.
    """
    correlations = np.asarray(correlations, dtype=np.float64).ravel()
    if n < 1 or m < 1:
        raise ProblemBuildError(f"view sizes must be positive, got n={n}, m={m}")
    if n + m > q:
        raise ProblemBuildError(f"need n + m <= q, got n={n}, m={m}, q={q}")
    if correlations.size > min(n, m):
        raise ProblemBuildError(
            f"at most min(n, m)={min(n, m)} correlations, got {correlations.size}"
        )
    if np.any(correlations < 0) or np.any(correlations >= 1):
        raise ProblemBuildError("correlations must lie in [0, 1)")

    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.standard_normal((q, n + m)))
    A = Q[:, :n].T.copy()
    B = Q[:, n:].T.copy()
    for j, c in enumerate(correlations):
        B[j] = c * A[j] + np.sqrt(1.0 - c * c) * B[j]
    return A, B


def planted_optimum(correlations, n, m, p):
    """Optimal CCA value for data from `synth_correlated` with ridge zero."""
    c = np.zeros(min(n, m))
    c[: len(correlations)] = correlations
    eigvals = np.sort(np.concatenate([1 + c, 1 - c, np.ones(n + m - 2 * c.size)]))[::-1]
    return -0.5 * float(np.sum(eigvals[:p]))
