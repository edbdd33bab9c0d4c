import logging

import numpy as np

from . import tolerances
from .numerics_exception import (
    ContractError,
    DimensionError,
    NonFiniteError,
    NotPositiveDefiniteError,
    RankDeficiencyError,
)

logger = logging.getLogger(__name__)


def as_mat(B, name="matrix"):
    """Return ``B`` as a finite two-dimensional float64 array.

    Parameters
    ----------
    B : array_like
        Values to convert. Existing float64 arrays are not copied.
    name : `str`, optional
        Name used in error messages.

    Returns
    -------
    `numpy.ndarray`

    Raises
    ------
    `~cdadt.numerics.DimensionError`
        If ``B`` is not two-dimensional.
    `~cdadt.numerics.NonFiniteError`
        If ``B`` contains NaN or infinite entries.
    """
    arr = np.asarray(B, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains non-finite entries")
    return arr


def _require_square(B, name):
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {B.shape}")


def sym(B):
    """Symmetric part ``(B + B^T) / 2`` of a square matrix.

    The result is exactly symmetric since mirrored entries are computed
    from the same two operands.
    """
    B = np.asarray(B, dtype=np.float64)
    _require_square(B, "sym operand")
    return (B + B.T) / 2


def fro_norm(B):
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(B, dtype=np.float64)))


def spec_norm(B):
    """Spectral norm (largest singular value).

    Symmetric input uses its eigenvalues directly, otherwise the
    eigenvalues of ``B^T B`` are used.
    """
    B = np.asarray(B, dtype=np.float64)
    if B.ndim != 2:
        raise DimensionError(f"spec_norm operand must be 2-D, got shape {B.shape}")
    if B.size == 0:
        return 0.0
    if B.shape[0] == B.shape[1] and np.array_equal(B, B.T):
        return float(np.max(np.abs(np.linalg.eigvalsh(B))))
    gram = B.T @ B if B.shape[0] >= B.shape[1] else B @ B.T
    top = np.max(np.linalg.eigvalsh(sym(gram)))
    return float(np.sqrt(max(top, 0.0)))


def sym_eig(S):
    """Eigendecomposition of a symmetric matrix.

    Parameters
    ----------
    S : array_like
        Square matrix, symmetric to a relative Frobenius tolerance of
        `~cdadt.numerics.tolerances.SYMMETRY_TOL`.

    Returns
    -------
    eigvals : `numpy.ndarray`
        Eigenvalues in descending order.
    eigvecs : `numpy.ndarray`
        Orthonormal eigenvectors as columns, in the order of ``eigvals``.

    Raises
    ------
    `~cdadt.numerics.DimensionError`
        If ``S`` is not square.
    `~cdadt.numerics.ContractError`
        If ``S`` is not symmetric.
    """
    S = as_mat(S, "S")
    _require_square(S, "S")
    scale = fro_norm(S)
    if fro_norm(S - S.T) > tolerances.SYMMETRY_TOL * scale:
        raise ContractError("sym_eig requires a symmetric matrix")

    eigvals, eigvecs = np.linalg.eigh(sym(S))
    return eigvals[::-1].copy(), eigvecs[:, ::-1].copy()


def spd_inv_sqrt(S):
    """Inverse square root ``S^(-1/2)`` of a symmetric positive definite matrix.

    Raises
    ------
    `~cdadt.numerics.NotPositiveDefiniteError`
        If the smallest eigenvalue does not exceed
        ``SPD_REL_TOL * ||S||_2``.
    """
    eigvals, eigvecs = sym_eig(S)
    if eigvals.size == 0:
        return np.zeros_like(np.asarray(S, dtype=np.float64))

    top = np.max(np.abs(eigvals))
    if eigvals[-1] <= tolerances.SPD_REL_TOL * top:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite: smallest eigenvalue {eigvals[-1]:.3e}, "
            f"spectral norm {top:.3e}"
        )
    return sym((eigvecs / np.sqrt(eigvals)) @ eigvecs.T)


def spd_solve(M, B):
    """Solve ``M Y = B`` for symmetric positive definite ``M`` via Cholesky."""
    M = as_mat(M, "M")
    _require_square(M, "M")
    B = np.asarray(B, dtype=np.float64)
    if B.shape[0] != M.shape[0]:
        raise DimensionError(
            f"cannot solve with M of shape {M.shape} and right-hand side {B.shape}"
        )
    try:
        L = np.linalg.cholesky(sym(M))
    except np.linalg.LinAlgError:
        raise NotPositiveDefiniteError("M is not positive definite")
    return np.linalg.solve(L.T, np.linalg.solve(L, B))


def project_gstiefel(X, M):
    """Project ``X`` onto ``{X : X^T M X = I}`` as ``X (X^T M X)^(-1/2)``.

    Raises
    ------
    `~cdadt.numerics.DimensionError`
        If ``X`` has more columns than rows or does not match ``M``.
    `~cdadt.numerics.RankDeficiencyError`
        If ``X^T M X`` is singular.
    """
    X = as_mat(X, "X")
    M = as_mat(M, "M")
    _require_square(M, "M")
    n, p = X.shape
    if M.shape[0] != n:
        raise DimensionError(f"X has {n} rows but M has shape {M.shape}")
    if p > n:
        raise DimensionError(f"X must have at most as many columns as rows, got {X.shape}")

    gram = X.T @ M @ X
    try:
        inv_sqrt = spd_inv_sqrt(gram)
    except NotPositiveDefiniteError:
        raise RankDeficiencyError("X^T M X is singular, X cannot be projected")
    return X @ inv_sqrt


def riemannian_grad(X, G, M):
    """Riemannian gradient ``M^(-1) G - X sym(X^T G)`` at a feasible ``X``.

    Raises
    ------
    `~cdadt.numerics.DimensionError`
        If ``X`` and ``G`` differ in shape.
    `~cdadt.numerics.NotPositiveDefiniteError`
        If ``M`` is not positive definite.
    """
    X = as_mat(X, "X")
    G = as_mat(G, "G")
    if X.shape != G.shape:
        raise DimensionError(f"X and G shapes differ: {X.shape} vs {G.shape}")
    return spd_solve(M, G) - X @ sym(X.T @ G)
