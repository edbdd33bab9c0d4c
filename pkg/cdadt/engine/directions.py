"""Constraint-dissolving operator, penalty function and update directions.

For ``K = X^T M X`` the operator ``A(X) = X (3I - K) / 2`` maps a
neighborhood of the feasible set onto it to second order, and the
penalty ``h(X) = f(A(X)) + beta ||K - I||_F^2 / 4`` shares its
first-order stationary points with the constrained problem.
"""

import logging

import numpy as np

from ..numerics import DimensionError, fro_norm, sym

logger = logging.getLogger(__name__)


def _swap(B):
    return np.swapaxes(B, -1, -2)


def _sym(B):
    # works on single matrices and on (d, p, p) stacks
    return (B + _swap(B)) / 2


def cd_operator(X, gram):
    """``A(X) = X (3I - gram) / 2`` for a precomputed ``gram = X^T M X``."""
    X = np.asarray(X, dtype=np.float64)
    gram = np.asarray(gram, dtype=np.float64)
    p = X.shape[-1]
    if gram.shape[-2:] != (p, p):
        raise DimensionError(f"gram must be {p}x{p}, got shape {gram.shape}")
    return 0.5 * X @ (3 * np.eye(p) - gram)


def penalty_h(X, problem, beta):
    """Penalty function ``h(X) = f(A(X)) + beta ||X^T M X - I||_F^2 / 4``."""
    gram = X.T @ problem.M @ X
    residual = fro_norm(gram - np.eye(X.shape[1]))
    return problem.objective(cd_operator(X, gram)) + beta / 4 * residual**2


def penalty_grad(X, problem, beta):
    """Exact gradient of `penalty_h`.

    With ``K = X^T M X`` and ``G = grad f(A(X))``::

        G (3I - K) / 2 - M X sym(X^T G) + beta M X (K - I)
    """
    p = X.shape[1]
    MX = problem.M @ X
    gram = X.T @ MX
    G = problem.gradient(cd_operator(X, gram))
    return (
        0.5 * G @ (3 * np.eye(p) - gram)
        - MX @ sym(X.T @ G)
        + beta * (MX @ (gram - np.eye(p)))
    )


def direction_S(X, G, MX):
    """Objective part ``S = G (3I - X^T MX) / 2 - MX sym(X^T G)``."""
    p = X.shape[-1]
    if G.shape != X.shape or MX.shape != X.shape:
        raise DimensionError(
            f"X, G and MX must share a shape, got {X.shape}, {G.shape}, {MX.shape}"
        )
    return 0.5 * G @ (3 * np.eye(p) - _swap(X) @ MX) - MX @ _sym(_swap(X) @ G)


def direction_Q(X, MX):
    """Feasibility part ``Q = MX (X^T MX - I)``."""
    p = X.shape[-1]
    return MX @ (_swap(X) @ MX - np.eye(p))


def centralized_H(X, problem, beta):
    """Approximate penalty gradient ``H(X) = S(X) + beta Q(X)``.

    Uses ``grad f(X)`` in place of ``grad f(A(X))``, so each agent can form
    it from tracked quantities.
    """
    G = problem.gradient(X)
    MX = problem.M @ X
    return direction_S(X, G, MX) + beta * direction_Q(X, MX)


def tracked_directions(X, U, V, d, beta):
    """Local directions from tracked estimates.

    ``H_i = (d/2) U_i (3I - d X_i^T V_i) - d^2 V_i sym(X_i^T U_i)
    + beta d V_i (d X_i^T V_i - I)``. Accepts single matrices or
    ``(d, n, p)`` stacks. With ``d = 1``, ``U = grad f(X)`` and
    ``V = M X`` it equals `centralized_H` bit for bit.
    """
    p = X.shape[-1]
    eye = np.eye(p)
    XtV = _swap(X) @ V
    return (
        (d / 2) * U @ (3 * eye - d * XtV)
        - d**2 * V @ _sym(_swap(X) @ U)
        + beta * d * (V @ (d * XtV - eye))
    )
