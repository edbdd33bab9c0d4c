import numpy as np

from .oracle_exception import OracleException


def fd_gradient(func, X, step=1e-6):
    """Central finite-difference gradient of a scalar function of a matrix."""
    if not step > 0:
        raise OracleException(f"step must be positive, got {step}")
    X = np.array(X, dtype=np.float64)
    grad = np.zeros_like(X)
    for idx in np.ndindex(*X.shape):
        orig = X[idx]
        X[idx] = orig + step
        f_plus = func(X)
        X[idx] = orig - step
        f_minus = func(X)
        X[idx] = orig
        grad[idx] = (f_plus - f_minus) / (2 * step)
    return grad
