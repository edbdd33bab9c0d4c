import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ..numerics import DimensionError, as_mat, fro_norm, sym, sym_eig, tolerances
from ._docstring_inheritee import _DocstringInheritee
from .problem_exception import PartitionError, ProblemBuildError

logger = logging.getLogger(__name__)


class LocalComponent(ABC, metaclass=_DocstringInheritee):
    """Private part ``(f_i, M_i)`` of one agent."""

    @property
    @abstractmethod
    def M(self):
        """Symmetric positive semidefinite ``n x n`` constraint matrix."""
        pass

    @abstractmethod
    def objective(self, X):
        """Value of the local objective at ``X``."""
        pass

    @abstractmethod
    def gradient(self, X):
        """Euclidean gradient of the local objective at ``X``."""
        pass


class CcaComponent(LocalComponent):
    """Quadratic CCA component ``f(X) = -tr(X^T Sigma X) / 2``."""

    def __init__(self, Sigma, M):
        self._Sigma = as_mat(Sigma, "Sigma")
        self._M = as_mat(M, "M")
        if self._Sigma.shape != self._M.shape:
            raise DimensionError(
                f"Sigma {self._Sigma.shape} and M {self._M.shape} shapes differ"
            )

    @property
    def Sigma(self):
        return self._Sigma

    @property
    def M(self):
        return self._M

    def objective(self, X):
        return -0.5 * float(np.sum(X * (self._Sigma @ X)))

    def gradient(self, X):
        return -(self._Sigma @ X)


class FunctionComponent(LocalComponent):
    """Component built from plain callables."""

    def __init__(self, objective, gradient, M):
        self._objective = objective
        self._gradient = gradient
        self._M = as_mat(M, "M")

    @property
    def M(self):
        return self._M

    def objective(self, X):
        return float(self._objective(X))

    def gradient(self, X):
        return np.asarray(self._gradient(X), dtype=np.float64)


class Problem:
    """Sum of local components sharing the constraint ``X^T M X = I``.

    Parameters
    ----------
    components : sequence of `LocalComponent`
        One component per agent, in agent order.
    p : `int`
        Number of columns of the decision variable.
    name : `str`, optional

    Raises
    ------
    `~cdadt.problem.ProblemBuildError`
        If there are no components, the ``M_i`` disagree in shape or are
        not symmetric, ``p`` is out of range, or ``M = sum M_i`` is not
        positive definite.
    """

    def __init__(self, components, p, name="problem"):
        components = list(components)
        if len(components) == 0:
            raise ProblemBuildError("a problem needs at least one component")

        n = components[0].M.shape[0]
        for i, comp in enumerate(components):
            Mi = comp.M
            if Mi.shape != (n, n):
                raise ProblemBuildError(
                    f"component {i} has M of shape {Mi.shape}, expected {(n, n)}"
                )
            if fro_norm(Mi - Mi.T) > tolerances.SYMMETRY_TOL * max(fro_norm(Mi), 1.0):
                raise ProblemBuildError(f"component {i} has a non-symmetric M")
        if not 1 <= p <= n:
            raise ProblemBuildError(f"p must satisfy 1 <= p <= n={n}, got {p}")

        self._components = components
        self._n = n
        self._p = int(p)
        self.name = name
        self.regularizer = None

        self._M_stack = np.stack([comp.M for comp in components])
        M = np.zeros((n, n))
        for Mi in self._M_stack:
            M = M + Mi
        self._M = sym(M)

        eigvals, _ = sym_eig(self._M)
        if eigvals[-1] <= tolerances.SPD_REL_TOL * max(abs(eigvals[0]), 1e-300):
            raise ProblemBuildError(
                f"M = sum M_i is not positive definite (smallest eigenvalue "
                f"{eigvals[-1]:.3e})"
            )
        self._sigma_min = float(eigvals[-1])
        self._sigma_max = float(eigvals[0])

        logger.debug(
            f"Problem({name}): n={n}, p={p}, d={len(components)}, "
            f"sigma(M) in [{self._sigma_min:.3e}, {self._sigma_max:.3e}]"
        )

    @property
    def n(self):
        return self._n

    @property
    def p(self):
        return self._p

    @property
    def d(self):
        return len(self._components)

    @property
    def components(self):
        return tuple(self._components)

    @property
    def M(self):
        return self._M

    @property
    def sigma_min(self):
        """Smallest eigenvalue of ``M``."""
        return self._sigma_min

    @property
    def sigma_max(self):
        """Largest eigenvalue of ``M``."""
        return self._sigma_max

    def objective(self, X):
        """Global objective ``f(X) = sum_i f_i(X)``."""
        total = 0.0
        for comp in self._components:
            total += comp.objective(X)
        return total

    def gradient(self, X):
        """Global gradient ``sum_i grad f_i(X)``."""
        G = np.zeros((self._n, X.shape[1]))
        for comp in self._components:
            G = G + comp.gradient(X)
        return G

    def local_gradients(self, Xs):
        """Stack of ``grad f_i(X_i)`` for a ``(d, n, p)`` stack of local points."""
        return np.stack([comp.gradient(X) for comp, X in zip(self._components, Xs)])

    def local_jacobians(self, Xs):
        """Stack of ``M_i X_i`` for a ``(d, n, p)`` stack of local points."""
        return self._M_stack @ Xs


@dataclass(frozen=True)
class CcaData:
    """Two views ``A`` (``n x q``) and ``B`` (``m x q``) with a column partition.

    Raises
    ------
    `~cdadt.problem.PartitionError`
        If the views disagree on ``q`` or the partition has a nonpositive
        entry or does not sum to ``q``.
    """

    A: np.ndarray
    B: np.ndarray
    partition: tuple

    def __post_init__(self):
        A = as_mat(self.A, "A")
        B = as_mat(self.B, "B")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "partition", tuple(int(q) for q in self.partition))

        if A.shape[1] != B.shape[1]:
            raise PartitionError(
                f"A has {A.shape[1]} samples but B has {B.shape[1]}"
            )
        if len(self.partition) == 0 or min(self.partition) < 1:
            raise PartitionError(f"partition entries must be positive: {self.partition}")
        if sum(self.partition) != A.shape[1]:
            raise PartitionError(
                f"partition sums to {sum(self.partition)}, expected q={A.shape[1]}"
            )

    @property
    def q(self):
        return self.A.shape[1]

    @property
    def d(self):
        return len(self.partition)

    def blocks(self):
        """Yield the ``(A_i, B_i)`` column blocks in agent order."""
        start = 0
        for q_i in self.partition:
            yield self.A[:, start : start + q_i], self.B[:, start : start + q_i]
            start += q_i


def uniform_partition(q, d):
    """Split ``q`` samples over ``d`` agents, the first ``q mod d`` getting one extra.

    Raises
    ------
    `~cdadt.problem.PartitionError`
        If ``d < 1`` or ``q < d``.
    """
    if d < 1:
        raise PartitionError(f"need at least one agent, got d={d}")
    if q < d:
        raise PartitionError(f"cannot give each of {d} agents a sample from q={q}")
    base, extra = divmod(q, d)
    return tuple([base + 1] * extra + [base] * (d - extra))


def default_regularizer(data, ridge_factor=1e-8):
    """Ridge ``ridge_factor * tr(M) / n`` from the unregularized view covariances."""
    trace = float(np.sum(data.A * data.A) + np.sum(data.B * data.B))
    n_total = data.A.shape[0] + data.B.shape[0]
    return ridge_factor * trace / n_total


def build_cca(data, regularizer=None, p=1, ridge_factor=1e-8):
    """Distributed CCA problem from partitioned two-view data.

    Agent ``i`` holds ``Sigma_i = [[A_i A_i^T, A_i B_i^T], [B_i A_i^T,
    B_i B_i^T]]`` and ``M_i = blkdiag(A_i A_i^T, B_i B_i^T) + (r / d) I``,
    so ``M`` carries the ridge ``r`` exactly once. The raw column blocks
    are not retained.

    Parameters
    ----------
    data : `CcaData`
    regularizer : `float`, optional
        Ridge ``r >= 0``. Defaults to `default_regularizer`.
    p : `int`, optional
        Number of canonical directions.
    ridge_factor : `float`, optional
        Factor of the default ridge.

    Returns
    -------
    `Problem`
    """
    if regularizer is None:
        regularizer = default_regularizer(data, ridge_factor)
    if regularizer < 0:
        raise ProblemBuildError(f"regularizer must be nonnegative, got {regularizer}")

    n_a, n_b = data.A.shape[0], data.B.shape[0]
    n = n_a + n_b
    ridge = (regularizer / data.d) * np.eye(n)

    components = []
    for A_i, B_i in data.blocks():
        S_aa = sym(A_i @ A_i.T)
        S_bb = sym(B_i @ B_i.T)
        S_ab = A_i @ B_i.T
        Sigma = np.block([[S_aa, S_ab], [S_ab.T, S_bb]])
        M = np.zeros((n, n))
        M[:n_a, :n_a] = S_aa
        M[n_a:, n_a:] = S_bb
        components.append(CcaComponent(Sigma, M + ridge))

    logger.debug(
        f"build_cca: n_a={n_a}, n_b={n_b}, q={data.q}, d={data.d}, "
        f"regularizer={regularizer:.3e}"
    )
    try:
        problem = Problem(components, p=p, name="cca")
    except ProblemBuildError as e:
        raise ProblemBuildError(f"{e}; try a larger regularizer than {regularizer:.3e}")
    problem.regularizer = float(regularizer)
    return problem
