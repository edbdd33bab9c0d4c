import logging
import time
from dataclasses import replace

import numpy as np

from ..network import MixingMatrix
from ..numerics import DimensionError, as_mat, fro_norm, project_gstiefel
from .diagnostics import reduces_stationarity
from .directions import _sym, penalty_h, tracked_directions
from .engine_exception import ConfigError, DivergenceError
from .state import AgentState, IterationLog, RunResult

logger = logging.getLogger(__name__)


class _Gossip:
    """One round of neighbor exchange: ``out_i = sum_j W[i, j] B_j``.

    Each agent combines only itself and its neighbors, in increasing agent
    index, so results do not depend on anything but ``W`` and the blocks.
    """

    def __init__(self, W):
        self.d = W.shape[0]
        self._support = [np.flatnonzero(W[i]) for i in range(self.d)]
        self._weights = [W[i, idx] for i, idx in enumerate(self._support)]

    def __call__(self, blocks):
        out = np.empty_like(blocks)
        for i in range(self.d):
            out[i] = np.tensordot(self._weights[i], blocks[self._support[i]], axes=1)
        return out


def _weight_matrix(W):
    if isinstance(W, MixingMatrix):
        W = W.W
    W = as_mat(W, "W")
    if W.shape[0] != W.shape[1]:
        raise DimensionError(f"W must be square, got shape {W.shape}")
    return W


def _stack(states, attr):
    return np.stack([getattr(s, attr) for s in states])


def _mix(gossip, X, H, eta):
    return gossip(X - eta * H)


def _track(gossip, U, V, fresh_grads, fresh_MX, old_grads, old_MX):
    return gossip(U + fresh_grads - old_grads), gossip(V + fresh_MX - old_MX)


def local_direction(state, d, beta):
    """Direction ``H_i`` of one agent from its iterate and trackers."""
    return tracked_directions(state.X, state.U, state.V, d, beta)


def mix_step(states, W, eta):
    """Iterate update ``X_i <- sum_j W[i, j] (X_j - eta H_j)``.

    All agents read the same snapshot, so the result is a ``(d, n, p)``
    stack of the new ``X_i`` that does not depend on agent order.
    """
    return _mix(_Gossip(_weight_matrix(W)), _stack(states, "X"), _stack(states, "H"), eta)


def track_step(states, W, fresh_grads, fresh_MX, old_grads, old_MX):
    """Tracker update ``U_i <- sum_j W[i, j] (U_j + grad_j(X_j+) - grad_j(X_j))``.

    ``V`` is updated the same way from ``M_j X_j``. The gradient and
    ``M_j X_j`` arguments are ``(d, n, p)`` stacks. Returns the new
    ``(U, V)`` stacks.
    """
    return _track(
        _Gossip(_weight_matrix(W)),
        _stack(states, "U"),
        _stack(states, "V"),
        fresh_grads,
        fresh_MX,
        old_grads,
        old_MX,
    )


def _mean(B):
    # offset by the first agent so identical blocks average to themselves exactly
    return B[0] + np.mean(B - B[0], axis=0)


def _metrics(X, U, V):
    d, n, p = X.shape
    X_bar = _mean(X)
    U_sum = d * _mean(U)
    V_sum = d * _mean(V)
    stat = fro_norm(U_sum - V_sum @ _sym(X_bar.T @ U_sum))
    consensus = float(np.sum(np.linalg.norm(X - X_bar, axis=(1, 2)))) / d
    feas = fro_norm(X_bar.T @ V_sum - np.eye(p))
    return stat, consensus, feas, X_bar


def metrics(states, d=None):
    """Network metrics ``(stat_viol, consensus_err, feas_viol)``.

    With ``X_bar``, ``U_bar``, ``V_bar`` the agent averages and ``d`` the
    number of agents::

        stat_viol     = ||d U_bar - d V_bar sym(X_bar^T d U_bar)||_F
        consensus_err = sum_i ||X_i - X_bar||_F / d
        feas_viol     = ||X_bar^T d V_bar - I||_F

    Since the trackers preserve ``U_bar = sum_i grad f_i(X_i) / d`` and
    ``V_bar = M X_bar / d``, all three vanish at a consensual feasible
    stationary point.
    """
    if d is not None and d != len(states):
        raise DimensionError(f"expected {d} agent states, got {len(states)}")
    stat, consensus, feas, _ = _metrics(
        _stack(states, "X"), _stack(states, "U"), _stack(states, "V")
    )
    return stat, consensus, feas


def _merit(X, U, V, X_bar, problem, beta, rho):
    penalty = penalty_h(X_bar, problem, beta)
    x_dev = float(np.sum((X - X_bar) ** 2))
    u_dev = float(np.sum((U - _mean(U)) ** 2))
    v_dev = float(np.sum((V - _mean(V)) ** 2))
    return penalty + x_dev + rho * u_dev + rho * v_dev


def merit(states, problem, beta, rho, W_lambda=None):
    """Merit ``h(X_bar) + ||X - X_bar||^2 + rho ||U - U_bar||^2 + rho ||V - V_bar||^2``.

    Deviations are summed over agents. Diagnostic only. ``W_lambda`` is
    accepted so callers can pass the network's ``lambda``; the value does
    not depend on it.
    """
    X = _stack(states, "X")
    return _merit(
        X, _stack(states, "U"), _stack(states, "V"), _mean(X), problem, beta, rho
    )


def initial_point(problem, seed):
    """Feasible starting point: a seeded Gaussian matrix projected onto the constraint."""
    rng = np.random.default_rng(seed)
    return project_gstiefel(rng.standard_normal((problem.n, problem.p)), problem.M)


def _check_finite(k, logs, **blocks):
    for name, B in blocks.items():
        if not np.all(np.isfinite(B)):
            raise DivergenceError(
                f"non-finite {name} at iteration {k}", iteration=k, logs=logs
            )


def run(problem, W, X_init, config):
    """Run the decentralized double-tracking iteration.

    Every agent starts from ``X_init`` with ``U_i = grad f_i(X_init)`` and
    ``V_i = M_i X_init``. Each iteration forms the local directions, mixes
    ``X - eta H`` over the network, evaluates fresh local gradients and
    ``M_i X_i`` once, and mixes the tracker corrections. The run stops
    when all three metrics of `metrics` are within their tolerances or
    after ``config.max_iters`` iterations.

    Parameters
    ----------
    problem : `~cdadt.problem.Problem`
    W : `~cdadt.network.MixingMatrix` or array_like
        Mixing weights with one row per component of ``problem``.
    X_init : array_like
        Shared ``n x p`` starting point.
    config : `~cdadt.engine.RunConfig`

    Returns
    -------
    `~cdadt.engine.RunResult`

    Raises
    ------
    `~cdadt.engine.DivergenceError`
        If an iterate, tracker or direction becomes non-finite. Its
        ``logs`` hold the records completed before.
    `~cdadt.numerics.DimensionError`
        If ``W`` or ``X_init`` does not match ``problem``.
    """
    W = _weight_matrix(W)
    d = problem.d
    if W.shape[0] != d:
        raise DimensionError(f"W is {W.shape[0]}x{W.shape[0]} but there are {d} agents")
    X_init = as_mat(X_init, "X_init")
    if X_init.shape != (problem.n, problem.p):
        raise DimensionError(
            f"X_init must be {problem.n}x{problem.p}, got shape {X_init.shape}"
        )

    logger.debug(
        f"run(problem={problem.name}, d={d}, n={problem.n}, p={problem.p}, "
        f"eta={config.eta}, beta={config.beta}, max_iters={config.max_iters})"
    )
    start = time.perf_counter()
    gossip = _Gossip(W)
    beta, eta = config.beta, config.eta

    X = np.repeat(X_init[np.newaxis], d, axis=0)
    grads = problem.local_gradients(X)
    MX = problem.local_jacobians(X)
    U = grads.copy()
    V = MX.copy()

    logs = []

    def record(k):
        stat, consensus, feas, X_bar = _metrics(X, U, V)
        value = None
        if config.record_merit:
            value = _merit(X, U, V, X_bar, problem, beta, config.rho)
        entry = IterationLog(
            iter=k,
            stat_viol=stat,
            consensus_err=consensus,
            feas_viol=feas,
            objective=problem.objective(X_bar),
            merit=value,
        )
        if not np.all(np.isfinite([stat, consensus, feas, entry.objective])):
            raise DivergenceError(f"non-finite metrics at iteration {k}", k, logs)
        logs.append(entry)
        if k % config.log_every == 0:
            logger.debug(
                f"iter {k}: stat={stat:.3e} cons={consensus:.3e} feas={feas:.3e} "
                f"obj={entry.objective:.10g}"
            )
        return (
            stat <= config.tol_stationarity
            and consensus <= config.tol_consensus
            and feas <= config.tol_feasibility
        )

    converged = record(0)
    k = 0
    while not converged and k < config.max_iters:
        H = tracked_directions(X, U, V, d, beta)
        _check_finite(k, logs, H=H)
        X = _mix(gossip, X, H, eta)
        grads_new = problem.local_gradients(X)
        MX_new = problem.local_jacobians(X)
        U, V = _track(gossip, U, V, grads_new, MX_new, grads, MX)
        grads, MX = grads_new, MX_new
        k += 1
        _check_finite(k, logs, X=X, U=U, V=V)
        converged = record(k)

    H = tracked_directions(X, U, V, d, beta)
    states = [AgentState(X=X[i], U=U[i], V=V[i], H=H[i]) for i in range(d)]
    wall_time = time.perf_counter() - start

    final = logs[-1]
    logger.info(
        f"run finished after {k} iteration(s), converged={converged}: "
        f"stat={final.stat_viol:.3e} cons={final.consensus_err:.3e} "
        f"feas={final.feas_viol:.3e} ({wall_time:.2f} s)"
    )
    return RunResult(final_states=states, logs=logs, converged=converged, wall_time=wall_time)


def tune_stepsize(
    problem,
    W,
    X_init,
    config,
    eta0=None,
    accept=None,
    probe_iters=200,
    max_halvings=30,
):
    """Halve the stepsize until a short probe run is acceptable.

    Parameters
    ----------
    eta0 : `float`, optional
        First stepsize tried. Defaults to ``config.eta``.
    accept : callable, optional
        Predicate on the probe `~cdadt.engine.RunResult`. Defaults to
        `~cdadt.engine.reduces_stationarity`. Diverged probes are always
        rejected.
    probe_iters : `int`, optional
    max_halvings : `int`, optional

    Returns
    -------
    `float`
        The first accepted stepsize.

    Raises
    ------
    `~cdadt.engine.ConfigError`
        If no stepsize is accepted within ``max_halvings`` halvings.
    """
    accept = reduces_stationarity if accept is None else accept
    eta = config.eta if eta0 is None else eta0

    for attempt in range(max_halvings + 1):
        probe = replace(config, eta=eta, max_iters=probe_iters, record_merit=True)
        try:
            result = run(problem, W, X_init, probe)
            ok = accept(result)
        except DivergenceError as e:
            logger.debug(f"tune_stepsize: eta={eta:.3e} diverged at {e.iteration}")
            ok = False
        if ok:
            logger.info(f"tune_stepsize: accepted eta={eta:.3e} after {attempt} halving(s)")
            return eta
        eta /= 2

    raise ConfigError(f"no acceptable stepsize after {max_halvings} halvings")
