import numpy as np
import pytest

from cdadt.engine import (
    AgentState,
    cd_operator,
    centralized_H,
    direction_Q,
    direction_S,
    local_direction,
    penalty_grad,
    penalty_h,
    tracked_directions,
)
from cdadt.numerics import DimensionError, fro_norm, project_gstiefel, riemannian_grad, sym
from cdadt.oracle import fd_gradient, solve_cca_centralized
from cdadt.problem import CcaData, build_cca


def _near_feasible(problem, rng, radius=0.05):
    X = project_gstiefel(rng.standard_normal((problem.n, problem.p)), problem.M)
    return X * (1 + radius * rng.uniform(-1, 1))


class TestCdOperator:
    def test_feasible_fixed_point(self, factor_problem, rng):
        X = project_gstiefel(rng.standard_normal((factor_problem.n, 2)), factor_problem.M)
        np.testing.assert_array_equal(cd_operator(X, np.eye(2)), X)

    def test_zero(self):
        np.testing.assert_array_equal(cd_operator(np.zeros((3, 2)), np.zeros((2, 2))), 0)

    def test_scalar(self):
        assert cd_operator([[2.0]], [[4.0]])[0, 0] == -1

    def test_gram_shape(self):
        with pytest.raises(DimensionError):
            cd_operator(np.ones((3, 2)), np.eye(3))


def test_penalty_h(factor_problem, rng):
    X = project_gstiefel(rng.standard_normal((factor_problem.n, 2)), factor_problem.M)
    assert penalty_h(X, factor_problem, 1.0) == pytest.approx(
        factor_problem.objective(X), rel=1e-10
    )
    assert penalty_h(np.zeros((factor_problem.n, 2)), factor_problem, 0.0) == 0

    X = rng.standard_normal((factor_problem.n, 2))
    beta = 3.0
    K = X.T @ factor_problem.M @ X
    expected = factor_problem.objective(0.5 * X @ (3 * np.eye(2) - K))
    expected += beta / 4 * fro_norm(K - np.eye(2)) ** 2
    assert penalty_h(X, factor_problem, beta) == pytest.approx(expected, rel=1e-12)


def test_direction_S(factor_problem, rng):
    M = factor_problem.M
    X = project_gstiefel(rng.standard_normal((factor_problem.n, 2)), M)
    G = factor_problem.gradient(X)
    np.testing.assert_allclose(
        direction_S(X, G, M @ X), M @ riemannian_grad(X, G, M), atol=1e-10
    )
    np.testing.assert_array_equal(direction_S(X, np.zeros_like(X), M @ X), 0)

    X = rng.standard_normal((factor_problem.n, 2))
    G = rng.standard_normal(X.shape)
    MX = M @ X
    expected = 0.5 * G @ (3 * np.eye(2) - X.T @ MX) - MX @ sym(X.T @ G)
    np.testing.assert_allclose(direction_S(X, G, MX), expected, atol=1e-12)

    with pytest.raises(DimensionError):
        direction_S(X, G[:, :1], MX)


def test_direction_Q(factor_problem, rng):
    M = factor_problem.M
    X = project_gstiefel(rng.standard_normal((factor_problem.n, 2)), M)
    np.testing.assert_allclose(direction_Q(X, M @ X), 0, atol=1e-12)
    np.testing.assert_array_equal(direction_Q(np.zeros((3, 1)), np.zeros((3, 1))), 0)
    assert direction_Q(np.array([[2.0]]), np.array([[2.0]]))[0, 0] == 6


class TestCentralizedH:
    def test_vanishes_at_optimum(self, planted):
        X_star = solve_cca_centralized(planted).X_star
        np.testing.assert_allclose(centralized_H(X_star, planted, 1.0), 0, atol=1e-8)

    def test_beta_zero(self, factor_problem, rng):
        X = rng.standard_normal((factor_problem.n, 2))
        G = factor_problem.gradient(X)
        np.testing.assert_array_equal(
            centralized_H(X, factor_problem, 0.0),
            direction_S(X, G, factor_problem.M @ X),
        )

    def test_separable_assembly(self, factor_problem, rng):
        d = factor_problem.d
        X = rng.standard_normal((factor_problem.n, 2))
        U = factor_problem.gradient(X) / d
        V = factor_problem.M @ X / d
        np.testing.assert_allclose(
            tracked_directions(X, U, V, d, 2.0),
            centralized_H(X, factor_problem, 2.0),
            atol=1e-10,
        )


def test_penalty_grad_matches_finite_differences(factor_problem, rng):
    beta = 2.0
    for _ in range(20):
        X = _near_feasible(factor_problem, rng)
        fd = fd_gradient(lambda Y: penalty_h(Y, factor_problem, beta), X)
        G = penalty_grad(X, factor_problem, beta)
        assert np.linalg.norm(fd - G) <= 1e-5 * np.linalg.norm(G)


def test_penalty_grad_equals_H_on_feasible_points(factor_problem, rng):
    X = project_gstiefel(rng.standard_normal((factor_problem.n, 2)), factor_problem.M)
    np.testing.assert_allclose(
        penalty_grad(X, factor_problem, 1.5),
        centralized_H(X, factor_problem, 1.5),
        atol=1e-10,
    )


def _region_samples(problem, rng, count):
    """Points with ``||X^T M X - I||_F <= 1/6`` around random feasible points."""
    M = problem.M
    samples = []
    while len(samples) < count:
        Y = project_gstiefel(rng.standard_normal((problem.n, problem.p)), problem.M)
        E = rng.standard_normal(Y.shape)
        E /= np.sqrt(np.trace(E.T @ M @ E))
        X = Y + 10 ** rng.uniform(-2, -0.7) * E
        if fro_norm(X.T @ M @ X - np.eye(problem.p)) <= 1 / 6:
            samples.append(X)
    return samples


def _lower_bound_gap(X, problem, beta):
    """``||H||^2`` minus the lower bound, and its derivative in ``beta``."""
    M = problem.M
    MX = M @ X
    S = direction_S(X, problem.gradient(X), MX)
    Q = direction_Q(X, MX)
    residual = fro_norm(X.T @ MX - np.eye(problem.p))
    Y = project_gstiefel(X, M)
    grad = riemannian_grad(Y, problem.gradient(Y), M)
    sigma = problem.sigma_min

    bound = 0.5 * sigma**2 * fro_norm(grad) ** 2 + beta * np.sqrt(sigma) * residual**2
    gap = fro_norm(centralized_H(X, problem, beta)) ** 2 - bound + 1e-12 * max(1.0, bound)
    slope = 2 * beta * fro_norm(Q) ** 2 + 2 * np.sum(S * Q) - np.sqrt(sigma) * residual**2
    return gap, slope


@pytest.mark.parametrize("name", ["planted", "factor_problem"])
def test_direction_lower_bound(name, request, rng, record_property):
    problem = request.getfixturevalue(name)

    # gap is convex in beta: nonnegative with nonnegative slope holds for every larger beta
    calibration = _region_samples(problem, rng, 300)
    beta = 1.0
    while not all(
        gap >= 0 and slope >= 0
        for gap, slope in (_lower_bound_gap(X, problem, beta) for X in calibration)
    ):
        beta *= 2
        assert beta < 2**40
    beta *= 8
    record_property("beta", beta)

    for X in _region_samples(problem, rng, 100):
        for b in [beta, 10 * beta]:
            gap, _ = _lower_bound_gap(X, problem, b)
            assert gap >= 0, f"beta={b}"


class TestLocalDirection:
    def test_single_agent_is_centralized(self, rng):
        A = rng.standard_normal((3, 12))
        B = rng.standard_normal((2, 12))
        problem = build_cca(CcaData(A, B, (12,)), p=2)
        X = rng.standard_normal((5, 2))
        state = AgentState(
            X=X, U=problem.gradient(X), V=problem.M @ X, H=np.zeros_like(X)
        )
        assert np.array_equal(local_direction(state, 1, 0.7), centralized_H(X, problem, 0.7))

    def test_zero_trackers(self, rng):
        X = rng.standard_normal((4, 2))
        state = AgentState(X=X, U=np.zeros_like(X), V=np.zeros_like(X), H=np.zeros_like(X))
        np.testing.assert_array_equal(local_direction(state, 3, 1.0), 0)

    def test_exact_consensus(self, factor_problem, rng):
        d = factor_problem.d
        X = rng.standard_normal((factor_problem.n, 2))
        U = factor_problem.gradient(X) / d
        V = factor_problem.M @ X / d
        H = centralized_H(X, factor_problem, 1.0)
        state = AgentState(X=X, U=U, V=V, H=np.zeros_like(X))
        np.testing.assert_allclose(
            local_direction(state, d, 1.0), H, atol=1e-12 * max(1.0, fro_norm(H))
        )

    def test_stacked(self, factor_problem, rng):
        d = factor_problem.d
        X = rng.standard_normal((d, factor_problem.n, 2))
        U = rng.standard_normal(X.shape)
        V = rng.standard_normal(X.shape)
        stacked = tracked_directions(X, U, V, d, 1.0)
        for i in range(d):
            np.testing.assert_allclose(
                stacked[i], tracked_directions(X[i], U[i], V[i], d, 1.0), rtol=1e-10, atol=1e-9
            )
