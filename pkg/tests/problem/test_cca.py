import numpy as np
import pytest

from cdadt.oracle import fd_gradient
from cdadt.problem import (
    CcaComponent,
    CcaData,
    FunctionComponent,
    LocalComponent,
    PartitionError,
    Problem,
    ProblemBuildError,
    build_cca,
    default_regularizer,
    uniform_partition,
)
from cdadt.problem._docstring_inheritee import _DocstringInheritee


def test_uniform_partition():
    assert uniform_partition(7, 3) == (3, 2, 2)
    assert uniform_partition(5, 5) == (1, 1, 1, 1, 1)
    assert uniform_partition(3200, 32) == (100,) * 32
    with pytest.raises(PartitionError):
        uniform_partition(2, 3)
    with pytest.raises(PartitionError):
        uniform_partition(2, 0)


def test_cca_data_validation():
    A = np.ones((2, 4))
    with pytest.raises(PartitionError):
        CcaData(A, np.ones((1, 3)), (4,))
    with pytest.raises(PartitionError):
        CcaData(A, np.ones((1, 4)), (2, 1))
    with pytest.raises(PartitionError):
        CcaData(A, np.ones((1, 4)), (4, 0))


def test_blocks_reconstruct_views(rng):
    A = rng.standard_normal((3, 10))
    B = rng.standard_normal((2, 10))
    data = CcaData(A, B, (4, 3, 3))
    blocks = list(data.blocks())
    assert np.array_equal(np.hstack([a for a, _ in blocks]), A)
    assert np.array_equal(np.hstack([b for _, b in blocks]), B)


def test_single_agent_blocks():
    A = np.array([[1.0, 2.0, 0.0, 1.0], [0.0, 1.0, 1.0, 0.0]])
    B = np.array([[1.0, -1.0, 2.0, 0.0]])
    problem = build_cca(CcaData(A, B, (4,)), regularizer=0.5, p=1)
    comp = problem.components[0]

    Saa = np.array([[6.0, 2.0], [2.0, 2.0]])
    Sbb = np.array([[6.0]])
    Sab = np.array([[-1.0], [1.0]])
    Sigma = np.block([[Saa, Sab], [Sab.T, Sbb]])
    M = np.block([[Saa, np.zeros((2, 1))], [np.zeros((1, 2)), Sbb]]) + 0.5 * np.eye(3)

    np.testing.assert_array_equal(comp.Sigma, Sigma)
    np.testing.assert_array_equal(comp.M, M)
    np.testing.assert_array_equal(problem.M, M)
    assert problem.regularizer == 0.5


def test_split_sums_to_full_data(rng):
    A = rng.standard_normal((3, 24))
    B = rng.standard_normal((2, 24))
    full = build_cca(CcaData(A, B, (24,)), regularizer=0.3, p=2)
    split = build_cca(CcaData(A, B, uniform_partition(24, 5)), regularizer=0.3, p=2)

    Sigma = sum(comp.Sigma for comp in split.components)
    np.testing.assert_allclose(Sigma, full.components[0].Sigma, atol=1e-12)
    np.testing.assert_allclose(split.M, full.M, atol=1e-12)


def test_components_symmetric(factor_problem):
    for comp in factor_problem.components:
        assert np.array_equal(comp.Sigma, comp.Sigma.T)
        assert np.array_equal(comp.M, comp.M.T)


def test_objective_nonpositive(factor_problem, rng):
    X = np.zeros((factor_problem.n, 2))
    assert factor_problem.objective(X) == 0
    np.testing.assert_array_equal(factor_problem.gradient(X), 0)
    for _ in range(5):
        X = rng.standard_normal((factor_problem.n, 2))
        for comp in factor_problem.components:
            assert comp.objective(X) <= 0


def test_gradient_matches_finite_differences(factor_problem, rng):
    for comp in factor_problem.components:
        X = rng.standard_normal((factor_problem.n, 2))
        fd = fd_gradient(comp.objective, X)
        G = comp.gradient(X)
        assert np.linalg.norm(fd - G) <= 1e-5 * np.linalg.norm(G)


def test_local_stacks(factor_problem, rng):
    Xs = rng.standard_normal((factor_problem.d, factor_problem.n, 2))
    grads = factor_problem.local_gradients(Xs)
    MX = factor_problem.local_jacobians(Xs)
    for i, comp in enumerate(factor_problem.components):
        np.testing.assert_allclose(grads[i], comp.gradient(Xs[i]), atol=1e-14)
        np.testing.assert_allclose(MX[i], comp.M @ Xs[i], atol=1e-14)


def test_problem_sigma(factor_problem):
    eigvals = np.linalg.eigvalsh(factor_problem.M)
    assert factor_problem.sigma_min == pytest.approx(eigvals[0])
    assert factor_problem.sigma_max == pytest.approx(eigvals[-1])


def test_singular_m_advises_regularizer():
    data = CcaData(np.ones((2, 4)), np.ones((1, 4)), (2, 2))
    with pytest.raises(ProblemBuildError, match="larger regularizer"):
        build_cca(data, regularizer=0.0)


def test_problem_rejects():
    with pytest.raises(ProblemBuildError):
        Problem([], p=1)
    with pytest.raises(ProblemBuildError):
        Problem([CcaComponent(np.eye(2), np.eye(2)), CcaComponent(np.eye(3), np.eye(3))], p=1)
    with pytest.raises(ProblemBuildError):
        Problem([CcaComponent(np.eye(2), np.eye(2))], p=3)
    with pytest.raises(ProblemBuildError):
        Problem([CcaComponent(np.eye(2), np.array([[1.0, 1.0], [0.0, 1.0]]))], p=1)
    with pytest.raises(ProblemBuildError):
        build_cca(CcaData(np.ones((1, 2)), np.ones((1, 2)), (2,)), regularizer=-1.0)


def test_default_regularizer():
    A = np.full((2, 5), 1.0)
    B = np.full((3, 5), 2.0)
    data = CcaData(A, B, (5,))
    assert default_regularizer(data, 1e-8) == pytest.approx(1e-8 * (10 + 60) / 5)


def test_function_component():
    comp = FunctionComponent(
        lambda X: float(np.sum(X**2)), lambda X: 2 * X, np.eye(2)
    )
    problem = Problem([comp, comp], p=1)
    X = np.array([[1.0], [2.0]])
    assert problem.objective(X) == 10
    np.testing.assert_array_equal(problem.gradient(X), 4 * X)
    np.testing.assert_array_equal(problem.M, 2 * np.eye(2))


def test_local_component_abstract():
    assert type(LocalComponent) is _DocstringInheritee
    with pytest.raises(TypeError):
        LocalComponent()
    assert CcaComponent.objective.__doc__ == LocalComponent.objective.__doc__
