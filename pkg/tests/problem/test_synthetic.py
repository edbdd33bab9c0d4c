import numpy as np
import pytest

from cdadt.numerics import DimensionError
from cdadt.oracle import solve_cca_centralized
from cdadt.problem import (
    CcaData,
    ProblemBuildError,
    build_cca,
    planted_optimum,
    synth_correlated,
    synth_factor,
    uniform_partition,
)


def test_synth_factor_singular_values():
    A = synth_factor(20, 3200, 0.97, seed=1)
    assert A.shape == (20, 3200)
    s = np.linalg.svd(A, compute_uv=False)
    np.testing.assert_allclose(s, 0.97 ** np.arange(1, 21), atol=1e-9)
    assert s[-1] == pytest.approx(0.5438, abs=1e-4)


def test_synth_factor_single_row():
    A = synth_factor(1, 2, 0.5, seed=0)
    assert A.shape == (1, 2)
    assert np.linalg.norm(A) == pytest.approx(0.5)


def test_synth_factor_deterministic():
    assert np.array_equal(synth_factor(5, 9, 0.8, 4), synth_factor(5, 9, 0.8, 4))
    assert not np.array_equal(synth_factor(5, 9, 0.8, 4), synth_factor(5, 9, 0.8, 5))


def test_synth_factor_rejects():
    with pytest.raises(DimensionError):
        synth_factor(5, 4, 0.5, 0)
    with pytest.raises(ProblemBuildError):
        synth_factor(2, 4, 1.5, 0)
    with pytest.raises(ProblemBuildError):
        synth_factor(0, 4, 0.5, 0)


def test_synth_correlated_structure():
    A, B = synth_correlated(4, 3, 20, [0.8, 0.3], seed=2)
    np.testing.assert_allclose(A @ A.T, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(B @ B.T, np.eye(3), atol=1e-12)
    expected = np.zeros((4, 3))
    expected[0, 0], expected[1, 1] = 0.8, 0.3
    np.testing.assert_allclose(A @ B.T, expected, atol=1e-12)


@pytest.mark.parametrize(
    "n,m,q,correlations",
    [(3, 3, 5, []), (2, 3, 10, [0.5, 0.4, 0.3]), (2, 2, 10, [1.0]), (2, 2, 10, [-0.1])],
)
def test_synth_correlated_rejects(n, m, q, correlations):
    with pytest.raises(ProblemBuildError):
        synth_correlated(n, m, q, correlations, seed=0)


def test_planted_optimum():
    assert planted_optimum([0.9, 0.5], 3, 3, 2) == pytest.approx(-1.7)
    assert planted_optimum([0.9], 2, 2, 3) == pytest.approx(-0.5 * (1.9 + 1 + 1))


def test_planted_optimum_matches_oracle():
    correlations = [0.95, 0.9, 0.85, 0.1]
    A, B = synth_correlated(12, 8, 200, correlations, seed=3)
    problem = build_cca(CcaData(A, B, uniform_partition(200, 8)), regularizer=0.0, p=3)
    solution = solve_cca_centralized(problem)
    assert solution.objective_star == pytest.approx(
        planted_optimum(correlations, 12, 8, 3), abs=1e-10
    )
