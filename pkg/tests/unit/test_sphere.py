"""
Unit tests for sphere sampling and sphere optimizers
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core.exceptions import BadParams
from src.core.sphere import (
    coordinate_descent,
    fibonacci_sphere,
    maximize_scalar,
    maximize_quadratic_on_sphere,
    minimize_quadratic_on_sphere,
    tangent_basis,
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class TestFibonacciSphere:
    """Deterministic lattice"""

    def test_unit_vectors(self):
        points = fibonacci_sphere(1000)
        assert points.shape == (1000, 3)
        np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0, atol=1e-14)

    def test_deterministic(self):
        np.testing.assert_array_equal(fibonacci_sphere(256), fibonacci_sphere(256))

    def test_first_point(self):
        n = 10
        y = 2.0 / n * 0.5 - 1.0
        np.testing.assert_allclose(fibonacci_sphere(n)[0], [math.sqrt(1 - y * y), y, 0.0])

    def test_covering(self):
        points = fibonacci_sphere(4096)
        mirrored = fibonacci_sphere(97) @ np.diag([1.0, -1.0, 1.0])
        nearest = np.max(mirrored @ points.T, axis=1)
        assert np.min(nearest) > math.cos(0.08)

    def test_rejects_empty(self):
        with pytest.raises(BadParams):
            fibonacci_sphere(0)


class TestTangentBasis:
    """Orthonormal tangent frames"""

    def test_orthonormal(self):
        for x in fibonacci_sphere(50):
            t1, t2 = tangent_basis(x)
            frame = np.vstack([x, t1, t2])
            np.testing.assert_allclose(frame @ frame.T, np.eye(3), atol=1e-12)


class TestQuadraticOnSphere:
    """Exact maximizer of x.M.x + 2 b.x"""

    @given(seed=seeds)
    @settings(max_examples=60, deadline=None)
    def test_beats_lattice(self, seed):
        rng = np.random.default_rng(seed)
        M = rng.normal(size=(3, 3))
        M = 0.5 * (M + M.T)
        b = rng.normal(size=3)
        x = maximize_quadratic_on_sphere(M, b)
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-10)
        best = x @ M @ x + 2.0 * b @ x
        points = fibonacci_sphere(2000)
        lattice = np.einsum("ij,jk,ik->i", points, M, points) + 2.0 * points @ b
        assert best >= np.max(lattice) - 1e-9

    def test_zero_linear_term_gives_top_eigenvector(self):
        x = maximize_quadratic_on_sphere(np.diag([1.0, 3.0, 2.0]), np.zeros(3))
        assert abs(x[1]) == pytest.approx(1.0)

    def test_isotropic_matrix(self):
        b = np.array([0.0, 0.5, 0.0])
        x = maximize_quadratic_on_sphere(np.eye(3), b)
        np.testing.assert_allclose(x, [0.0, 1.0, 0.0], atol=1e-12)

    def test_hard_case(self):
        M = np.diag([0.0, 0.0, 2.0])
        b = np.array([0.5, 0.0, 0.0])
        x = maximize_quadratic_on_sphere(M, b)
        assert x @ M @ x + 2.0 * b @ x == pytest.approx(2.0 + 0.125, abs=1e-12)

    def test_minimizer(self):
        x = minimize_quadratic_on_sphere(np.eye(3), np.array([1.0, 0.0, 0.0]))
        np.testing.assert_allclose(x, [-1.0, 0.0, 0.0], atol=1e-12)


class TestOneDimensionalSearch:
    """Bounded scalar maximization and coordinate descent"""

    def test_smooth_maximum(self):
        t, value = maximize_scalar(lambda t: -(t - 0.3) ** 2 + 1.0, -5.0, 5.0)
        assert t == pytest.approx(0.3, abs=1e-6)
        assert value == pytest.approx(1.0, abs=1e-12)

    def test_kinked_maximum(self):
        t, value = maximize_scalar(lambda t: 2.0 - 3.0 * abs(t - 0.7), -10.0, 10.0)
        assert t == pytest.approx(0.7, abs=1e-9)
        assert value == pytest.approx(2.0, abs=1e-9)

    def test_maximum_at_bound(self):
        t, value = maximize_scalar(lambda t: t, -1.0, 4.0)
        assert t == pytest.approx(4.0, abs=1e-6)
        assert value == pytest.approx(4.0, abs=1e-6)

    def test_coordinate_descent_finds_pole(self):
        target = np.array([0.0, 0.0, 1.0])
        x, value = coordinate_descent(lambda v: -float(v @ target), np.array([1.0, 0.2, 0.1]), 200)
        assert value == pytest.approx(-1.0, abs=1e-4)
        assert np.linalg.norm(x) == pytest.approx(1.0)
