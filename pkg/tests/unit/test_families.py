"""
Unit tests for metric families and radial profiles
"""
import math

import numpy as np
import pytest

from src.core.exceptions import BadParams, DomainError
from src.cohomogeneity.families import (
    BUILTIN_FAMILIES,
    MetricFamily,
    SigmaProfile,
    builtin_family,
    on_family,
)

GRID = np.linspace(0.2, 1.4, 25)


class TestBuiltinFamilies:
    """Closed-form families"""

    def test_names(self):
        assert "GromovThurston" in BUILTIN_FAMILIES
        with pytest.raises(BadParams):
            builtin_family("RP4")

    def test_sphere(self):
        values = builtin_family("S4").evaluate(GRID)
        assert values.f.shape == (3, GRID.size)
        np.testing.assert_allclose(values.f, np.tile(np.sin(GRID), (3, 1)))
        np.testing.assert_allclose(values.df, np.tile(np.cos(GRID), (3, 1)))
        np.testing.assert_allclose(values.ddf, -values.f)

    def test_hyperbolic(self):
        values = builtin_family("H4").evaluate(GRID)
        np.testing.assert_allclose(values.f, np.tile(np.sinh(GRID), (3, 1)))
        np.testing.assert_allclose(values.ddf, values.f)

    def test_complex_projective(self):
        values = builtin_family("CP2").evaluate(GRID)
        np.testing.assert_allclose(values.f[0], np.sin(GRID) * np.cos(GRID))
        np.testing.assert_allclose(values.df[0], np.cos(2.0 * GRID))
        np.testing.assert_allclose(values.f[1], np.sin(GRID))

    def test_complex_hyperbolic(self):
        values = builtin_family("CH2").evaluate(GRID)
        np.testing.assert_allclose(values.f[0], np.sinh(GRID) * np.cosh(GRID))
        np.testing.assert_allclose(values.ddf[0], 2.0 * np.sinh(2.0 * GRID))

    def test_line_bundle(self):
        fam = builtin_family("On", n=3)
        values = fam.evaluate(GRID)
        np.testing.assert_allclose(values.f[0], math.sqrt(3) * np.sinh(GRID))
        np.testing.assert_allclose(values.f[2], math.sqrt(3) * np.cosh(GRID))
        assert fam.name == "On(3)"
        assert fam.to_dict()['params'] == {'n': 3}

    @pytest.mark.parametrize("n", [0, -1, 2.5, True])
    def test_line_bundle_bad_n(self, n):
        with pytest.raises(BadParams):
            on_family(n)

    def test_line_bundle_requires_n(self):
        with pytest.raises(BadParams):
            builtin_family("On")

    @pytest.mark.parametrize("r", [0.0, math.pi, -0.1, 4.0])
    def test_sphere_domain(self, r):
        with pytest.raises(DomainError):
            builtin_family("S4").evaluate(r)

    def test_complex_projective_domain(self):
        fam = builtin_family("CP2")
        assert fam.contains(np.array([0.1, 1.5]))
        with pytest.raises(DomainError):
            fam.evaluate([0.5, 1.6])


class TestTableFamily:
    """Sampled profiles"""

    @staticmethod
    def _table(points):
        r = np.linspace(0.5, 2.0, points)
        return r, MetricFamily.from_table(r, np.sinh(r), np.cosh(r), np.cosh(r))

    def test_derivative_convergence(self):
        errors = []
        for points in (21, 41):
            r, fam = self._table(points)
            coarse = np.linspace(0.5, 2.0, 21)
            values = fam.evaluate(coarse)
            errors.append(float(np.max(np.abs(values.df[0] - np.cosh(coarse)))))
        assert 3.0 < errors[0] / errors[1] < 5.0

    def test_endpoints_accepted(self):
        r, fam = self._table(11)
        values = fam.evaluate([r[0], r[-1]])
        np.testing.assert_allclose(values.f[0], np.sinh([r[0], r[-1]]))

    def test_linear_between_nodes(self):
        r, fam = self._table(11)
        middle = 0.5 * (r[3] + r[4])
        expected = 0.5 * (np.sinh(r[3]) + np.sinh(r[4]))
        assert fam.evaluate(middle).f[0, 0] == pytest.approx(expected)

    def test_outside_table(self):
        _, fam = self._table(11)
        with pytest.raises(DomainError):
            fam.evaluate(2.5)

    def test_validation(self):
        r = [0.1, 0.2, 0.3]
        with pytest.raises(BadParams):
            MetricFamily.from_table([0.1, 0.2], [1, 1], [1, 1], [1, 1])
        with pytest.raises(BadParams):
            MetricFamily.from_table([0.1, 0.3, 0.2], [1, 1, 1], [1, 1, 1], [1, 1, 1])
        with pytest.raises(BadParams):
            MetricFamily.from_table(r, [1, 0, 1], [1, 1, 1], [1, 1, 1])
        with pytest.raises(BadParams):
            MetricFamily.from_table(r, [1, 1], [1, 1, 1], [1, 1, 1])

    def test_spline_with_step(self):
        r = np.linspace(0.5, 2.0, 151)
        fam = MetricFamily.from_table(r, np.sinh(r), np.cosh(r), np.cosh(r), fd_step=1e-3)
        grid = np.array([0.8, 1.23, 1.7])
        values = fam.evaluate(grid)
        np.testing.assert_allclose(values.f[0], np.sinh(grid), rtol=1e-7)
        np.testing.assert_allclose(values.df[0], np.cosh(grid), rtol=1e-5)
        np.testing.assert_allclose(values.ddf[1], np.cosh(grid), rtol=1e-3)
        assert fam.params == {'points': 151, 'fd_step': 1e-3}

    def test_step_changes_derivatives(self):
        r = np.linspace(0.5, 2.0, 11)
        middle = 0.5 * (r[3] + r[4])
        nodal = MetricFamily.from_table(r, np.sinh(r), np.cosh(r), np.cosh(r)).evaluate(middle)
        spline = MetricFamily.from_table(r, np.sinh(r), np.cosh(r), np.cosh(r), fd_step=1e-4).evaluate(middle)
        assert abs(spline.df[0, 0] - np.cosh(middle)) < abs(nodal.df[0, 0] - np.cosh(middle))

    def test_rejects_bad_step(self):
        with pytest.raises(BadParams):
            MetricFamily.from_table([0.1, 0.2, 0.3], [1, 1, 1], [1, 1, 1], [1, 1, 1], fd_step=0.0)


class TestCallableFamily:
    """Profiles given as value callables"""

    def test_central_differences(self):
        r = np.linspace(0.5, 1.0, 11)
        errors = []
        for h in (1e-3, 5e-4):
            fam = MetricFamily.from_callables(np.sin, np.sin, np.sin, (0.0, math.pi), fd_step=h)
            errors.append(float(np.max(np.abs(fam.evaluate(r).df[0] - np.cos(r)))))
        assert 3.5 < errors[0] / errors[1] < 4.5

    def test_second_derivative(self):
        fam = MetricFamily.from_callables(np.cosh, np.cosh, np.cosh, (0.0, 3.0), fd_step=1e-3)
        r = np.array([0.5, 1.5])
        np.testing.assert_allclose(fam.evaluate(r).ddf[1], np.cosh(r), rtol=1e-5)

    def test_validation(self):
        with pytest.raises(BadParams):
            MetricFamily.from_callables(np.sin, np.sin, np.sin, (0.0, 1.0), fd_step=0.0)
        with pytest.raises(BadParams):
            MetricFamily.from_callables(np.sin, np.sin, np.sin, (1.0, 1.0))

    def test_non_positive_profile(self):
        fam = MetricFamily.from_callables(np.sin, np.cos, np.sin, (0.0, 3.0))
        with pytest.raises(DomainError):
            fam.evaluate([1.0, 2.0])


class TestSigmaProfile:
    """Angular profile of the branched cover construction"""

    def test_scaled_sinh(self):
        sigma = SigmaProfile.scaled_sinh(2.0)
        assert sigma.value(1.0) == pytest.approx(2.0 * math.sinh(1.0))
        assert sigma.second_derivative(1.0) == pytest.approx(2.0 * math.sinh(1.0))
        with pytest.raises(BadParams):
            SigmaProfile.scaled_sinh(0.0)

    def test_gromov_thurston(self):
        sigma = builtin_family("GromovThurston", k=3, r0=6.0)
        assert isinstance(sigma, SigmaProfile)
        assert sigma.blend == (0.5, 5.5)
        assert sigma.value(0.25) == pytest.approx(3.0 * math.sinh(0.25))
        assert sigma.value(5.75) == pytest.approx(math.sinh(5.75))
        assert sigma.to_dict() == {'k': 3.0, 'r0': 6.0, 'blend': [0.5, 5.5]}

    def test_blend_is_c2(self):
        sigma = SigmaProfile.gromov_thurston(3, 6.0)
        for edge in sigma.blend:
            below, above = edge - 1e-7, edge + 1e-7
            assert sigma.derivative(below) == pytest.approx(sigma.derivative(above), rel=1e-5)
            assert sigma.second_derivative(below) == pytest.approx(sigma.second_derivative(above), rel=1e-5)

    def test_derivative_matches_difference(self):
        sigma = SigmaProfile.gromov_thurston(3, 6.0)
        r = np.linspace(0.6, 5.4, 9)
        h = 1e-5
        numeric = (sigma.value(r + h) - sigma.value(r - h)) / (2.0 * h)
        np.testing.assert_allclose(sigma.derivative(r), numeric, rtol=1e-6)

    def test_infeasible_blend(self):
        with pytest.raises(BadParams):
            SigmaProfile.gromov_thurston(3, 1.0)

    @pytest.mark.parametrize("k", [1, 0, 2.5])
    def test_bad_order(self, k):
        with pytest.raises(BadParams):
            SigmaProfile.gromov_thurston(k, 6.0)

    def test_bad_window(self):
        with pytest.raises(BadParams):
            SigmaProfile.gromov_thurston(3, 6.0, blend=(0.5, 7.0))
        with pytest.raises(BadParams):
            builtin_family("GromovThurston", k=3)

    def test_domain(self):
        with pytest.raises(DomainError):
            SigmaProfile.scaled_sinh(2.0).value(0.0)
