"""
Unit tests for the Ricci-operator analysis and the eigenvalue lemmas
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.curvature.operator import make_operator, random_trace_free
from src.definite.ricci import (
    asd_ricci_criterion,
    bochner_condition,
    eigen_sum_dominance,
    ricci_operator,
    ricci_operator_spectrum,
    ricci_positive_check,
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class TestRicciOperatorSpectrum:
    """(lam_i + lam_j)/2 - s/6"""

    def test_einstein(self):
        np.testing.assert_allclose(ricci_operator_spectrum([1, 1, 1, 1]), np.full(6, 1.0 / 3.0))

    def test_zero(self):
        np.testing.assert_array_equal(ricci_operator_spectrum([0, 0, 0, 0]), np.zeros(6))

    def test_single_direction(self):
        np.testing.assert_allclose(ricci_operator_spectrum([6, 0, 0, 0]), [2, 2, 2, -1, -1, -1])

    def test_sorted_descending(self, rng):
        values = ricci_operator_spectrum(rng.normal(size=4))
        assert np.all(np.diff(values) <= 0)


class TestRicciOperator:
    """Ricci part of an operator and its relation to D for W+ = 0"""

    def test_block_form(self, tilted_operator):
        M = ricci_operator(tilted_operator)
        np.testing.assert_allclose(M[:3, :3], -np.eye(3))
        np.testing.assert_array_equal(M[3:, :3], tilted_operator.B)

    @given(seed=seeds)
    @settings(max_examples=80, deadline=None)
    def test_asd_criterion(self, seed):
        rng = np.random.default_rng(seed)
        s = float(rng.uniform(-24.0, 24.0))
        shift = s / 12.0 * np.eye(3)
        R = make_operator(shift, rng.normal(scale=abs(s) / 12.0, size=(3, 3)), shift + random_trace_free(rng))
        report = asd_ricci_criterion(R)
        assert report['anti_self_dual']
        d_min = np.min(np.abs(np.linalg.eigvalsh(shift @ shift - R.B.T @ R.B)))
        if d_min > 1e-6:
            assert report['agree']
            if report['d_positive']:
                assert report['ricci_sign'] == int(np.sign(s))


class TestLemmas:
    """Bochner condition, eigenvalue-sum dominance and positive Ricci"""

    def test_bochner(self):
        assert bochner_condition(make_operator(np.eye(3), np.zeros((3, 3)), np.eye(3)))
        assert not bochner_condition(make_operator(np.diag([3.0, -1.0, -1.0]), np.zeros((3, 3)), np.eye(3) / 3.0))
        assert bochner_condition(make_operator(np.diag([2.0, 1.0, -0.5]), np.zeros((3, 3)), np.eye(3) * 2.5 / 3.0))

    def test_dominance_examples(self):
        check = eigen_sum_dominance(2 * np.eye(3), np.eye(3))
        assert check.holds_hypothesis
        assert (check.sum_abs_a, check.sum_abs_b) == (pytest.approx(6.0), pytest.approx(3.0))
        assert check.conclusion
        zero = eigen_sum_dominance(np.eye(3), np.zeros((3, 3)))
        assert zero.holds_hypothesis and zero.sum_abs_b == 0.0

    def test_dominance_hypothesis_fails(self):
        assert not eigen_sum_dominance(np.eye(3), 2 * np.eye(3)).holds_hypothesis

    def test_positive_einstein(self):
        check = ricci_positive_check([1, 1, 1, 1], np.zeros((3, 3)))
        assert check.premises
        assert check.min_lambda == 1.0

    def test_premises_fail(self):
        check = ricci_positive_check([3, 1, 1, -1], np.zeros((3, 3)))
        assert not check.premises
        assert check.min_lambda == -1.0
