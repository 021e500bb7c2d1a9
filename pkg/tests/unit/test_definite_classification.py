"""
Unit tests for the D operator and the definiteness classification
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core.exceptions import DegenerateBoundary
from src.curvature.operator import (
    from_sectional_diagonal,
    gromov_thurston_operator,
    make_operator,
    random_bianchi_operator,
    reverse_orientation,
    rotate_frames,
)
from src.cohomogeneity.families import SigmaProfile
from src.definite.classification import Orientation, Sign, Verdict, classify, d_operator

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


class TestDOperator:
    """D = A^2 - B^T B"""

    def test_round(self, round_operator):
        np.testing.assert_array_equal(d_operator(round_operator), np.eye(3))

    def test_witness(self, witness_operator):
        np.testing.assert_allclose(d_operator(witness_operator), np.diag([2.25, 1.0, 0.0]))
        assert np.min(np.linalg.eigvalsh(d_operator(witness_operator))) == pytest.approx(0.0, abs=1e-12)

    def test_tilted(self, tilted_operator):
        np.testing.assert_allclose(d_operator(tilted_operator), np.diag([0.75, 1.0, 1.0]))


class TestClassify:
    """Verdict, orientation and sign"""

    def test_round_positive(self, round_operator):
        result = classify(round_operator)
        assert result.verdict is Verdict.DEFINITE
        assert result.orientation is Orientation.SAME
        assert result.sign is Sign.POSITIVE
        assert result.margin == pytest.approx(1.0)
        assert result.component == "D>0, sig(A)=+3"

    def test_hyperbolic_negative(self, hyperbolic_operator):
        result = classify(hyperbolic_operator)
        assert result.is_definite
        assert result.sign is Sign.NEGATIVE
        assert result.component == "D>0, sig(A)=-3"

    def test_witness_is_boundary(self, witness_operator):
        result = classify(witness_operator)
        assert result.verdict is Verdict.INDEFINITE
        assert result.boundary

    def test_witness_strict(self, witness_operator):
        with pytest.raises(DegenerateBoundary) as info:
            classify(witness_operator, strict=True)
        assert info.value.classification.boundary

    def test_opposite_orientation(self):
        R = make_operator(np.zeros((3, 3)), np.eye(3), np.zeros((3, 3)))
        result = classify(R)
        assert result.orientation is Orientation.OPPOSITE
        assert result.d_signature == -3
        assert result.sign is Sign.POSITIVE
        flipped = classify(make_operator(np.zeros((3, 3)), -np.eye(3), np.zeros((3, 3))))
        assert flipped.sign is Sign.NEGATIVE
        assert flipped.component == "D<0, det(B) < 0"

    def test_mixed_signature(self):
        R = make_operator(np.diag([2.0, 0.1, 0.1]), np.diag([0.0, 1.0, 0.0]), np.diag([0.8, 0.8, 0.6]))
        result = classify(R)
        assert result.verdict is Verdict.INDEFINITE
        assert result.orientation is Orientation.NA
        assert not result.boundary

    def test_gromov_thurston_both_orientations(self):
        sigma = SigmaProfile.gromov_thurston(3, 6.0)
        for r in np.linspace(0.1, 8.0, 50):
            R = gromov_thurston_operator(float(r), sigma)
            for operator in (R, reverse_orientation(R)):
                result = classify(operator)
                assert result.is_definite
                assert result.sign is Sign.NEGATIVE

    def test_sectional_negative_definite(self):
        result = classify(from_sectional_diagonal(-1, -1, -1, -2, -1, -1))
        assert result.orientation is Orientation.SAME
        assert result.sign is Sign.NEGATIVE

    @given(seed=seeds)
    @settings(max_examples=60, deadline=None)
    def test_frame_invariance(self, seed):
        rng = np.random.default_rng(seed)
        R = random_bianchi_operator(rng, spread=0.6)
        rotated = rotate_frames(R, random_rotation(rng), random_rotation(rng))
        before, after = classify(R), classify(rotated)
        if before.margin > 1e-6:
            assert (before.verdict, before.orientation, before.sign) == (after.verdict, after.orientation, after.sign)

    @given(seed=seeds, scale=st.floats(min_value=0.1, max_value=10.0))
    @settings(max_examples=60, deadline=None)
    def test_scaling(self, seed, scale):
        R = random_bianchi_operator(np.random.default_rng(seed), spread=0.6)
        base = classify(R)
        if base.margin < 1e-6 or not base.is_definite:
            return
        positive = classify(make_operator(scale * R.A, scale * R.B, scale * R.C))
        negative = classify(make_operator(-scale * R.A, -scale * R.B, -scale * R.C))
        assert (positive.orientation, positive.sign) == (base.orientation, base.sign)
        if base.orientation is Orientation.SAME:
            assert negative.sign is not base.sign

    def test_report_dict(self, round_operator):
        report = classify(round_operator).to_dict()
        assert report['verdict'] == "Definite"
        assert report['orientation'] == "Same"
        assert report['sign'] == "Positive"
        assert len(report['d_eigenvalues']) == 3
