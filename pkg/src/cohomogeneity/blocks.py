"""
Curvature blocks of an SU(2)-invariant metric from its induced connection paths.

In the coframe (dr, f_i e_i) the curvature of the path on Lambda^+ has components
radial_i = a_i' / f_i on dr^e_i and tangential_i = (a_i + a_j a_k) / (f_j f_k) on
e_j^e_k. The blocks are diagonal:

    A_ii = s+ (radial_i + w tangential_i),   B_ii = s+ (radial_i - w tangential_i)

and on Lambda^- C_ii = s- (radial_i - w tangential_i), with s- (radial_i + w tangential_i)
reproducing B^T. The weight w and the signs s+, s- are fixed by the hyperbolic metric.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BianchiViolation, DomainError
from src.curvature.operator import CurvatureOperator, make_operator
from src.cohomogeneity.families import MetricFamily, builtin_family
from src.cohomogeneity.paths import CYCLIC, Bundle, connection_path

logger = logging.getLogger(__name__)

CALIBRATION_RADIUS = 1.0


@dataclass(frozen=True)
class CalibrationConstants:
    """Weight of the tangential part and overall signs on Lambda^+ and Lambda^-"""
    curvature_weight: float = -2.0
    plus_sign: float = 1.0
    minus_sign: float = -1.0

    @classmethod
    def calibrated(cls, r: float = CALIBRATION_RADIUS) -> "CalibrationConstants":
        """
        Derive the constants from H^4 at radius r.

        The weight makes B vanish (H^4 is Einstein); the signs make A and C negative.
        """
        hyperbolic = builtin_family("H4")
        radial, tangential = _path_components(hyperbolic, Bundle.LAMBDA_PLUS, r)
        weight = float(radial[0] / tangential[0])
        plus = -float(np.sign(radial[0] + weight * tangential[0]))
        radial_m, tangential_m = _path_components(hyperbolic, Bundle.LAMBDA_MINUS, r)
        minus = -float(np.sign(radial_m[0] - weight * tangential_m[0]))
        return cls(curvature_weight=weight, plus_sign=plus, minus_sign=minus)


@dataclass(frozen=True)
class BlockResiduals:
    """Consistency of the two paths: tr A - tr C and |B - B^T from Lambda^-|"""
    trace_gap: float
    transpose_mismatch: float

    def to_dict(self) -> Dict[str, Any]:
        return {'trace_gap': self.trace_gap, 'transpose_mismatch': self.transpose_mismatch}


def _path_components(fam: MetricFamily, bundle: Bundle, r: float) -> Tuple[np.ndarray, np.ndarray]:
    path = connection_path(fam, bundle)
    a, da = path.evaluate(r)
    f = fam.evaluate(r).f
    a, da, f = a[:, 0], da[:, 0], f[:, 0]
    radial = np.empty(3)
    tangential = np.empty(3)
    for i, j, k in CYCLIC:
        radial[i] = da[i] / f[i]
        tangential[i] = (a[i] + a[j] * a[k]) / (f[j] * f[k])
    return radial, tangential


def _diagonal_blocks(
    fam: MetricFamily, r: float, calib: CalibrationConstants
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    if np.ndim(r) != 0:
        raise DomainError("reconstruct_blocks takes a single radius")
    w = calib.curvature_weight
    radial, tangential = _path_components(fam, Bundle.LAMBDA_PLUS, r)
    radial_m, tangential_m = _path_components(fam, Bundle.LAMBDA_MINUS, r)
    A = calib.plus_sign * (radial + w * tangential)
    B = calib.plus_sign * (radial - w * tangential)
    C = calib.minus_sign * (radial_m - w * tangential_m)
    B_from_minus = calib.minus_sign * (radial_m + w * tangential_m)
    return np.diag(A), np.diag(B), np.diag(C), np.diag(B_from_minus)


def reconstruct_blocks(
    fam: MetricFamily,
    r: float,
    calib: Optional[CalibrationConstants] = None,
) -> CurvatureOperator:
    """
    Curvature operator of the family's metric at radius r.

    The operator is Bianchi-checked with the settings' tolerance; when the two
    paths disagree on the trace it is returned relaxed and a warning is logged.

    Raises:
        DomainError: r outside the family's interval
    """
    calib = calib or CalibrationConstants()
    A, B, C, _ = _diagonal_blocks(fam, r, calib)
    try:
        return make_operator(A, B, C, identity_tol=get_settings().tol)
    except BianchiViolation as exc:
        logger.warning("%s at r=%g: %s; returning relaxed operator", fam.name, r, exc)
        return make_operator(A, B, C, relaxed=True)


def block_residuals(
    fam: MetricFamily,
    r: float,
    calib: Optional[CalibrationConstants] = None,
) -> BlockResiduals:
    """How far the Lambda^+ and Lambda^- readings of the same curvature disagree"""
    A, B, C, B_from_minus = _diagonal_blocks(fam, r, calib or CalibrationConstants())
    return BlockResiduals(
        trace_gap=float(np.trace(A) - np.trace(C)),
        transpose_mismatch=float(np.linalg.norm(B - B_from_minus.T)),
    )
