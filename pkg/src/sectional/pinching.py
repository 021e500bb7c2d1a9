"""
Sectional curvature over decomposable 2-forms and pinching ratios.

A unit decomposable 2-form is (u + v)/sqrt(2) with u in Lambda^+, v in Lambda^-
unit vectors. Values are reported on the scale
sec(u + v) = <Au,u> + 2<Bu,v> + <Cv,v>, which is twice the usual sectional
curvature (the round sphere gives 2).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BadParams, DomainError, NotUnit
from src.core.sphere import (
    fibonacci_sphere,
    maximize_scalar,
    maximize_quadratic_on_sphere,
    minimize_quadratic_on_sphere,
)
from src.curvature.operator import CurvatureOperator, as_matrix, decompose

logger = logging.getLogger(__name__)

# Rows of the product lattice scanned per block
SCAN_CHUNK = 256
WEDGE_FORM = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0])


@dataclass
class PinchingReport:
    """Extremes of the sectional curvature of one operator"""
    min_sec: float
    max_sec: float
    ratio: Optional[float]
    sign_uniform: bool
    witnesses: Dict[str, Dict[str, list]]
    offsets: Optional[Dict[str, float]] = None
    dual_min: float = 0.0
    dual_max: float = 0.0
    grid_points: int = 0
    refine_iters: int = 0
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        report = {
            'min_sec': self.min_sec,
            'max_sec': self.max_sec,
            'ratio': self.ratio if self.ratio is not None else "Undefined",
            'sign_uniform': self.sign_uniform,
            'witnesses': self.witnesses,
            'offsets': self.offsets,
            'dual_bounds': {'min': self.dual_min, 'max': self.dual_max},
            'grid_points': self.grid_points,
            'refine_iters': self.refine_iters,
        }
        report.update(self.extras)
        return report


def sectional_value(
    R: CurvatureOperator,
    u: Any,
    v: Any,
    unit_tol: float = 1e-10,
) -> float:
    """
    <Au,u> + 2<Bu,v> + <Cv,v> for unit u in Lambda^+ and v in Lambda^-.

    Raises:
        NotUnit: |u| or |v| differs from 1 by more than unit_tol
    """
    u = as_matrix("u", u, shape=(3,))
    v = as_matrix("v", v, shape=(3,))
    for name, vector in (("u", u), ("v", v)):
        if abs(float(np.linalg.norm(vector)) - 1.0) > unit_tol:
            raise NotUnit(f"{name} has norm {np.linalg.norm(vector)}")
    return float(u @ R.A @ u + 2.0 * v @ R.B @ u + v @ R.C @ v)


def dual_bounds(R: CurvatureOperator) -> Tuple[float, float]:
    """
    Certified bounds from the wedge form Q = diag(I, -I), which vanishes on decomposables.

    For every t, min sec >= 2 lambda_min(R + tQ) and max sec <= 2 lambda_max(R + tQ);
    both are optimized over t by bounded scalar minimization. In dimension four the
    optimized bounds are the true extremes.

    Returns:
        (lower bound of min sec, upper bound of max sec)
    """
    M = R.matrix
    M = 0.5 * (M + M.T)
    reach = 2.0 * float(np.linalg.norm(M, 2)) + 1.0
    _, low = maximize_scalar(lambda t: float(np.linalg.eigvalsh(M + t * WEDGE_FORM)[0]), -reach, reach)
    _, neg_high = maximize_scalar(lambda t: float(np.linalg.eigvalsh(-M - t * WEDGE_FORM)[0]), -reach, reach)
    return 2.0 * low, -2.0 * neg_high


def _scan(R: CurvatureOperator, points: np.ndarray):
    diag_a = np.einsum("ij,jk,ik->i", points, R.A, points)
    diag_c = np.einsum("ij,jk,ik->i", points, R.C, points)
    images = points @ R.B.T
    low = (np.inf, 0, 0)
    high = (-np.inf, 0, 0)
    for start in range(0, len(points), SCAN_CHUNK):
        block = diag_a[start:start + SCAN_CHUNK, None] + 2.0 * images[start:start + SCAN_CHUNK] @ points.T
        block += diag_c[None, :]
        i_min, j_min = np.unravel_index(int(np.argmin(block)), block.shape)
        i_max, j_max = np.unravel_index(int(np.argmax(block)), block.shape)
        if block[i_min, j_min] < low[0]:
            low = (float(block[i_min, j_min]), start + int(i_min), int(j_min))
        if block[i_max, j_max] > high[0]:
            high = (float(block[i_max, j_max]), start + int(i_max), int(j_max))
    return low, high


def _alternate(R: CurvatureOperator, u: np.ndarray, v: np.ndarray, iters: int, maximize: bool):
    """Alternate exact optimization over v for fixed u and over u for fixed v"""
    solve = maximize_quadratic_on_sphere if maximize else minimize_quadratic_on_sphere
    sign = 1.0 if maximize else -1.0
    value = float(u @ R.A @ u + 2.0 * v @ R.B @ u + v @ R.C @ v)
    for _ in range(iters):
        v = solve(R.C, R.B @ u)
        u = solve(R.A, R.B.T @ v)
        updated = float(u @ R.A @ u + 2.0 * v @ R.B @ u + v @ R.C @ v)
        improvement = sign * (updated - value)
        value = updated
        if improvement <= 1e-15 * max(1.0, abs(value)):
            break
    return u, v, value


def _offsets(R: CurvatureOperator, min_sec: float, max_sec: float) -> Optional[Dict[str, float]]:
    s = decompose(R).s
    if s == 0.0:
        return None
    kappa = 12.0 / s
    a = np.linalg.eigvalsh(kappa * R.A)
    c = np.linalg.eigvalsh(kappa * R.C)
    low, high = sorted((kappa * min_sec, kappa * max_sec))
    return {
        'a1': float(a[-1] - 1.0),
        'a2': float(1.0 - a[0]),
        'c1': float(c[-1] - 1.0),
        'c2': float(1.0 - c[0]),
        'normalized_min_sec': low,
        'normalized_max_sec': high,
    }


def sectional_extrema(
    R: CurvatureOperator,
    grid_n: Optional[int] = None,
    refine_iters: Optional[int] = None,
) -> PinchingReport:
    """
    Minimum and maximum of sec(u + v) over S^2 x S^2.

    A product of Fibonacci lattices with grid_n^2 points each is scanned, then the
    best pairs are refined by alternating exact sphere-quadratic steps.

    Args:
        R: Curvature operator
        grid_n: Lattice resolution per axis (at least 16)
        refine_iters: Maximum alternating steps

    Returns:
        The pinching report
    """
    settings = get_settings()
    grid_n = settings.grid_n if grid_n is None else grid_n
    refine_iters = settings.refine_iters if refine_iters is None else refine_iters
    if grid_n < 16:
        raise BadParams(f"grid_n must be at least 16, got {grid_n}")

    points = fibonacci_sphere(grid_n * grid_n)
    low, high = _scan(R, points)
    u_min, v_min, min_sec = _alternate(R, points[low[1]], points[low[2]], refine_iters, maximize=False)
    u_max, v_max, max_sec = _alternate(R, points[high[1]], points[high[2]], refine_iters, maximize=True)
    min_sec, max_sec = min(min_sec, low[0]), max(max_sec, high[0])

    dual_min, dual_max = dual_bounds(R)
    if min_sec - dual_min > 1e-6 or dual_max - max_sec > 1e-6:
        logger.warning(
            "sectional extrema [%.9f, %.9f] not matched by dual bounds [%.9f, %.9f]",
            min_sec, max_sec, dual_min, dual_max,
        )

    sign_uniform = min_sec > 0 or max_sec < 0
    ratio = None
    offsets = None
    if sign_uniform:
        magnitudes = sorted((abs(min_sec), abs(max_sec)))
        ratio = magnitudes[0] / magnitudes[1]
        offsets = _offsets(R, min_sec, max_sec)
    return PinchingReport(
        min_sec=min_sec,
        max_sec=max_sec,
        ratio=ratio,
        sign_uniform=sign_uniform,
        witnesses={
            'min': {'u': u_min.tolist(), 'v': v_min.tolist()},
            'max': {'u': u_max.tolist(), 'v': v_max.tolist()},
        },
        offsets=offsets,
        dual_min=dual_min,
        dual_max=dual_max,
        grid_points=len(points),
        refine_iters=refine_iters,
    )


def pinching_ratio(
    R: CurvatureOperator,
    grid_n: Optional[int] = None,
    refine_iters: Optional[int] = None,
) -> Optional[float]:
    """min|sec| / max|sec|, or None when the sectional curvature changes sign"""
    return sectional_extrema(R, grid_n, refine_iters).ratio


def proof_inequalities(R: CurvatureOperator, tol: float = 1e-9) -> Dict[str, Any]:
    """
    The three normalized extremal inequalities used in the 2/5 pinching argument.

    With s normalized to 12 and eigenvalues 1 + a1 >= ... >= 1 - a2 of A and
    1 + c1 >= ... >= 1 - c2 of C:
    max sec >= 2 + a1 + c1, min sec <= 2 - a2 - c2, and for operators on the
    boundary of definiteness with A, C >= 0, min sec <= c1 + a2 or min sec <= a1 + c2.
    """
    lower, upper = dual_bounds(R)
    offsets = _offsets(R, lower, upper)
    if offsets is None:
        raise DomainError("scalar curvature vanishes; normalization to s = 12 undefined")
    low, high = offsets['normalized_min_sec'], offsets['normalized_max_sec']
    a1, a2, c1, c2 = offsets['a1'], offsets['a2'], offsets['c1'], offsets['c2']
    return {
        'offsets': offsets,
        'max_bound': high >= 2.0 + a1 + c1 - tol,
        'min_bound': low <= 2.0 - a2 - c2 + tol,
        'boundary_bound': low <= c1 + a2 + tol or low <= a1 + c2 + tol,
    }
