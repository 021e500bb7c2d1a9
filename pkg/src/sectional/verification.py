"""
Randomized verification of the 2/5 pinching theorem and its taming strengthening
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BadParams, SamplingExhausted, TheoremViolation
from src.core.sphere import fibonacci_sphere
from src.curvature.operator import (
    CurvatureOperator,
    make_operator,
    random_bianchi_operator,
    reverse_orientation,
)
from src.definite.classification import DefiniteClassification, Orientation, classify
from src.sectional.pinching import dual_bounds

logger = logging.getLogger(__name__)

PINCHING_CONSTANT = 0.4

# Extremal operator on the boundary of the definite cone; violates tr A = tr C
BOUNDARY_WITNESS = {
    'A': [[1.5, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]],
    'B': [[0.0] * 3 for _ in range(3)],
    'C': [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    'relaxed': True,
}


def boundary_witness() -> CurvatureOperator:
    return make_operator(BOUNDARY_WITNESS['A'], BOUNDARY_WITNESS['B'], BOUNDARY_WITNESS['C'], relaxed=True)


def certified_ratio(R: CurvatureOperator) -> Optional[float]:
    """
    Lower bound of min|sec| / max|sec| from the dual bounds.

    Returns:
        The bound, or None when the bounds do not certify a uniform sign
    """
    lower, upper = dual_bounds(R)
    if lower > 0:
        return lower / upper
    if upper < 0:
        return upper / lower
    return None


def strengthened_margins(R: CurvatureOperator, points: np.ndarray) -> Tuple[float, float]:
    """min of |<Au,u>| - |Bu| and of |<Cv,v>| - |B^T v| over the sampled unit vectors"""
    plus = np.abs(np.einsum("ij,jk,ik->i", points, R.A, points)) - np.linalg.norm(points @ R.B.T, axis=1)
    minus = np.abs(np.einsum("ij,jk,ik->i", points, R.C, points)) - np.linalg.norm(points @ R.B, axis=1)
    return float(np.min(plus)), float(np.min(minus))


@dataclass
class PinchingVerificationReport:
    """Outcome of verify_pinching_theorem"""
    samples: int
    seed: int
    strengthened: bool
    kept: int = 0
    drawn: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    min_d_margin: float = float("inf")
    min_strengthened_margin: Optional[float] = None
    min_kept_ratio: Optional[float] = None
    grid_points: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'samples': self.samples,
            'seed': self.seed,
            'strengthened': self.strengthened,
            'kept': self.kept,
            'drawn': self.drawn,
            'skipped': self.drawn - self.kept,
            'violations': self.violations,
            'margins': {
                'd_operator': self.min_d_margin if self.kept else None,
                'strengthened': self.min_strengthened_margin,
            },
            'min_kept_ratio': self.min_kept_ratio,
            'grid_points': self.grid_points,
        }


def _check_operator(
    R: CurvatureOperator,
    report: PinchingVerificationReport,
    points: Optional[np.ndarray],
    tol: float,
) -> Optional[str]:
    forward = classify(R, tol=tol)
    backward = classify(reverse_orientation(R), tol=tol)
    report.min_d_margin = min(report.min_d_margin, forward.margin, backward.margin)
    if forward.orientation is not Orientation.SAME or backward.orientation is not Orientation.SAME:
        return "D operator not positive definite in both orientations"
    if points is not None:
        margin = min(strengthened_margins(R, points))
        previous = report.min_strengthened_margin
        report.min_strengthened_margin = margin if previous is None else min(previous, margin)
        if margin <= 0:
            return "strengthened inequalities |<Au,u>| > |Bu|, |<Cv,v>| > |B^T v| fail"
    return None


def verify_pinching_theorem(
    n_samples: int,
    seed: int = 42,
    strengthened: bool = False,
    grid_n: Optional[int] = None,
    spread: float = 0.12,
    tol: Optional[float] = None,
    raise_on_violation: bool = True,
    draw_factor: int = 50,
) -> PinchingVerificationReport:
    """
    Check that strictly 2/5-pinched Bianchi operators are definite in both orientations.

    Draws continue until n_samples operators are kept. Draw i comes from a generator
    seeded with (seed, i) and uses a relative spread drawn from [0.1, 1] * spread, so
    the kept operators range from nearly round to close to the pinching constant.
    A draw is kept when the dual bounds certify a uniform sign and a ratio above 2/5.

    Args:
        n_samples: Number of operators to keep
        seed: Base seed
        strengthened: Also check the taming inequalities on a sphere lattice
        grid_n: Lattice resolution per axis for the strengthened check
        spread: Largest relative spread of the sampler
        tol: Definiteness tolerance
        raise_on_violation: Raise TheoremViolation on the first failure
        draw_factor: At most draw_factor * n_samples draws are made

    Returns:
        The verification report

    Raises:
        BadParams: n_samples or draw_factor below 1, or a non-positive spread
        SamplingExhausted: the draw cap is reached before n_samples are kept
    """
    if n_samples < 1:
        raise BadParams(f"n_samples must be at least 1, got {n_samples}")
    if draw_factor < 1:
        raise BadParams(f"draw_factor must be at least 1, got {draw_factor}")
    if spread <= 0:
        raise BadParams(f"spread must be positive, got {spread}")
    settings = get_settings()
    grid_n = settings.grid_n if grid_n is None else grid_n
    tol = settings.tol if tol is None else tol
    points = fibonacci_sphere(grid_n * grid_n) if strengthened else None
    report = PinchingVerificationReport(
        samples=n_samples,
        seed=seed,
        strengthened=strengthened,
        grid_points=0 if points is None else len(points),
    )

    max_draws = draw_factor * n_samples
    while report.kept < n_samples:
        if report.drawn >= max_draws:
            raise SamplingExhausted(
                f"kept {report.kept} of {n_samples} pinched operators after {report.drawn} draws"
            )
        index = report.drawn
        report.drawn += 1
        rng = np.random.default_rng([seed, index])
        R = random_bianchi_operator(rng, spread=spread * float(rng.uniform(0.1, 1.0)))
        ratio = certified_ratio(R)
        if ratio is None or ratio <= PINCHING_CONSTANT:
            continue
        report.kept += 1
        report.min_kept_ratio = ratio if report.min_kept_ratio is None else min(report.min_kept_ratio, ratio)
        failure = _check_operator(R, report, points, tol)
        if failure is None:
            continue
        violation = {'index': index, 'reason': failure, 'ratio': ratio, 'operator': R.to_dict()}
        report.violations.append(violation)
        logger.error("draw %d violates the pinching theorem: %s", index, failure)
        if raise_on_violation:
            raise TheoremViolation(failure, operator=R.to_dict())

    logger.info("pinching verification: kept %d of %d draws", report.kept, report.drawn)
    return report


@dataclass
class NearBoundaryWitness:
    """A nearly 2/5-pinched operator whose D operator is not definite in both orientations"""
    operator: CurvatureOperator
    ratio: float
    forward: DefiniteClassification
    backward: DefiniteClassification

    def to_dict(self) -> Dict[str, Any]:
        return {
            'operator': self.operator.to_dict(),
            'ratio': self.ratio,
            'forward': self.forward.to_dict(),
            'backward': self.backward.to_dict(),
        }


def search_near_boundary(
    seed: int = 0,
    attempts: int = 50,
    window: Tuple[float, float] = (0.39, 0.4),
) -> Optional[NearBoundaryWitness]:
    """
    Local search from the boundary witness for a counterexample just below 2/5.

    Random directions E are tried for B = delta * E with delta increasing
    geometrically; the first operator with ratio inside the window that fails
    two-sided definiteness is returned.
    """
    base = boundary_witness()
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        direction = rng.normal(size=(3, 3))
        direction /= np.linalg.norm(direction)
        for delta in np.geomspace(1e-4, 0.1, 40):
            R = make_operator(base.A, delta * direction, base.C, relaxed=True)
            ratio = certified_ratio(R)
            if ratio is None or not window[0] < ratio < window[1]:
                continue
            forward = classify(R)
            backward = classify(reverse_orientation(R))
            if forward.orientation is Orientation.SAME and backward.orientation is Orientation.SAME:
                continue
            return NearBoundaryWitness(R, ratio, forward, backward)
    return None
