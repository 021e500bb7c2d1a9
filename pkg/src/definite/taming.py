"""
Taming of the twistor almost complex structures J+ and J-
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BadParams
from src.core.sphere import coordinate_descent, fibonacci_sphere
from src.curvature.operator import CurvatureOperator, as_matrix

logger = logging.getLogger(__name__)


class TamedStructure(Enum):
    """Almost complex structure tamed by the twistor 2-form"""
    JPLUS = "Jplus"
    JMINUS = "Jminus"
    NONE = "None"


@dataclass
class TamingReport:
    """Minimum of |<Av,v>| - |Bv| over unit v in Lambda^+"""
    margin: float
    tamed_structure: TamedStructure
    argmin_v: List[float]
    grid_points: int
    refine_iters: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'margin': self.margin,
            'tamed_structure': self.tamed_structure.value,
            'argmin_v': list(self.argmin_v),
            'grid_points': self.grid_points,
            'refine_iters': self.refine_iters,
        }


def _gap(A: np.ndarray, B: np.ndarray, v: np.ndarray) -> float:
    return abs(float(v @ A @ v)) - float(np.linalg.norm(B @ v))


def _null_directions(A: np.ndarray) -> List[np.ndarray]:
    """Eigenvectors of A and, when A is indefinite, a unit vector with <Av,v> = 0"""
    evals, evecs = np.linalg.eigh(A)
    candidates = [evecs[:, k] for k in range(3)]
    low, high = float(evals[0]), float(evals[-1])
    if low < 0.0 < high:
        angle = np.arctan(np.sqrt(high / -low))
        candidates.append(np.cos(angle) * evecs[:, -1] + np.sin(angle) * evecs[:, 0])
    return candidates


def taming_margin(
    R: CurvatureOperator,
    grid_n: Optional[int] = None,
    refine_iters: Optional[int] = None,
    tol: Optional[float] = None,
) -> TamingReport:
    """
    Minimize g(v) = |<Av,v>| - |Bv| over the unit sphere of Lambda^+.

    A Fibonacci lattice of grid_n^2 points is scanned, the best point refined by
    projected coordinate descent, and the eigenvectors of A (plus a point of its
    null cone when A is indefinite) are added as candidates, since g is not smooth
    where <Av,v> vanishes.

    Args:
        R: Curvature operator
        grid_n: Lattice resolution per axis (at least 16)
        refine_iters: Coordinate-descent iterations
        tol: The operator tames J+ or J- only if the margin exceeds tol

    Returns:
        The taming report
    """
    settings = get_settings()
    grid_n = settings.grid_n if grid_n is None else grid_n
    refine_iters = settings.refine_iters if refine_iters is None else refine_iters
    tol = settings.tol if tol is None else tol
    if grid_n < 16:
        raise BadParams(f"grid_n must be at least 16, got {grid_n}")

    A, B = R.A, R.B
    points = fibonacci_sphere(grid_n * grid_n)
    values = np.abs(np.einsum("ij,jk,ik->i", points, A, points)) - np.linalg.norm(points @ B.T, axis=1)
    start = points[int(np.argmin(values))]
    best, best_value = coordinate_descent(lambda v: _gap(A, B, v), start, refine_iters)

    for candidate in _null_directions(A):
        value = _gap(A, B, candidate)
        if value < best_value:
            best, best_value = candidate, value

    det_a = float(np.linalg.det(A))
    if best_value > tol and det_a > 0:
        structure = TamedStructure.JPLUS
    elif best_value > tol and det_a < 0:
        structure = TamedStructure.JMINUS
    else:
        structure = TamedStructure.NONE
    logger.debug("taming margin %.3e on %d lattice points", best_value, len(points))
    return TamingReport(
        margin=float(best_value),
        tamed_structure=structure,
        argmin_v=[float(x) for x in best],
        grid_points=len(points),
        refine_iters=refine_iters,
    )


def tame_pointwise(c: float, alpha: Sequence[float]) -> bool:
    """
    Whether c*w0 + alpha tames the model complex structure of sign(c).

    alpha is given in the basis ASD_BASIS, which has the same norm as w0; the
    condition is |alpha| < |c|.
    """
    return float(np.linalg.norm(as_matrix("alpha", alpha, shape=(3,)))) < abs(float(c))


def _two_form(pairs: Dict[tuple, float]) -> np.ndarray:
    form = np.zeros((4, 4))
    for (a, b), weight in pairs.items():
        form[a, b] += weight
        form[b, a] -= weight
    return form


# Self-dual form of the model complex structure and the anti-self-dual basis of R^4
OMEGA_0 = _two_form({(0, 1): 1.0, (2, 3): 1.0})
ASD_BASIS = (
    _two_form({(0, 1): 1.0, (2, 3): -1.0}),
    _two_form({(0, 2): 1.0, (3, 1): -1.0}),
    _two_form({(0, 3): 1.0, (1, 2): -1.0}),
)


def taming_form_spectrum(c: float, alpha: Sequence[float]) -> float:
    """
    min over unit u of w(Ju, u) for w = c*w0 + sum alpha_k asd_k.

    J is the complex structure with matrix sign(c)*w0, so the value equals
    |c| - |alpha| and is positive exactly when tame_pointwise holds.
    """
    alpha = as_matrix("alpha", alpha, shape=(3,))
    form = float(c) * OMEGA_0 + sum(a * basis for a, basis in zip(alpha, ASD_BASIS))
    J = (1.0 if c >= 0 else -1.0) * OMEGA_0
    pairing = J.T @ form
    return float(np.linalg.eigvalsh(0.5 * (pairing + pairing.T))[0])
