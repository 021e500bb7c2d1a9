"""
The D operator and the sign/orientation classification of definite connections
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import DegenerateBoundary
from src.curvature.operator import CurvatureOperator

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Whether the Levi-Civita connection on Lambda^+ is definite"""
    INDEFINITE = "Indefinite"
    DEFINITE = "Definite"


class Orientation(Enum):
    """Orientation induced by a definite connection, relative to the given one"""
    SAME = "Same"
    OPPOSITE = "Opposite"
    NA = "NA"


class Sign(Enum):
    """Sign of a definite connection"""
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NA = "NA"


def _sign_of(value: float) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.NA


def spectral_signature(eigenvalues: np.ndarray, tol: float) -> int:
    """Number of eigenvalues above tol minus number below -tol"""
    return int(np.sum(eigenvalues > tol)) - int(np.sum(eigenvalues < -tol))


@dataclass
class DefiniteClassification:
    """Outcome of classify()"""
    verdict: Verdict
    d_signature: int
    orientation: Orientation
    sign: Sign
    margin: float
    boundary: bool = False
    a_signature: int = 0
    d_eigenvalues: List[float] = field(default_factory=list)

    @property
    def is_definite(self) -> bool:
        return self.verdict is Verdict.DEFINITE

    @property
    def component(self) -> Optional[str]:
        """Connected component of the set of operators with D definite"""
        if self.orientation is Orientation.SAME:
            return f"D>0, sig(A)={self.a_signature:+d}"
        if self.orientation is Orientation.OPPOSITE:
            return f"D<0, det(B) {'>' if self.sign is Sign.POSITIVE else '<'} 0"
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'verdict': self.verdict.value,
            'd_signature': self.d_signature,
            'orientation': self.orientation.value,
            'sign': self.sign.value,
            'margin': self.margin,
            'boundary': self.boundary,
            'a_signature': self.a_signature,
            'component': self.component,
            'd_eigenvalues': list(self.d_eigenvalues),
        }


def d_operator(R: CurvatureOperator) -> np.ndarray:
    """D = A^2 - B^T B, symmetrized"""
    D = R.A @ R.A - R.B.T @ R.B
    return 0.5 * (D + D.T)


def classify(
    R: CurvatureOperator,
    tol: Optional[float] = None,
    strict: bool = False,
) -> DefiniteClassification:
    """
    Decide whether the Levi-Civita connection on Lambda^+ is definite.

    D > 0 means the connection induces the given orientation, with the sign of
    det A; D < 0 means it induces the opposite orientation, with the sign of
    det B in the fixed oriented bases of Lambda^+ and Lambda^-.

    Args:
        R: Curvature operator
        tol: Eigenvalues of D within tol of zero count as degenerate
        strict: Raise DegenerateBoundary instead of reporting a boundary verdict

    Returns:
        The classification
    """
    tol = get_settings().tol if tol is None else tol
    eigenvalues = np.linalg.eigvalsh(d_operator(R))
    margin = float(np.min(np.abs(eigenvalues)))
    signature = spectral_signature(eigenvalues, tol)
    a_signature = spectral_signature(np.linalg.eigvalsh(R.A), tol)

    if signature == 3:
        verdict, orientation = Verdict.DEFINITE, Orientation.SAME
        sign = _sign_of(float(np.linalg.det(R.A)))
    elif signature == -3:
        verdict, orientation = Verdict.DEFINITE, Orientation.OPPOSITE
        sign = _sign_of(float(np.linalg.det(R.B)))
    else:
        verdict, orientation, sign = Verdict.INDEFINITE, Orientation.NA, Sign.NA

    result = DefiniteClassification(
        verdict=verdict,
        d_signature=signature,
        orientation=orientation,
        sign=sign,
        margin=margin,
        boundary=margin <= tol,
        a_signature=a_signature,
        d_eigenvalues=[float(v) for v in eigenvalues],
    )
    if result.boundary:
        logger.warning("D operator degenerate: eigenvalues %s", result.d_eigenvalues)
        if strict:
            raise DegenerateBoundary(result)
    return result
