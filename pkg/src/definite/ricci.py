"""
Ricci-operator analysis and the eigenvalue lemmas behind the positive case
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np

from src.core.config import get_settings
from src.curvature.operator import CurvatureOperator, as_matrix, decompose, from_ricci_spectrum
from src.definite.classification import d_operator

logger = logging.getLogger(__name__)


def ricci_operator_spectrum(lam: Sequence[float]) -> np.ndarray:
    """
    Eigenvalues of the Ricci operator on Lambda^2 from the Ricci eigenvalues.

    Args:
        lam: The four Ricci eigenvalues

    Returns:
        The six values (lam_i + lam_j)/2 - s/6, i < j, sorted descending
    """
    values = as_matrix("lambda", lam, shape=(4,))
    s = float(values.sum())
    pairs = [0.5 * (values[i] + values[j]) - s / 6.0 for i, j in itertools.combinations(range(4), 2)]
    return np.sort(np.array(pairs))[::-1]


def ricci_operator(R: CurvatureOperator) -> np.ndarray:
    """The Ricci part [[s/12, B^T], [B, s/12]] of R on Lambda^2"""
    s = decompose(R).s
    shift = s / 12.0 * np.eye(3)
    return np.block([[shift, R.B.T], [R.B, shift]])


def asd_ricci_criterion(R: CurvatureOperator, tol: Optional[float] = None) -> Dict[str, Any]:
    """
    Compare D-definiteness with definiteness of the Ricci operator.

    For operators with W+ = 0 the two are equivalent and share their sign.
    """
    tol = get_settings().tol if tol is None else tol
    d_eigs = np.linalg.eigvalsh(d_operator(R))
    ricci_eigs = np.linalg.eigvalsh(ricci_operator(R))
    d_positive = bool(d_eigs[0] > tol)
    if ricci_eigs[0] > tol:
        ricci_sign = 1
    elif ricci_eigs[-1] < -tol:
        ricci_sign = -1
    else:
        ricci_sign = 0
    return {
        'anti_self_dual': bool(np.allclose(decompose(R).Wplus, 0.0, atol=tol)),
        'd_positive': d_positive,
        'ricci_definite': ricci_sign != 0,
        'ricci_sign': ricci_sign,
        'agree': d_positive == (ricci_sign != 0),
    }


def bochner_condition(R: CurvatureOperator) -> bool:
    """True when the two lowest eigenvalues of A have positive sum"""
    evals = np.linalg.eigvalsh(R.A)
    return bool(evals[0] + evals[1] > 0)


@dataclass
class EigenSumDominance:
    """Eigenvalue sums for symmetric A, B with |Av| > |Bv|"""
    holds_hypothesis: bool
    sum_abs_a: float
    sum_abs_b: float

    @property
    def conclusion(self) -> bool:
        return self.sum_abs_a > self.sum_abs_b

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds_hypothesis': self.holds_hypothesis,
            'sum_abs_a': self.sum_abs_a,
            'sum_abs_b': self.sum_abs_b,
            'conclusion': self.conclusion,
        }


def eigen_sum_dominance(A: Any, B: Any) -> EigenSumDominance:
    """
    Check A^2 - B^2 > 0 and report sum |a_i| and sum |b_i|.

    Args:
        A: Symmetric 3x3 matrix
        B: Symmetric 3x3 matrix

    Returns:
        The hypothesis flag and both absolute eigenvalue sums
    """
    A = as_matrix("A", A)
    B = as_matrix("B", B)
    A, B = 0.5 * (A + A.T), 0.5 * (B + B.T)
    gap = A @ A - B @ B
    hypothesis = bool(np.linalg.eigvalsh(0.5 * (gap + gap.T))[0] > 0)
    return EigenSumDominance(
        holds_hypothesis=hypothesis,
        sum_abs_a=float(np.sum(np.abs(np.linalg.eigvalsh(A)))),
        sum_abs_b=float(np.sum(np.abs(np.linalg.eigvalsh(B)))),
    )


@dataclass
class RicciPositiveCheck:
    """Premises D > 0, A > 0 against the smallest Ricci eigenvalue"""
    premises: bool
    min_lambda: float

    def to_dict(self) -> Dict[str, Any]:
        return {'premises': self.premises, 'min_lambda': self.min_lambda}


def ricci_positive_check(
    lam: Sequence[float],
    Wplus: Any,
    tol: Optional[float] = None,
) -> RicciPositiveCheck:
    """
    Evaluate the premises of the positive-Ricci statement.

    The operator is assembled from the Ricci eigenvalues with W- = 0.
    """
    tol = get_settings().tol if tol is None else tol
    R = from_ricci_spectrum(lam, Wplus, np.zeros((3, 3)))
    premises = bool(
        np.linalg.eigvalsh(d_operator(R))[0] > tol and np.linalg.eigvalsh(R.A)[0] > tol
    )
    return RicciPositiveCheck(premises=premises, min_lambda=float(np.min(lam)))
