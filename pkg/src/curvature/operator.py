"""
Algebraic curvature operators of oriented Riemannian four-manifolds.

An operator is stored in block form R = [[A, B^T], [B, C]] acting on
Lambda^2 = Lambda^+ (+) Lambda^-. The blocks live in the orthonormal bases
(th0^thi +- thj^thk)/sqrt(2), (i, jk) in ((1, 23), (2, 31), (3, 12)), where
the inner product on Lambda^2 makes th_a^th_b (a < b) orthonormal.
A = W+ + s/12, C = W- + s/12 and B is the trace-free Ricci operator.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Protocol, Sequence

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BadParams, BianchiViolation, DomainError, NonFinite

logger = logging.getLogger(__name__)

# (i, jk) complementary pairs of coordinate planes
PLANE_PAIRS = ((1, (2, 3)), (2, (3, 1)), (3, (1, 2)))


class RadialProfile(Protocol):
    """A positive radial function with its first two derivatives"""

    def value(self, r: Any) -> Any: ...

    def derivative(self, r: Any) -> Any: ...

    def second_derivative(self, r: Any) -> Any: ...


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


def as_matrix(name: str, value: Any, shape: Sequence[int] = (3, 3)) -> np.ndarray:
    """Coerce an input to a finite float array of the given shape"""
    try:
        matrix = np.array(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise BadParams(f"{name} is not numeric: {exc}") from exc
    if matrix.shape != tuple(shape):
        raise BadParams(f"{name} must have shape {tuple(shape)}, got {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFinite(f"{name} contains NaN or infinite entries")
    return matrix


@dataclass(frozen=True, eq=False)
class CurvatureOperator:
    """Symmetric operator on 2-forms in (A, B, C) block form"""
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    bianchi_relaxed: bool = False

    @property
    def matrix(self) -> np.ndarray:
        """The full symmetric 6x6 matrix [[A, B^T], [B, C]]"""
        return np.block([[self.A, self.B.T], [self.B, self.C]])

    @property
    def scalar_curvature(self) -> float:
        return 2.0 * float(np.trace(self.A) + np.trace(self.C))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'A': self.A.tolist(),
            'B': self.B.tolist(),
            'C': self.C.tolist(),
            'relaxed': self.bianchi_relaxed,
        }


@dataclass(frozen=True, eq=False)
class WeylScalarParts:
    """Trace-free Weyl blocks, trace-free Ricci block and scalar curvature"""
    Wplus: np.ndarray
    Wminus: np.ndarray
    ric0: np.ndarray
    s: float

    def reassemble(self, relaxed: bool = False) -> CurvatureOperator:
        shift = self.s / 12.0 * np.eye(3)
        return make_operator(self.Wplus + shift, self.ric0, self.Wminus + shift, relaxed=relaxed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'Wplus': self.Wplus.tolist(),
            'Wminus': self.Wminus.tolist(),
            'ric0': self.ric0.tolist(),
            's': self.s,
        }


def _assemble(A: np.ndarray, B: np.ndarray, C: np.ndarray, relaxed: bool) -> CurvatureOperator:
    return CurvatureOperator(
        A=_frozen(np.array(A, dtype=float)),
        B=_frozen(np.array(B, dtype=float)),
        C=_frozen(np.array(C, dtype=float)),
        bianchi_relaxed=relaxed,
    )


def make_operator(
    A: Any,
    B: Any,
    C: Any,
    relaxed: bool = False,
    identity_tol: Optional[float] = None,
) -> CurvatureOperator:
    """
    Build a validated curvature operator.

    Args:
        A: 3x3 block on Lambda^+ (symmetrized)
        B: 3x3 block Lambda^+ -> Lambda^- (stored as given)
        C: 3x3 block on Lambda^- (symmetrized)
        relaxed: Skip the Bianchi trace constraint tr A = tr C
        identity_tol: Relative tolerance of the trace check

    Returns:
        The operator

    Raises:
        NonFinite: NaN or infinite entries
        BianchiViolation: traces differ and relaxed is false
    """
    a = as_matrix("A", A)
    b = as_matrix("B", B)
    c = as_matrix("C", C)
    a = 0.5 * (a + a.T)
    c = 0.5 * (c + c.T)
    if not relaxed:
        tol = get_settings().identity_tol if identity_tol is None else identity_tol
        trace_a, trace_c = float(np.trace(a)), float(np.trace(c))
        if abs(trace_a - trace_c) > tol * max(1.0, abs(trace_a)):
            raise BianchiViolation(trace_a, trace_c)
    return _assemble(a, b, c, relaxed)


def decompose(R: CurvatureOperator) -> WeylScalarParts:
    """Split R into W+, W-, Ric0 and s = 2(tr A + tr C)"""
    trace_a, trace_c = np.trace(R.A), np.trace(R.C)
    return WeylScalarParts(
        Wplus=R.A - trace_a / 3.0 * np.eye(3),
        Wminus=R.C - trace_c / 3.0 * np.eye(3),
        ric0=np.array(R.B),
        s=R.scalar_curvature,
    )


def reverse_orientation(R: CurvatureOperator) -> CurvatureOperator:
    """Swap Lambda^+ and Lambda^-: (A, B, C) -> (C, B^T, A)"""
    return _assemble(R.C, R.B.T, R.A, R.bianchi_relaxed)


def rotate_frames(R: CurvatureOperator, P: np.ndarray, Q: np.ndarray) -> CurvatureOperator:
    """Change oriented orthonormal frames of Lambda^+ by P and of Lambda^- by Q"""
    P = as_matrix("P", P)
    Q = as_matrix("Q", Q)
    A = P @ R.A @ P.T
    C = Q @ R.C @ Q.T
    return _assemble(0.5 * (A + A.T), Q @ R.B @ P.T, 0.5 * (C + C.T), R.bianchi_relaxed)


def chern_weil_integrand(R: CurvatureOperator) -> float:
    """|W+|^2 + s^2/48 - |Ric0|^2, the trace of the D operator for Bianchi operators"""
    parts = decompose(R)
    return float(
        np.sum(parts.Wplus ** 2) + parts.s ** 2 / 48.0 - np.sum(parts.ric0 ** 2)
    )


def from_sectional_diagonal(
    K01: float, K02: float, K03: float, K23: float, K31: float, K12: float
) -> CurvatureOperator:
    """
    Operator of a curvature tensor diagonal in the coordinate basis of Lambda^2.

    Args:
        K01, K02, K03, K23, K31, K12: Sectional curvatures of the coordinate planes

    Returns:
        A = C = diag((K0i + Kjk)/2), B = diag((K0i - Kjk)/2)
    """
    values = as_matrix("sectional curvatures", [K01, K02, K03, K23, K31, K12], shape=(6,))
    radial, tangential = values[:3], values[3:]
    A = np.diag(0.5 * (radial + tangential))
    B = np.diag(0.5 * (radial - tangential))
    return _assemble(A, B, A.copy(), False)


def gromov_thurston_curvatures(r: float, sigma: RadialProfile) -> Dict[str, float]:
    """
    Plane curvatures of dr^2 + cosh^2(r) g_{H^2} + sigma(r)^2 dtheta^2.

    Coframe order is (dr, dx1, dx2, dtheta).
    """
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    value = float(sigma.value(r))
    if not np.isfinite(value) or value <= 0:
        raise DomainError(f"sigma({r}) = {value} is not positive")
    angular = -float(sigma.derivative(r)) / value * float(np.tanh(r))
    return {
        'K01': -1.0,
        'K02': -1.0,
        'K03': -float(sigma.second_derivative(r)) / value,
        'K23': angular,
        'K31': angular,
        'K12': -1.0,
    }


def gromov_thurston_operator(r: float, sigma: RadialProfile) -> CurvatureOperator:
    """Curvature operator of the ramified hyperbolic metric at radius r"""
    return from_sectional_diagonal(**gromov_thurston_curvatures(r, sigma))


def _trace_free_symmetric(name: str, value: Any) -> np.ndarray:
    matrix = as_matrix(name, value)
    matrix = 0.5 * (matrix + matrix.T)
    trace = float(np.trace(matrix))
    if abs(trace) > 1e-9 * max(1.0, float(np.linalg.norm(matrix))):
        raise BadParams(f"{name} must be trace-free, trace is {trace}")
    return matrix


def from_ricci_spectrum(lam: Sequence[float], Wplus: Any, Wminus: Any) -> CurvatureOperator:
    """
    Operator with prescribed Ricci eigenvalues in the paired SD/ASD eigenbases.

    Args:
        lam: Four Ricci eigenvalues (sorted descending internally)
        Wplus: Trace-free symmetric self-dual Weyl block
        Wminus: Trace-free symmetric anti-self-dual Weyl block

    Returns:
        The Bianchi operator with s = sum(lam)
    """
    values = np.sort(as_matrix("lambda", lam, shape=(4,)))[::-1]
    l1, l2, l3, l4 = values
    s = float(values.sum())
    B = np.diag([
        0.25 * (l1 + l2 - l3 - l4),
        0.25 * (l1 - l2 + l3 - l4),
        0.25 * (l1 - l2 - l3 + l4),
    ])
    shift = s / 12.0 * np.eye(3)
    return make_operator(
        _trace_free_symmetric("Wplus", Wplus) + shift,
        B,
        _trace_free_symmetric("Wminus", Wminus) + shift,
    )


def random_trace_free(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Gaussian trace-free symmetric 3x3 matrix"""
    m = rng.normal(size=(3, 3))
    m = 0.5 * (m + m.T)
    return scale * (m - np.trace(m) / 3.0 * np.eye(3))


def random_bianchi_operator(
    rng: np.random.Generator,
    spread: float = 0.25,
    s: Optional[float] = None,
) -> CurvatureOperator:
    """
    Sample a Bianchi operator.

    Args:
        rng: Random generator
        spread: Standard deviation of the W+, W-, B entries relative to |s|/12
        s: Scalar curvature; drawn uniformly from [-24, 24] when omitted

    Returns:
        A = W+ + s/12, B, C = W- + s/12
    """
    if s is None:
        s = float(rng.uniform(-24.0, 24.0))
    scale = spread * abs(s) / 12.0
    shift = s / 12.0 * np.eye(3)
    return _assemble(
        random_trace_free(rng, scale) + shift,
        scale * rng.normal(size=(3, 3)),
        random_trace_free(rng, scale) + shift,
        False,
    )


def operator_from_mapping(document: Dict[str, Any]) -> CurvatureOperator:
    """Build an operator from the block, sectional or Ricci-spectrum input forms"""
    relaxed = bool(document.get("relaxed", False))
    if "sectional" in document:
        return from_sectional_diagonal(*document["sectional"])
    if "ricci_spectrum" in document:
        spec = document["ricci_spectrum"]
        zero = np.zeros((3, 3))
        return from_ricci_spectrum(spec["lambda"], spec.get("Wplus", zero), spec.get("Wminus", zero))
    return make_operator(document["A"], document["B"], document["C"], relaxed=relaxed)
