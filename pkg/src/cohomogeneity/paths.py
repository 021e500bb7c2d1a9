"""
Connection paths induced on Lambda^+ and Lambda^- and the definite-path criterion.

A path a = (a1, a2, a3) defines the connection d + sum a_i e_i (x) eps_i on the
cylinder over SU(2). It is definite when every q_i = a_i' (a_i + a_j a_k) is
non-zero with one common sign.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import BadParams, DomainError, OutOfRange
from src.cohomogeneity.families import MetricFamily

logger = logging.getLogger(__name__)

CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))

PathFn = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]


class Bundle(str, Enum):
    LAMBDA_PLUS = "LambdaPlus"
    LAMBDA_MINUS = "LambdaMinus"
    DIRECT = "Direct"


@dataclass(frozen=True, eq=False)
class ConnectionPath:
    """Coefficients a_i(r) with derivatives, from a family or given directly"""
    bundle_tag: Bundle
    coefficients: PathFn
    interval: Tuple[float, float]
    source: str = ""

    def evaluate(self, r: Any) -> Tuple[np.ndarray, np.ndarray]:
        """
        Returns:
            (a, a'), each of shape (3, len(r))
        """
        grid = np.atleast_1d(np.asarray(r, dtype=float))
        lo, hi = self.interval
        if np.any(grid <= lo) or np.any(grid >= hi):
            raise DomainError(f"path {self.source}: radii must lie in {self.interval}")
        a, da = self.coefficients(grid)
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(da))):
            raise DomainError(f"path {self.source} is not finite on the grid")
        return a, da

    def q_values(self, r: Any) -> np.ndarray:
        """q_i = a_i' (a_i + a_j a_k), shape (3, len(r))"""
        a, da = self.evaluate(r)
        return np.vstack([da[i] * (a[i] + a[j] * a[k]) for i, j, k in CYCLIC])


@dataclass
class PathVerdict:
    """Outcome of the definite-path test on a grid"""
    definite: bool
    common_sign_of_q: Optional[str]
    margin: float
    grid_points: int = 0
    r_range: Tuple[float, float] = (0.0, 0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'definite': self.definite,
            'common_sign_of_q': self.common_sign_of_q,
            'margin': self.margin,
            'grid_points': self.grid_points,
            'r_range': list(self.r_range),
        }


def connection_path(fam: MetricFamily, bundle: Bundle) -> ConnectionPath:
    """
    Path of the Levi-Civita connection on Lambda^+ or Lambda^-.

    a_i = -+ f_i'/2 + (f_i^2 - f_j^2 - f_k^2) / (2 f_j f_k), upper sign on Lambda^+.

    Raises:
        DomainError: on evaluation, where some f_j f_k vanishes
    """
    bundle = Bundle(bundle)
    if bundle is Bundle.DIRECT:
        raise BadParams("connection_path needs LambdaPlus or LambdaMinus")
    sign = -1.0 if bundle is Bundle.LAMBDA_PLUS else 1.0

    def coefficients(r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        values = fam.evaluate(r)
        f, df, ddf = values.f, values.df, values.ddf
        a = np.empty_like(f)
        da = np.empty_like(f)
        for i, j, k in CYCLIC:
            denom = 2.0 * f[j] * f[k]
            if np.any(denom == 0):
                raise DomainError(f"{fam.name}: f{j + 1} f{k + 1} vanishes on the grid")
            numer = f[i] ** 2 - f[j] ** 2 - f[k] ** 2
            d_numer = 2.0 * (f[i] * df[i] - f[j] * df[j] - f[k] * df[k])
            d_denom = 2.0 * (df[j] * f[k] + f[j] * df[k])
            a[i] = sign * 0.5 * df[i] + numer / denom
            da[i] = sign * 0.5 * ddf[i] + (d_numer * denom - numer * d_denom) / (denom * denom)
        return a, da

    return ConnectionPath(
        bundle_tag=bundle,
        coefficients=coefficients,
        interval=fam.interval,
        source=f"{fam.name}/{bundle.value}",
    )


def default_r_grid(fam: Optional[MetricFamily] = None, points: Optional[int] = None) -> np.ndarray:
    """The settings' radius grid, clamped to the family's interval"""
    settings = get_settings()
    lo, hi = settings.r_min, settings.r_max
    if fam is not None:
        lo = max(lo, fam.interval[0] + settings.r_min)
        hi = min(hi, fam.interval[1] - settings.r_min)
    return np.linspace(lo, hi, settings.r_points if points is None else points)


def definite_path_margin(
    path: ConnectionPath,
    r_grid: Sequence[float],
    tol: Optional[float] = None,
) -> PathVerdict:
    """
    Evaluate q_i on the grid.

    Values with |q| <= tol count as zero.

    Returns:
        Definite iff all 3 * len(grid) values share a strict sign; margin = min |q_i|
    """
    grid = np.asarray(r_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise BadParams("r_grid needs at least two radii")
    tol = get_settings().tol if tol is None else tol
    q = path.q_values(grid)
    margin = float(np.min(np.abs(q)))
    sign = None
    if margin > tol:
        if np.all(q > 0):
            sign = "+"
        elif np.all(q < 0):
            sign = "-"
    logger.debug("path %s: margin %.3e, sign %s", path.source, margin, sign)
    return PathVerdict(
        definite=sign is not None,
        common_sign_of_q=sign,
        margin=margin,
        grid_points=int(grid.size),
        r_range=(float(grid[0]), float(grid[-1])),
    )


def isotopy_path(t: float) -> ConnectionPath:
    """
    Linear isotopy from the H^4 path (t = 0) to the complex hyperbolic path (t = 1) on Lambda^+.

    Raises:
        OutOfRange: t outside [0, 1]
    """
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise OutOfRange(f"isotopy parameter must lie in [0, 1], got {t}")

    def coefficients(r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        ch, sh = np.cosh(r), np.sinh(r)
        base = -0.5 * (1.0 + ch)
        a1 = base + 0.5 * t * ch * (1.0 - ch)
        a23 = base + 0.5 * t * (1.0 - ch)
        da1 = -0.5 * sh + 0.5 * t * sh * (1.0 - 2.0 * ch)
        da23 = -0.5 * sh * (1.0 + t)
        return np.vstack([a1, a23, a23]), np.vstack([da1, da23, da23])

    return ConnectionPath(
        bundle_tag=Bundle.DIRECT,
        coefficients=coefficients,
        interval=(0.0, np.inf),
        source=f"isotopy(t={t:g})",
    )


def isotopy_sweep(
    t_values: Sequence[float],
    r_grid: Optional[Sequence[float]] = None,
    tol: Optional[float] = None,
) -> List[PathVerdict]:
    """Definite-path verdicts along the isotopy, one per t"""
    grid = default_r_grid() if r_grid is None else r_grid
    return [definite_path_margin(isotopy_path(t), grid, tol=tol) for t in t_values]
