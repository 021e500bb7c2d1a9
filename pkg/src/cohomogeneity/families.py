"""
SU(2)-invariant metrics dr^2 + f1^2 e1^2 + f2^2 e2^2 + f3^2 e3^2 and radial profiles
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.interpolate import CubicSpline

from src.core.exceptions import BadParams, DomainError

logger = logging.getLogger(__name__)

ArrayFn = Callable[[np.ndarray], np.ndarray]

BUILTIN_FAMILIES = ("S4", "H4", "CP2", "CH2", "On", "GromovThurston")


@dataclass(frozen=True)
class ProfileValues:
    """f, f' and f'' of the three profiles, each of shape (3, len(r))"""
    f: np.ndarray
    df: np.ndarray
    ddf: np.ndarray


@dataclass(frozen=True, eq=False)
class MetricFamily:
    """
    Three positive radial profiles on an open interval.

    Each profile is a triple of vectorized callables (value, first, second derivative).
    """
    name: str
    profiles: Tuple[Tuple[ArrayFn, ArrayFn, ArrayFn], ...]
    interval: Tuple[float, float]
    params: Dict[str, Any] = field(default_factory=dict)

    def contains(self, r: np.ndarray) -> bool:
        lo, hi = self.interval
        return bool(np.all((r > lo) & (r < hi)))

    def evaluate(self, r: Any) -> ProfileValues:
        """
        Evaluate the profiles on a radius grid.

        Raises:
            DomainError: a radius lies outside the open interval, or a profile is not positive and finite
        """
        grid = np.atleast_1d(np.asarray(r, dtype=float))
        if not self.contains(grid):
            raise DomainError(f"{self.name}: radii must lie in the open interval {self.interval}")
        values = [np.vstack([np.broadcast_to(fn(grid), grid.shape) for fn in part]) for part in zip(*self.profiles)]
        f, df, ddf = values
        if not (np.all(np.isfinite(f)) and np.all(np.isfinite(df)) and np.all(np.isfinite(ddf))):
            raise DomainError(f"{self.name}: profiles are not finite on the grid")
        if np.any(f <= 0):
            raise DomainError(f"{self.name}: profiles must be positive on the grid")
        return ProfileValues(f=f, df=df, ddf=ddf)

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'interval': list(self.interval), 'params': self.params}

    @classmethod
    def from_table(
        cls,
        r: Sequence[float],
        f1: Sequence[float],
        f2: Sequence[float],
        f3: Sequence[float],
        name: str = "table",
        fd_step: Optional[float] = None,
    ) -> "MetricFamily":
        """
        Family sampled on a strictly increasing grid.

        Without fd_step, derivatives are second-order finite differences on the nodes
        (np.gradient with edge_order=2) and values between nodes are linear interpolants.
        With fd_step, each column is a cubic spline through the nodes and derivatives
        are central differences of the spline with that step.
        """
        if fd_step is not None and not fd_step > 0:
            raise BadParams(f"fd_step must be positive, got {fd_step}")
        nodes = np.asarray(r, dtype=float)
        if nodes.ndim != 1 or nodes.size < 3:
            raise BadParams("table needs at least three radii")
        if not np.all(np.isfinite(nodes)) or np.any(np.diff(nodes) <= 0):
            raise BadParams("table radii must be finite and strictly increasing")
        profiles = []
        for label, column in (("f1", f1), ("f2", f2), ("f3", f3)):
            values = np.asarray(column, dtype=float)
            if values.shape != nodes.shape:
                raise BadParams(f"{label} must have {nodes.size} entries, got {values.size}")
            if not np.all(np.isfinite(values)) or np.any(values <= 0):
                raise BadParams(f"{label} must be finite and positive")
            if fd_step is None:
                first = np.gradient(values, nodes, edge_order=2)
                second = np.gradient(first, nodes, edge_order=2)
                profiles.append(tuple(_interpolant(nodes, series) for series in (values, first, second)))
            else:
                spline = CubicSpline(nodes, values)
                profiles.append((spline, _central_first(spline, fd_step), _central_second(spline, fd_step)))
        # the table endpoints are valid evaluation points
        spacing = float(np.min(np.diff(nodes)))
        interval = (float(nodes[0]) - 1e-9 * spacing, float(nodes[-1]) + 1e-9 * spacing)
        params: Dict[str, Any] = {'points': int(nodes.size)}
        if fd_step is not None:
            params['fd_step'] = fd_step
        return cls(name=name, profiles=tuple(profiles), interval=interval, params=params)

    @classmethod
    def from_callables(
        cls,
        f1: ArrayFn,
        f2: ArrayFn,
        f3: ArrayFn,
        interval: Tuple[float, float],
        fd_step: float = 1e-4,
        name: str = "callable",
    ) -> "MetricFamily":
        """Family from value callables; derivatives by central differences with step fd_step"""
        if not fd_step > 0:
            raise BadParams(f"fd_step must be positive, got {fd_step}")
        lo, hi = interval
        if not lo < hi:
            raise BadParams(f"empty interval {interval}")
        profiles = tuple(
            (fn, _central_first(fn, fd_step), _central_second(fn, fd_step)) for fn in (f1, f2, f3)
        )
        return cls(name=name, profiles=profiles, interval=(float(lo), float(hi)), params={'fd_step': fd_step})


def _interpolant(nodes: np.ndarray, values: np.ndarray) -> ArrayFn:
    return lambda r: np.interp(r, nodes, values)


def _central_first(fn: ArrayFn, h: float) -> ArrayFn:
    return lambda r: (np.asarray(fn(r + h)) - np.asarray(fn(r - h))) / (2.0 * h)


def _central_second(fn: ArrayFn, h: float) -> ArrayFn:
    return lambda r: (np.asarray(fn(r + h)) - 2.0 * np.asarray(fn(r)) + np.asarray(fn(r - h))) / (h * h)


def _scaled(scale: float, fn: ArrayFn) -> ArrayFn:
    return lambda r: scale * fn(r)


SIN = (np.sin, np.cos, lambda r: -np.sin(r))
SINH = (np.sinh, np.cosh, np.sinh)
COSH = (np.cosh, np.sinh, np.cosh)
HALF_SIN_2R = (lambda r: 0.5 * np.sin(2.0 * r), lambda r: np.cos(2.0 * r), lambda r: -2.0 * np.sin(2.0 * r))
HALF_SINH_2R = (lambda r: 0.5 * np.sinh(2.0 * r), lambda r: np.cosh(2.0 * r), lambda r: 2.0 * np.sinh(2.0 * r))


def _integer_param(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not float(value).is_integer() or int(value) < minimum:
        raise BadParams(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def on_family(n: int) -> MetricFamily:
    """Family of the total space of O(-n): f1 = sqrt(n) sinh r, f2 = f3 = sqrt(n) cosh r"""
    n = _integer_param("n", n, 1)
    scale = math.sqrt(n)
    f1 = tuple(_scaled(scale, fn) for fn in SINH)
    f23 = tuple(_scaled(scale, fn) for fn in COSH)
    return MetricFamily(name=f"On({n})", profiles=(f1, f23, f23), interval=(0.0, math.inf), params={'n': n})


@dataclass(frozen=True)
class SigmaProfile:
    """
    Angular profile sigma(r) = m(r) sinh(r) of dr^2 + cosh^2(r) g_H2 + sigma^2 dtheta^2.

    The multiplier m equals `scale` on (0, blend[0]], 1 on [blend[1], inf) and
    follows the quintic smoothstep in between, so sigma is C^2.
    """
    scale: float
    blend: Optional[Tuple[float, float]] = None
    r0: Optional[float] = None

    def _multiplier(self, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        if self.blend is None:
            return np.full_like(r, self.scale), np.zeros_like(r), np.zeros_like(r)
        start, stop = self.blend
        width = stop - start
        u = np.clip((r - start) / width, 0.0, 1.0)
        drop = 1.0 - self.scale
        smooth = u ** 3 * (10.0 - 15.0 * u + 6.0 * u * u)
        slope = 30.0 * u * u * (1.0 - u) ** 2
        bend = 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u)
        return self.scale + drop * smooth, drop * slope / width, drop * bend / (width * width)

    def _check(self, r: Any) -> np.ndarray:
        grid = np.asarray(r, dtype=float)
        if np.any(grid <= 0):
            raise DomainError("sigma is defined for r > 0")
        return grid

    def value(self, r: Any) -> Any:
        r = self._check(r)
        m, _, _ = self._multiplier(r)
        return m * np.sinh(r)

    def derivative(self, r: Any) -> Any:
        r = self._check(r)
        m, dm, _ = self._multiplier(r)
        return m * np.cosh(r) + dm * np.sinh(r)

    def second_derivative(self, r: Any) -> Any:
        r = self._check(r)
        m, dm, ddm = self._multiplier(r)
        return m * np.sinh(r) + 2.0 * dm * np.cosh(r) + ddm * np.sinh(r)

    def to_dict(self) -> Dict[str, Any]:
        return {'k': self.scale, 'r0': self.r0, 'blend': None if self.blend is None else list(self.blend)}

    @classmethod
    def scaled_sinh(cls, k: float) -> "SigmaProfile":
        if not k > 0:
            raise BadParams(f"k must be positive, got {k}")
        return cls(scale=float(k))

    @classmethod
    def gromov_thurston(
        cls,
        k: int,
        r0: float,
        blend: Optional[Tuple[float, float]] = None,
        check_points: int = 2001,
    ) -> "SigmaProfile":
        """
        k sinh(r) near the branch locus, sinh(r) beyond r0.

        Args:
            k: Branching order, an integer >= 2
            r0: Radius beyond which the metric is hyperbolic
            blend: Window (a, b) with 0 < a < b <= r0; defaults to (r0/12, 11 r0/12)

        Raises:
            BadParams: invalid parameters, or sigma' > 0 and sigma'' > 0 fail on the window
        """
        k = _integer_param("k", k, 2)
        if not r0 > 0:
            raise BadParams(f"r0 must be positive, got {r0}")
        if blend is None:
            blend = (r0 / 12.0, 11.0 * r0 / 12.0)
        start, stop = float(blend[0]), float(blend[1])
        if not 0 < start < stop <= r0:
            raise BadParams(f"blend window {blend} must satisfy 0 < a < b <= r0 = {r0}")
        profile = cls(scale=float(k), blend=(start, stop), r0=float(r0))
        window = np.linspace(start, stop, check_points)
        if np.min(profile.derivative(window)) <= 0 or np.min(profile.second_derivative(window)) <= 0:
            raise BadParams(
                f"no convex increasing blend from {k} sinh r to sinh r on {blend}; "
                f"sinh(r0) >= k r0 is necessary"
            )
        return profile


def builtin_family(name: str, **params: Any) -> Union[MetricFamily, SigmaProfile]:
    """
    Closed-form families by name.

    Args:
        name: One of S4, H4, CP2, CH2, On, GromovThurston
        params: n for On; k, r0 and blend for GromovThurston

    Returns:
        A MetricFamily, or the SigmaProfile of the Gromov-Thurston construction
    """
    if name == "S4":
        return MetricFamily(name=name, profiles=(SIN, SIN, SIN), interval=(0.0, math.pi))
    if name == "H4":
        return MetricFamily(name=name, profiles=(SINH, SINH, SINH), interval=(0.0, math.inf))
    if name == "CP2":
        return MetricFamily(name=name, profiles=(HALF_SIN_2R, SIN, SIN), interval=(0.0, math.pi / 2.0))
    if name == "CH2":
        return MetricFamily(name=name, profiles=(HALF_SINH_2R, SINH, SINH), interval=(0.0, math.inf))
    if name == "On":
        if "n" not in params:
            raise BadParams("On requires the parameter n")
        return on_family(params["n"])
    if name == "GromovThurston":
        missing = {"k", "r0"} - set(params)
        if missing:
            raise BadParams(f"GromovThurston requires {sorted(missing)}")
        return SigmaProfile.gromov_thurston(params["k"], params["r0"], params.get("blend"))
    raise BadParams(f"unknown family {name!r}; expected one of {', '.join(BUILTIN_FAMILIES)}")
