"""
Deterministic sampling and local optimization on the unit sphere in R^3
"""
import logging
import math
from typing import Callable, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from src.core.exceptions import BadParams

logger = logging.getLogger(__name__)


def fibonacci_sphere(n_points: int) -> np.ndarray:
    """
    Fibonacci lattice on S^2.

    Args:
        n_points: Number of lattice points

    Returns:
        Array of shape (n_points, 3) of unit vectors, in lattice order
    """
    if n_points < 1:
        raise BadParams(f"n_points must be positive, got {n_points}")
    offset = 2.0 / n_points
    increment = math.pi * (3.0 - math.sqrt(5.0))
    i = np.arange(n_points, dtype=float)
    y = i * offset - 1.0 + offset / 2.0
    radius = np.sqrt(np.clip(1.0 - y * y, 0.0, None))
    phi = i * increment
    points = np.column_stack((np.cos(phi) * radius, y, np.sin(phi) * radius))
    return points / np.linalg.norm(points, axis=1, keepdims=True)


def tangent_basis(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis of the tangent plane of S^2 at x"""
    pivot = np.zeros(3)
    pivot[int(np.argmin(np.abs(x)))] = 1.0
    t1 = pivot - np.dot(pivot, x) * x
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(x, t1)
    return t1, t2


def coordinate_descent(
    func: Callable[[np.ndarray], float],
    start: np.ndarray,
    iters: int,
    step: float = 0.05,
) -> Tuple[np.ndarray, float]:
    """
    Projected coordinate descent on S^2.

    Each iteration tries +-step along the two tangent directions at the current
    point and moves to the best improving candidate; without improvement the step
    is halved.

    Args:
        func: Function to minimize
        start: Unit starting vector
        iters: Number of iterations
        step: Initial step length

    Returns:
        (argmin, minimum)
    """
    best = np.asarray(start, dtype=float) / np.linalg.norm(start)
    best_value = float(func(best))
    for _ in range(iters):
        t1, t2 = tangent_basis(best)
        candidate, candidate_value = best, best_value
        for direction in (t1, -t1, t2, -t2):
            trial = best + step * direction
            trial /= np.linalg.norm(trial)
            value = float(func(trial))
            if value < candidate_value:
                candidate, candidate_value = trial, value
        if candidate_value < best_value:
            best, best_value = candidate, candidate_value
        else:
            step *= 0.5
    return best, best_value


def maximize_quadratic_on_sphere(matrix: np.ndarray, linear: np.ndarray) -> np.ndarray:
    """
    Global maximizer of x.M.x + 2 b.x over unit vectors x.

    Solved in the eigenbasis of M: the maximizer is (mu - M)^-1 b for the root
    mu > lambda_max of the secular equation |(mu - M)^-1 b| = 1, or a top
    eigenvector completion when b has no component along the top eigenspace.

    Args:
        matrix: Symmetric 3x3 matrix M
        linear: Vector b

    Returns:
        Unit maximizer
    """
    evals, evecs = np.linalg.eigh(matrix)
    coeffs = evecs.T @ linear
    top = float(evals[-1])
    b_norm = float(np.linalg.norm(linear))
    scale = max(1.0, abs(top), b_norm)
    gaps = top - evals
    near = gaps <= 1e-12 * scale

    if np.linalg.norm(coeffs[near]) <= 1e-13 * scale:
        weights = np.zeros(3)
        far = ~near
        weights[far] = coeffs[far] / gaps[far]
        rest = 1.0 - float(weights @ weights)
        if rest >= 0.0:
            weights[-1] = math.sqrt(rest)
            return evecs @ weights

    mu = _secular_root(evals, coeffs, top, b_norm)
    weights = coeffs / (mu - evals)
    weights /= np.linalg.norm(weights)
    return evecs @ weights


def _secular_root(evals: np.ndarray, coeffs: np.ndarray, top: float, bound: float) -> float:
    # f(mu) = sum c^2 / (mu - lambda)^2 - 1 is decreasing on (top, inf) and f(top + |b|) <= 0
    squares = coeffs * coeffs

    def secular(mu: float) -> float:
        return float(np.sum(squares / (mu - evals) ** 2)) - 1.0

    hi = top + bound
    if secular(hi) >= 0.0:
        return hi
    gap = bound
    floor = 1e-15 * max(1.0, abs(top), bound)
    while gap > floor:
        gap *= 0.5
        if secular(top + gap) > 0.0:
            return float(brentq(secular, top + gap, hi, xtol=1e-14 * max(1.0, abs(hi))))
    return top + gap


def minimize_quadratic_on_sphere(matrix: np.ndarray, linear: np.ndarray) -> np.ndarray:
    """Global minimizer of x.M.x + 2 b.x over unit vectors x"""
    return maximize_quadratic_on_sphere(-np.asarray(matrix), -np.asarray(linear))


def maximize_scalar(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    xatol: float = 1e-12,
) -> Tuple[float, float]:
    """
    Maximum of a unimodal function on [lo, hi] by bounded Brent minimization.

    Returns:
        (argmax, maximum)
    """
    options = {'xatol': xatol, 'maxiter': 500}
    coarse = minimize_scalar(lambda t: -func(t), bounds=(lo, hi), method="bounded", options=options)
    # the bounded search stops at a relative x tolerance; refine the offset from its optimum
    center = float(coarse.x)
    width = 1e-6 * max(1.0, abs(center))
    fine = minimize_scalar(
        lambda x: -func(center + x),
        bounds=(max(lo - center, -width), min(hi - center, width)),
        method="bounded",
        options=options,
    )
    if -float(fine.fun) >= -float(coarse.fun):
        return center + float(fine.x), -float(fine.fun)
    return center, -float(coarse.fun)
