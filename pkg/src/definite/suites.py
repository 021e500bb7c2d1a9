"""
Randomized verification of the eigenvalue lemmas and the Chern-Weil identity
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from src.core.sphere import fibonacci_sphere
from src.curvature.operator import (
    CurvatureOperator,
    chern_weil_integrand,
    make_operator,
    random_bianchi_operator,
    random_trace_free,
)
from src.definite.classification import d_operator
from src.definite.ricci import eigen_sum_dominance, ricci_positive_check

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Counts for one randomized check"""
    name: str
    samples: int
    applicable: int
    counterexamples: int
    worst: float = 0.0
    examples: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'samples': self.samples,
            'applicable': self.applicable,
            'counterexamples': self.counterexamples,
            'worst': self.worst,
            'examples': self.examples,
        }


@dataclass
class LemmaSuiteReport:
    """All randomized lemma checks for one seed"""
    seed: int
    results: List[SuiteResult]

    @property
    def counterexamples(self) -> int:
        return sum(result.counterexamples for result in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'seed': self.seed,
            'counterexamples': self.counterexamples,
            'results': [result.to_dict() for result in self.results],
        }


def check_eigen_sum_dominance(rng: np.random.Generator, samples: int) -> SuiteResult:
    result = SuiteResult("eigen_sum_dominance", samples, 0, 0)
    for _ in range(samples):
        B = random_trace_free(rng) + rng.normal() * np.eye(3)
        A = 2.0 * random_trace_free(rng) + rng.normal(scale=3.0) * np.eye(3)
        check = eigen_sum_dominance(A, B)
        if not check.holds_hypothesis:
            continue
        result.applicable += 1
        if not check.conclusion:
            result.counterexamples += 1
            result.examples.append({'A': A.tolist(), 'B': B.tolist()})
    return result


def check_ricci_positive(rng: np.random.Generator, samples: int) -> SuiteResult:
    result = SuiteResult("ricci_positive_check", samples, 0, 0, worst=float("inf"))
    for _ in range(samples):
        lam = rng.normal(loc=1.0, scale=0.6, size=4)
        Wplus = random_trace_free(rng, scale=0.3)
        check = ricci_positive_check(lam, Wplus, tol=0.0)
        if not check.premises:
            continue
        result.applicable += 1
        result.worst = min(result.worst, check.min_lambda)
        if check.min_lambda <= 0:
            result.counterexamples += 1
            result.examples.append({'lambda': lam.tolist(), 'Wplus': Wplus.tolist()})
    if result.applicable == 0:
        result.worst = 0.0
    return result


def check_trace_identity(rng: np.random.Generator, samples: int) -> SuiteResult:
    result = SuiteResult("chern_weil_trace_identity", samples, samples, 0)
    for _ in range(samples):
        R = random_bianchi_operator(rng, spread=1.0)
        error = abs(float(np.trace(d_operator(R))) - chern_weil_integrand(R))
        result.worst = max(result.worst, error)
        if error > 1e-12 * max(1.0, float(np.sum(R.matrix ** 2))):
            result.counterexamples += 1
            result.examples.append(R.to_dict())
    return result


def _oracle_operator(rng: np.random.Generator) -> CurvatureOperator:
    # B = t E with D > 0 exactly when t * |E A^-1| < 1; u is kept away from the threshold
    s = float(rng.choice((-1.0, 1.0)) * rng.uniform(6.0, 24.0))
    shift = s / 12.0 * np.eye(3)
    A = random_trace_free(rng, 0.1 * abs(s) / 12.0) + shift
    C = random_trace_free(rng, 0.3 * abs(s) / 12.0) + shift
    E = rng.normal(size=(3, 3))
    threshold = 1.0 / float(np.linalg.norm(E @ np.linalg.inv(A), 2))
    u = rng.uniform(0.2, 0.9) if rng.random() < 0.5 else rng.uniform(1.1, 2.0)
    return make_operator(A, u * threshold * E, C)


def check_d_sphere_oracle(
    rng: np.random.Generator,
    samples: int,
    points: int = 1000,
) -> Tuple[SuiteResult, SuiteResult]:
    """
    Both directions of D > 0 <=> |Av| > |Bv| on a Fibonacci sample of the sphere.

    Operators are built on either side of the definiteness threshold. When D > 0
    every lattice gap |Av| - |Bv| must be positive; otherwise some lattice point
    must come within the lattice resolution (|A| + |B|) * 4 / sqrt(points) of zero.

    Returns:
        (forward, converse) results
    """
    sphere = fibonacci_sphere(points)
    forward = SuiteResult("d_operator_sphere_oracle", samples, 0, 0, worst=float("inf"))
    converse = SuiteResult("d_operator_sphere_converse", samples, 0, 0, worst=float("-inf"))
    for _ in range(samples):
        R = _oracle_operator(rng)
        gap = float(np.min(np.linalg.norm(sphere @ R.A.T, axis=1) - np.linalg.norm(sphere @ R.B.T, axis=1)))
        if np.linalg.eigvalsh(d_operator(R))[0] > 0:
            forward.applicable += 1
            forward.worst = min(forward.worst, gap)
            if gap <= 0:
                forward.counterexamples += 1
                forward.examples.append(R.to_dict())
            continue
        converse.applicable += 1
        resolution = (np.linalg.norm(R.A, 2) + np.linalg.norm(R.B, 2)) * 4.0 / np.sqrt(points)
        converse.worst = max(converse.worst, gap / resolution)
        if gap > resolution:
            converse.counterexamples += 1
            converse.examples.append(R.to_dict())
    for result in (forward, converse):
        if result.applicable == 0:
            result.worst = 0.0
    return forward, converse


def run_lemma_suites(
    n_samples: int = 10_000,
    seed: int = 42,
    identity_samples: int = 1_000,
) -> LemmaSuiteReport:
    """
    Run the randomized lemma and identity checks.

    Args:
        n_samples: Samples for the two eigenvalue lemmas
        seed: Seed of the generator
        identity_samples: Samples for the trace identity and the sphere oracle

    Returns:
        The suite report; every counterexample count should be zero
    """
    rng = np.random.default_rng(seed)
    results = [
        check_eigen_sum_dominance(rng, n_samples),
        check_ricci_positive(rng, n_samples),
        check_trace_identity(rng, identity_samples),
        *check_d_sphere_oracle(rng, identity_samples),
    ]
    for result in results:
        logger.info(
            "%s: %d/%d applicable, %d counterexamples",
            result.name, result.applicable, result.samples, result.counterexamples,
        )
    return LemmaSuiteReport(seed=seed, results=results)
