"""
Unit tests for the randomized lemma suites
"""
import numpy as np

from src.definite.suites import (
    check_d_sphere_oracle,
    check_eigen_sum_dominance,
    check_ricci_positive,
    check_trace_identity,
    run_lemma_suites,
)


class TestLemmaSuites:
    """Randomized checks report no counterexamples"""

    def test_eigen_sum_dominance(self):
        result = check_eigen_sum_dominance(np.random.default_rng(1), 2000)
        assert result.applicable > 0
        assert result.counterexamples == 0

    def test_ricci_positive(self):
        result = check_ricci_positive(np.random.default_rng(2), 2000)
        assert result.applicable > 0
        assert result.counterexamples == 0
        assert result.worst > 0

    def test_trace_identity(self):
        result = check_trace_identity(np.random.default_rng(3), 1000)
        assert result.counterexamples == 0

    def test_sphere_oracle(self):
        forward, converse = check_d_sphere_oracle(np.random.default_rng(4), 300)
        assert forward.applicable > 50
        assert forward.counterexamples == 0
        assert forward.worst > 0

    def test_sphere_oracle_converse(self):
        forward, converse = check_d_sphere_oracle(np.random.default_rng(5), 300)
        assert converse.applicable > 50
        assert forward.applicable + converse.applicable == 300
        assert converse.counterexamples == 0
        assert converse.worst <= 1.0

    def test_sphere_oracle_coverage(self):
        report = run_lemma_suites(n_samples=100, seed=42, identity_samples=1000)
        results = {r.name: r for r in report.results}
        assert results['d_operator_sphere_oracle'].applicable > 300
        assert results['d_operator_sphere_converse'].applicable > 300

    def test_report(self):
        report = run_lemma_suites(n_samples=500, seed=42, identity_samples=100)
        assert report.counterexamples == 0
        data = report.to_dict()
        assert data['seed'] == 42
        assert [r['name'] for r in data['results']] == [
            'eigen_sum_dominance',
            'ricci_positive_check',
            'chern_weil_trace_identity',
            'd_operator_sphere_oracle',
            'd_operator_sphere_converse',
        ]
