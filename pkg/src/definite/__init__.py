"""
Definiteness of the Levi-Civita connection on Lambda^+, taming and Ricci lemmas
"""

from .classification import (
    Verdict,
    Orientation,
    Sign,
    DefiniteClassification,
    d_operator,
    classify,
)
from .taming import (
    TamedStructure,
    TamingReport,
    taming_margin,
    tame_pointwise,
    taming_form_spectrum,
)
from .ricci import (
    ricci_operator_spectrum,
    ricci_operator,
    asd_ricci_criterion,
    bochner_condition,
    eigen_sum_dominance,
    EigenSumDominance,
    ricci_positive_check,
    RicciPositiveCheck,
)
from .suites import LemmaSuiteReport, run_lemma_suites

__all__ = [
    'Verdict',
    'Orientation',
    'Sign',
    'DefiniteClassification',
    'd_operator',
    'classify',
    'TamedStructure',
    'TamingReport',
    'taming_margin',
    'tame_pointwise',
    'taming_form_spectrum',
    'ricci_operator_spectrum',
    'ricci_operator',
    'asd_ricci_criterion',
    'bochner_condition',
    'eigen_sum_dominance',
    'EigenSumDominance',
    'ricci_positive_check',
    'RicciPositiveCheck',
    'LemmaSuiteReport',
    'run_lemma_suites',
]
