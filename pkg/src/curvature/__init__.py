"""
Curvature operators in self-dual/anti-self-dual block form
"""

from .operator import (
    CurvatureOperator,
    WeylScalarParts,
    RadialProfile,
    make_operator,
    decompose,
    reverse_orientation,
    rotate_frames,
    chern_weil_integrand,
    from_sectional_diagonal,
    gromov_thurston_curvatures,
    gromov_thurston_operator,
    from_ricci_spectrum,
    random_bianchi_operator,
    random_trace_free,
    operator_from_mapping,
)

__all__ = [
    'CurvatureOperator',
    'WeylScalarParts',
    'RadialProfile',
    'make_operator',
    'decompose',
    'reverse_orientation',
    'rotate_frames',
    'chern_weil_integrand',
    'from_sectional_diagonal',
    'gromov_thurston_curvatures',
    'gromov_thurston_operator',
    'from_ricci_spectrum',
    'random_bianchi_operator',
    'random_trace_free',
    'operator_from_mapping',
]
