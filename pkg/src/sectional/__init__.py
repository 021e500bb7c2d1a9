"""
Sectional curvature, pinching ratios and verification of the pinching theorem
"""

from .pinching import (
    PinchingReport,
    sectional_value,
    sectional_extrema,
    pinching_ratio,
    dual_bounds,
    proof_inequalities,
)
from .verification import (
    PINCHING_CONSTANT,
    PinchingVerificationReport,
    NearBoundaryWitness,
    boundary_witness,
    certified_ratio,
    strengthened_margins,
    verify_pinching_theorem,
    search_near_boundary,
)

__all__ = [
    'PinchingReport',
    'sectional_value',
    'sectional_extrema',
    'pinching_ratio',
    'dual_bounds',
    'proof_inequalities',
    'PINCHING_CONSTANT',
    'PinchingVerificationReport',
    'NearBoundaryWitness',
    'boundary_witness',
    'certified_ratio',
    'strengthened_margins',
    'verify_pinching_theorem',
    'search_near_boundary',
]
