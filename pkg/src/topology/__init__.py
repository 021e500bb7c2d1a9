"""
Topological invariants of twistor spaces and surfaces
"""

from .invariants import (
    DefiniteSign,
    GateResult,
    SurfaceData,
    TwistorDegree,
    TwistorInvariants,
    adjunction_consistent,
    chern_numbers,
    chern_numbers_complex_hyperbolic,
    exceptional_curve,
    hitchin_thorpe_gate,
    twistor_degree,
)

__all__ = [
    'DefiniteSign',
    'GateResult',
    'SurfaceData',
    'TwistorDegree',
    'TwistorInvariants',
    'adjunction_consistent',
    'chern_numbers',
    'chern_numbers_complex_hyperbolic',
    'exceptional_curve',
    'hitchin_thorpe_gate',
    'twistor_degree',
]
