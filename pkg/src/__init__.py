"""
Defconn - definite connections and curvature of four-manifolds
"""

__version__ = "0.1.0"
__author__ = "Defconn Team"

# Curvature operators
from src.curvature.operator import CurvatureOperator, make_operator, decompose, reverse_orientation

# Definiteness and taming
from src.definite.classification import classify, DefiniteClassification
from src.definite.taming import taming_margin, tame_pointwise

# Sectional curvature
from src.sectional.pinching import sectional_extrema, pinching_ratio
from src.sectional.verification import verify_pinching_theorem

# Cohomogeneity one
from src.cohomogeneity.families import MetricFamily, builtin_family
from src.cohomogeneity.paths import connection_path, definite_path_margin, isotopy_path
from src.cohomogeneity.blocks import reconstruct_blocks

# Topology
from src.topology.invariants import chern_numbers, hitchin_thorpe_gate, twistor_degree

__all__ = [
    # Curvature
    'CurvatureOperator',
    'make_operator',
    'decompose',
    'reverse_orientation',

    # Definiteness
    'classify',
    'DefiniteClassification',
    'taming_margin',
    'tame_pointwise',

    # Sectional
    'sectional_extrema',
    'pinching_ratio',
    'verify_pinching_theorem',

    # Cohomogeneity one
    'MetricFamily',
    'builtin_family',
    'connection_path',
    'definite_path_margin',
    'isotopy_path',
    'reconstruct_blocks',

    # Topology
    'chern_numbers',
    'hitchin_thorpe_gate',
    'twistor_degree',
]
