"""
Cohomogeneity-one metrics on R x SU(2): connection paths, definiteness and curvature blocks
"""

from .families import (
    BUILTIN_FAMILIES,
    MetricFamily,
    ProfileValues,
    SigmaProfile,
    builtin_family,
    on_family,
)
from .paths import (
    Bundle,
    ConnectionPath,
    PathVerdict,
    connection_path,
    definite_path_margin,
    default_r_grid,
    isotopy_path,
    isotopy_sweep,
)
from .blocks import (
    BlockResiduals,
    CalibrationConstants,
    block_residuals,
    reconstruct_blocks,
)

__all__ = [
    'BUILTIN_FAMILIES',
    'MetricFamily',
    'ProfileValues',
    'SigmaProfile',
    'builtin_family',
    'on_family',
    'Bundle',
    'ConnectionPath',
    'PathVerdict',
    'connection_path',
    'definite_path_margin',
    'default_r_grid',
    'isotopy_path',
    'isotopy_sweep',
    'BlockResiduals',
    'CalibrationConstants',
    'block_residuals',
    'reconstruct_blocks',
]
