"""
Shared infrastructure: settings, errors, sphere optimization and report rendering
"""

from .config import ToolkitSettings, get_settings
from .exceptions import (
    DefConnError,
    InputError,
    NonFinite,
    NotUnit,
    DomainError,
    BadParams,
    OutOfRange,
    ConfigurationError,
    SchemaError,
    BianchiViolation,
    DegenerateBoundary,
    TheoremViolation,
    UnsupportedSurface,
    SamplingExhausted,
)
from .serialization import render_json, render_text, to_jsonable, load_document
from .sphere import (
    fibonacci_sphere,
    coordinate_descent,
    maximize_quadratic_on_sphere,
    minimize_quadratic_on_sphere,
    maximize_scalar,
)

__all__ = [
    'ToolkitSettings',
    'get_settings',
    'DefConnError',
    'InputError',
    'NonFinite',
    'NotUnit',
    'DomainError',
    'BadParams',
    'OutOfRange',
    'ConfigurationError',
    'SchemaError',
    'BianchiViolation',
    'DegenerateBoundary',
    'TheoremViolation',
    'UnsupportedSurface',
    'SamplingExhausted',
    'render_json',
    'render_text',
    'to_jsonable',
    'load_document',
    'fibonacci_sphere',
    'coordinate_descent',
    'maximize_quadratic_on_sphere',
    'minimize_quadratic_on_sphere',
    'maximize_scalar',
]
