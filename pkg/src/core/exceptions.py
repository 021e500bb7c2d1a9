"""
Custom exceptions for the curvature toolkit
"""
from typing import Any, Dict, Optional


class DefConnError(Exception):
    """Base exception for toolkit errors"""
    pass


class InputError(DefConnError):
    """Base class for rejected inputs (CLI exit code 2)"""
    pass


class NonFinite(InputError):
    """Raised when a matrix or scalar input contains NaN or infinity"""
    pass


class NotUnit(InputError):
    """Raised when a vector expected on the unit sphere is not unit length"""
    pass


class DomainError(InputError):
    """Raised when a radial profile is evaluated outside its domain"""
    pass


class BadParams(InputError):
    """Raised when family or construction parameters are invalid"""
    pass


class OutOfRange(InputError):
    """Raised when a parameter lies outside its admissible interval"""
    pass


class ConfigurationError(InputError):
    """Raised when an environment override cannot be parsed"""
    pass


class SchemaError(InputError):
    """Raised when a JSON or YAML input does not match its schema"""

    def __init__(self, message: str, schema: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.schema = schema


class BianchiViolation(InputError):
    """Raised when tr A and tr C differ on a non-relaxed operator"""

    def __init__(self, trace_a: float, trace_c: float):
        super().__init__(
            f"Bianchi trace constraint violated: tr A = {trace_a!r}, tr C = {trace_c!r}"
        )
        self.trace_a = trace_a
        self.trace_c = trace_c


class DegenerateBoundary(DefConnError):
    """Raised in strict mode when the D operator has an eigenvalue within tolerance of zero"""

    def __init__(self, classification: Any):
        super().__init__(
            f"D operator is degenerate (margin {classification.margin:.3e})"
        )
        self.classification = classification


class TheoremViolation(DefConnError):
    """Raised when a sampled operator contradicts a proven statement (CLI exit code 3)"""

    def __init__(self, message: str, operator: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.operator = operator


class UnsupportedSurface(DefConnError):
    """Raised for surfaces whose twistor degree needs branch-point corrections"""
    pass


class SamplingExhausted(DefConnError):
    """Raised when a sampler hits its draw cap before collecting enough operators"""
    pass
