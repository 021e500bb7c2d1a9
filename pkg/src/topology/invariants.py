"""
Characteristic numbers of the twistor space of a definite connection, the
Hitchin-Thorpe type gate, and twistor degrees of surfaces.

All arithmetic is exact (int and Fraction).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from src.core.exceptions import BadParams, UnsupportedSurface
from src.definite.classification import Sign
from src.definite.taming import TamedStructure

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class DefiniteSign(Enum):
    """Sign of the D operator"""
    DPOS = "Dpos"
    DNEG = "Dneg"


def _integer(name: str, value: Any) -> int:
    if isinstance(value, bool):
        raise BadParams(f"{name} must be an integer, got {value!r}")
    try:
        exact = Fraction(value)
    except (TypeError, ValueError) as exc:
        raise BadParams(f"{name} must be an integer, got {value!r}") from exc
    if exact.denominator != 1:
        raise BadParams(f"{name} must be an integer, got {value!r}")
    return int(exact)


def _normalize(value: Fraction) -> Number:
    return int(value) if value.denominator == 1 else value


def _sign(sign: Union[Sign, str]) -> Sign:
    try:
        resolved = Sign(sign)
    except ValueError as exc:
        raise BadParams(f"sign must be Positive or Negative, got {sign!r}") from exc
    if resolved is Sign.NA:
        raise BadParams("sign must be Positive or Negative")
    return resolved


@dataclass(frozen=True)
class TwistorInvariants:
    """Chern numbers and symplectic volume of the twistor space Z"""
    chi: int
    tau: int
    sign: Sign
    c1_cubed: Number
    c1_c2: Number
    c3: Number
    c2_omega: Number
    k_cubed: Number
    omega_cubed: Number
    half_anticanonical_cubed: Optional[Number] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'chi': self.chi,
            'tau': self.tau,
            'sign': self.sign.value,
            'c1_cubed': self.c1_cubed,
            'c1_c2': self.c1_c2,
            'c3': self.c3,
            'c2_omega': self.c2_omega,
            'k_cubed': self.k_cubed,
            'omega_cubed': self.omega_cubed,
            'half_anticanonical_cubed': self.half_anticanonical_cubed,
        }


def chern_numbers(chi: int, tau: int, sign: Union[Sign, str]) -> TwistorInvariants:
    """
    Chern numbers of the twistor space of a definite connection over X.

    Args:
        chi: Euler characteristic of X
        tau: Signature of X
        sign: Sign of the definite connection

    Returns:
        Positive: c1^3 = 16(2chi+3tau), c1c2 = 12(chi+tau), c3 = 2chi, c2.[w] = 6(chi+tau).
        Negative: c1^3 = c1c2 = 0, c3 = 2chi, c2.[w] = -2(chi+3tau).
        Always k^3 = (2chi+3tau)/4 and [w]^3 = 8 k^3.
    """
    chi = _integer("chi", chi)
    tau = _integer("tau", tau)
    sign = _sign(sign)
    k_cubed = Fraction(2 * chi + 3 * tau, 4)
    if sign is Sign.POSITIVE:
        return TwistorInvariants(
            chi=chi,
            tau=tau,
            sign=sign,
            c1_cubed=16 * (2 * chi + 3 * tau),
            c1_c2=12 * (chi + tau),
            c3=2 * chi,
            c2_omega=6 * (chi + tau),
            k_cubed=_normalize(k_cubed),
            omega_cubed=_normalize(8 * k_cubed),
            half_anticanonical_cubed=2 * (2 * chi + 3 * tau),
        )
    return TwistorInvariants(
        chi=chi,
        tau=tau,
        sign=sign,
        c1_cubed=0,
        c1_c2=0,
        c3=2 * chi,
        c2_omega=-2 * (chi + 3 * tau),
        k_cubed=_normalize(k_cubed),
        omega_cubed=_normalize(8 * k_cubed),
    )


def chern_numbers_complex_hyperbolic(chi: int, tau_complex: int) -> TwistorInvariants:
    """
    Negative-branch invariants of a complex hyperbolic surface.

    The definite connection lives on the non-complex orientation, so the
    signature of the complex orientation enters with the opposite sign.
    """
    return chern_numbers(chi, -_integer("tau_complex", tau_complex), Sign.NEGATIVE)


@dataclass(frozen=True)
class GateResult:
    admissible: bool
    reason: str

    def to_dict(self) -> Dict[str, Any]:
        return {'admissible': self.admissible, 'reason': self.reason}


def hitchin_thorpe_gate(chi: int, tau: int, d_sign: Union[DefiniteSign, str]) -> GateResult:
    """
    Topological obstruction to a definite D operator.

    D > 0 requires 2chi + 3tau > 0; D < 0 requires chi = 0 and tau < 0.
    """
    chi = _integer("chi", chi)
    tau = _integer("tau", tau)
    try:
        d_sign = DefiniteSign(d_sign)
    except ValueError as exc:
        raise BadParams(f"d_sign must be Dpos or Dneg, got {d_sign!r}") from exc
    if d_sign is DefiniteSign.DPOS:
        value = 2 * chi + 3 * tau
        if value > 0:
            return GateResult(True, f"2chi + 3tau = {value} > 0")
        return GateResult(False, f"D > 0 needs 2chi + 3tau > 0, got {value}")
    if chi != 0:
        return GateResult(False, f"D < 0 needs chi = 0, got chi = {chi}")
    if tau >= 0:
        return GateResult(False, f"D < 0 needs tau < 0, got tau = {tau}")
    return GateResult(True, f"chi = 0 and tau = {tau} < 0")


@dataclass(frozen=True)
class SurfaceData:
    """An immersed closed orientable surface with transverse double points"""
    euler: int
    self_intersection: int
    double_points: int = 0
    branch_points: int = 0

    def __post_init__(self):
        for name in ("euler", "self_intersection", "double_points", "branch_points"):
            object.__setattr__(self, name, _integer(name, getattr(self, name)))
        if self.euler % 2 != 0:
            raise BadParams(f"Euler characteristic of a closed orientable surface is even, got {self.euler}")
        if self.double_points < 0 or self.branch_points < 0:
            raise BadParams("double_points and branch_points must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'euler': self.euler,
            'self_intersection': self.self_intersection,
            'double_points': self.double_points,
            'branch_points': self.branch_points,
        }


@dataclass(frozen=True)
class TwistorDegree:
    degree: int
    adjunction_negative_ok: bool
    adjunction_positive_ok: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degree': self.degree,
            'adjunction_negative_ok': self.adjunction_negative_ok,
            'adjunction_positive_ok': self.adjunction_positive_ok,
        }


def twistor_degree(surf: SurfaceData) -> TwistorDegree:
    """
    Twistor degree chi(S) + S.S - 2d of an immersed surface.

    Raises:
        UnsupportedSurface: the surface has branch points
    """
    if surf.branch_points > 0:
        raise UnsupportedSurface(
            f"{surf.branch_points} branch point(s): link invariant corrections are not computed"
        )
    degree = surf.euler + surf.self_intersection - 2 * surf.double_points
    return TwistorDegree(degree=degree, adjunction_negative_ok=degree < 0, adjunction_positive_ok=degree > 0)


def exceptional_curve(n: int) -> SurfaceData:
    """Embedded sphere of self-intersection -n"""
    return SurfaceData(euler=2, self_intersection=-_integer("n", n))


def adjunction_consistent(surf: SurfaceData, tamed_structure: Union[TamedStructure, str]) -> bool:
    """
    Whether the surface's twistor degree has the sign forced by the tamed structure.

    J+ (positive case) needs a positive degree, J- (negative case) a negative one;
    without a tamed structure there is no constraint.
    """
    structure = TamedStructure(tamed_structure)
    result = twistor_degree(surf)
    if structure is TamedStructure.JPLUS:
        return result.adjunction_positive_ok
    if structure is TamedStructure.JMINUS:
        return result.adjunction_negative_ok
    return True
