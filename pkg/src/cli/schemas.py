"""
Input documents accepted by the command line
"""
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.exceptions import SchemaError

M = TypeVar("M", bound=BaseModel)

Matrix = List[List[float]]


class RicciSpectrumInput(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    lam: List[float] = Field(alias="lambda", min_length=4, max_length=4)
    Wplus: Optional[Matrix] = None
    Wminus: Optional[Matrix] = None


class OperatorInput(BaseModel):
    """One of: blocks A, B, C; six coordinate-plane curvatures; a Ricci spectrum"""
    model_config = ConfigDict(extra="forbid")

    A: Optional[Matrix] = None
    B: Optional[Matrix] = None
    C: Optional[Matrix] = None
    sectional: Optional[List[float]] = Field(default=None, min_length=6, max_length=6)
    ricci_spectrum: Optional[RicciSpectrumInput] = None
    relaxed: bool = False

    @model_validator(mode="after")
    def one_form(self) -> "OperatorInput":
        blocks = [self.A, self.B, self.C]
        forms = [all(b is not None for b in blocks), self.sectional is not None, self.ricci_spectrum is not None]
        if sum(forms) != 1:
            raise ValueError("give exactly one of {A, B, C}, sectional, ricci_spectrum")
        if not forms[0] and any(b is not None for b in blocks):
            raise ValueError("blocks A, B and C must be given together")
        return self

    def to_mapping(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True, by_alias=True)


class TableInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    r: List[float] = Field(min_length=3)
    f1: List[float]
    f2: List[float]
    f3: List[float]


class FamilyInput(BaseModel):
    """A built-in family, a tabulated family, or a point of the isotopy"""
    model_config = ConfigDict(extra="forbid")

    builtin: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    r0: Optional[float] = None
    blend: Optional[Tuple[float, float]] = None
    table: Optional[TableInput] = None
    fd_step: Optional[float] = Field(default=None, gt=0)
    isotopy_t: Optional[float] = None

    @model_validator(mode="after")
    def one_source(self) -> "FamilyInput":
        if sum(x is not None for x in (self.builtin, self.table, self.isotopy_t)) != 1:
            raise ValueError("give exactly one of builtin, table, isotopy_t")
        return self

    def builtin_params(self) -> Dict[str, Any]:
        return {key: value for key, value in (("n", self.n), ("k", self.k), ("r0", self.r0), ("blend", self.blend))
                if value is not None}


class ChernInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    chi: int
    tau: int
    sign: str = "Positive"
    complex_hyperbolic: bool = False

    @field_validator("sign")
    @classmethod
    def known_sign(cls, value: str) -> str:
        if value not in ("Positive", "Negative"):
            raise ValueError("sign must be Positive or Negative")
        return value


class SurfaceInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    euler: int
    self_intersection: int
    double_points: int = Field(default=0, ge=0)
    branch_points: int = Field(default=0, ge=0)


def validate_document(model: Type[M], document: Any) -> M:
    """Validate a parsed document, raising SchemaError with the model's JSON schema"""
    try:
        return model.model_validate(document)
    except ValidationError as exc:
        errors = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}" for error in exc.errors()
        )
        raise SchemaError(f"invalid {model.__name__}: {errors}", schema=model.model_json_schema()) from exc
