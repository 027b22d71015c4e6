"""
File and Report Schema
Pydantic models for function files, surface files and run reports
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class RegionModel(BaseModel):
    """Domain descriptor as stored on disk"""
    kind: str = "upper_half_plane"
    params: List[float] = Field(default_factory=list)


class FunctionFile(BaseModel):
    """Slice function given by its splitting quadruple"""
    g: str
    ghat: str
    h: str = "0"
    hhat: str = "0"
    domain: Optional[RegionModel] = None
    name: Optional[str] = None

    @field_validator("g", "ghat", "h", "hhat")
    @classmethod
    def not_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("expression cannot be empty")
        return value


class SurfaceTerm(BaseModel):
    """One monomial of a homogeneous polynomial"""
    exp: List[int]
    coef: List[float]

    @field_validator("exp")
    @classmethod
    def four_exponents(cls, value: List[int]) -> List[int]:
        if len(value) != 4 or any(e < 0 for e in value):
            raise ValueError("exp must hold four non-negative integers")
        return value

    @field_validator("coef")
    @classmethod
    def complex_pair(cls, value: List[float]) -> List[float]:
        if len(value) != 2:
            raise ValueError("coef must be [re, im]")
        return value


class SurfaceFile(BaseModel):
    """Homogeneous surface in CP^3"""
    degree: int
    terms: List[SurfaceTerm]
    name: Optional[str] = None

    @field_validator("terms")
    @classmethod
    def non_empty(cls, value: List[SurfaceTerm]) -> List[SurfaceTerm]:
        if not value:
            raise ValueError("a surface needs at least one term")
        return value


class CheckResult(BaseModel):
    """Single verified identity"""
    name: str
    residual: float
    tolerance: float
    verdict: bool


class RunReport(BaseModel):
    """Report printed by the command line front end"""
    command: str
    config: Dict[str, Any]
    checks: List[CheckResult] = Field(default_factory=list)
    data: Optional[Any] = None
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(check.verdict for check in self.checks)

    def failing(self) -> List[str]:
        return [check.name for check in self.checks if not check.verdict]
