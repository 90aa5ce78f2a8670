"""
File and CLI Schemas

This module defines the Pydantic models for every record that crosses the
file or command line boundary: equations, solution files, report check
results and search hits.

Rationals are stored as JSON integers when integral and as "p/q" strings
otherwise.
"""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, field_validator

from .arith.poly import Poly
from .arith.rational import rational_to_json, to_rational
from .exceptions import ValidationError
from .fibrations.equation import DiagonalEquation, ParametricSolution

RationalValue = Union[int, str]


def _normalize(value) -> RationalValue:
    try:
        return rational_to_json(to_rational(value))
    except ValidationError as e:
        raise ValueError(str(e))


def _poly_to_json(f: Poly) -> list:
    return [rational_to_json(c) for c in f.coeffs]


def _poly_from_json(values: list) -> Poly:
    return Poly([to_rational(c) for c in values])


class EquationRecord(BaseModel):
    """Pydantic model for a(x^p - y^q) = b(z^r - w^s)."""
    model_config = ConfigDict(extra="forbid")

    a: RationalValue
    b: RationalValue
    exponents: List[int]

    @field_validator("a", "b", mode="before")
    @classmethod
    def _rational(cls, value):
        return _normalize(value)

    def to_equation(self) -> DiagonalEquation:
        return DiagonalEquation(to_rational(self.a), to_rational(self.b), tuple(self.exponents))


class SolutionRecord(EquationRecord):
    """
    Pydantic model for a solution file. x, y, z, w and common_factor are
    coefficient arrays in ascending powers of t.
    """
    x: List[RationalValue]
    y: List[RationalValue]
    z: List[RationalValue]
    w: List[RationalValue]
    generator: str = "manual"
    multiple: Optional[int] = None
    common_factor: List[RationalValue] = [1]

    @field_validator("x", "y", "z", "w", "common_factor", mode="before")
    @classmethod
    def _coefficients(cls, values):
        if not isinstance(values, list):
            raise ValueError("coefficients must be a list")
        return [_normalize(v) for v in values]

    @classmethod
    def from_solution(cls, sol: ParametricSolution) -> "SolutionRecord":
        return cls(
            a=rational_to_json(sol.equation.a),
            b=rational_to_json(sol.equation.b),
            exponents=list(sol.equation.exponents),
            x=_poly_to_json(sol.x),
            y=_poly_to_json(sol.y),
            z=_poly_to_json(sol.z),
            w=_poly_to_json(sol.w),
            generator=sol.generator,
            multiple=sol.multiple,
            common_factor=_poly_to_json(sol.common_factor),
        )

    def to_solution(self) -> ParametricSolution:
        return ParametricSolution(
            x=_poly_from_json(self.x),
            y=_poly_from_json(self.y),
            z=_poly_from_json(self.z),
            w=_poly_from_json(self.w),
            equation=self.to_equation(),
            generator=self.generator,
            multiple=self.multiple,
            common_factor=_poly_from_json(self.common_factor),
        )


class CheckResult(BaseModel):
    """Pydantic model for one report check outcome."""
    model_config = ConfigDict(extra="forbid")

    check: str
    passed: bool
    severity: str = "error"
    message: str = ""


class ReportSummary(BaseModel):
    """Pydantic model for the counts at the top of a report."""
    total: int
    passed: int
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0


class SearchHit(BaseModel):
    """Pydantic model for one search result line."""
    kind: str
    values: List[RationalValue]
    bound: int
    note: Optional[str] = None

    @field_validator("values", mode="before")
    @classmethod
    def _values(cls, values):
        return [_normalize(v) for v in values]
