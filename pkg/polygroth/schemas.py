"""
Pydantic models for the JSON formats emitted by polygroth.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator


class TermModel(BaseModel):
    coeff: str = Field(..., description="Decimal integer coefficient")
    beta: int = Field(..., ge=0)
    x: List[int]
    b: List[int]

    @field_validator("coeff")
    @classmethod
    def _decimal(cls, value: str) -> str:
        int(value)
        return value


class PolynomialModel(BaseModel):
    n: int = Field(..., ge=1)
    terms: List[TermModel]

    def to_polynomial(self):
        from .polyring import Monomial, Polynomial

        return Polynomial.from_terms(
            self.n,
            (
                (Monomial(t.beta, tuple(t.x), tuple(t.b)), int(t.coeff))
                for t in self.terms
            ),
        )


class BoxModel(BaseModel):
    row: int = Field(..., ge=1)
    col: int = Field(..., ge=1)
    vals: List[int]


class TableauModel(BaseModel):
    boxes: List[BoxModel]


class ReportModel(BaseModel):
    perm: List[int]
    equal: bool
    tableaux: int = Field(..., ge=0)
    ms: int = Field(..., ge=0)
    polynomial: Optional[PolynomialModel] = None


class SummaryModel(BaseModel):
    checked: int
    failed: int
