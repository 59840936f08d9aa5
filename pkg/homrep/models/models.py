# models.py

from fractions import Fraction
from typing import Annotated, Any, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, model_validator

from homrep.utilities.utils import format_rational, parse_rational

Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class WeightedTarget(BaseModel):
    """
    A weighted graph H on states 0..d-1: positive node weights `alpha` and a
    symmetric matrix of edge weights `beta` (loops on the diagonal).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int
    alpha: tuple[Rational, ...]
    beta: tuple[tuple[Rational, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self):
        if self.d < 1:
            raise ValueError(f"a target needs at least one node, got d={self.d}")
        if len(self.alpha) != self.d:
            raise ValueError(f"alpha has {len(self.alpha)} entries, expected {self.d}")
        if any(a <= 0 for a in self.alpha):
            raise ValueError("node weights must be positive")
        if len(self.beta) != self.d or any(len(row) != self.d for row in self.beta):
            raise ValueError(f"beta must be {self.d}x{self.d}")
        for i in range(self.d):
            for j in range(i):
                if self.beta[i][j] != self.beta[j][i]:
                    raise ValueError(f"beta is not symmetric at ({i},{j})")
        return self

    @classmethod
    def build(cls, alpha, beta):
        return cls(d=len(alpha), alpha=tuple(alpha), beta=tuple(tuple(row) for row in beta))

    @property
    def total_weight(self):
        return sum(self.alpha, Fraction(0))

    def is_twin_free(self):
        return len({tuple(row) for row in self.beta}) == self.d

    def weighted_degrees(self):
        return [sum((a * b for a, b in zip(self.alpha, row)), Fraction(0)) for row in self.beta]

    def to_json(self):
        return self.model_dump_json()


class ClaimResult(BaseModel):
    name: str
    passed: bool
    max_residual: float
    detail: str = ""


class LevelSummary(BaseModel):
    labels: list[int]
    dim: int
    saturated: bool
    degrees: list[int] = []
    max_degree: int | None = None


class ReconstructionReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: str
    parameter: str
    target: WeightedTarget | None = None
    S_used: list[int] = []
    D: int | None = None
    normalization: Optional[Rational] = None
    residuals: list[float] = []
    exact_match: bool = False
    flags: list[str] = []
    levels: list[LevelSummary] = []
    degree_bound: int | None = None
    timings: dict[str, float | None] = {}
    seed: int = 0
    alpha_snapped: list[bool] = []
    beta_snapped: list[list[bool]] = []
    certificate: dict[str, Any] | None = None
    message: str = ""


class AlgebraDump(BaseModel):
    labels: list[int]
    basis: list[str]
    levels: list[int]
    gram: list[list[float]]
    dim: int
    saturated: bool
    idempotents: list[list[float]] = []
    masses: list[float] = []
