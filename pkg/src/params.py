"""Validated parameter records for the CLI commands and MCP tools."""

from enum import Enum

from pydantic import BaseModel, Field, field_validator

from evaluator.brackets import EvalRoute
from evaluator.keys import SUPPORTED_GENERA
from indexing.multiindex import Kind, MultiIndex, parse_index_spec
from settings import get_settings


def _default_order() -> int:
    return get_settings().default_order


class Suite(str, Enum):
    ROUTES = "routes"
    CHARGE = "charge"
    GENUS1_LOG = "genus1-log"
    KAPPA_LOG = "kappa-log"
    ANNIHILATORS = "annihilators"
    GETZLER = "getzler"
    CLOSED_FORM = "closed-form"
    LAMBDA = "lambda"
    PRODUCT_RULE = "product-rule"
    ALL = "all"


class _GenusParams(BaseModel):
    genus: int

    @field_validator("genus")
    @classmethod
    def _supported(cls, value: int) -> int:
        if value not in SUPPORTED_GENERA:
            raise ValueError(f"genus must be 0 or 1, got {value}")
        return value


class NumberParams(_GenusParams):
    tau: str = ""
    kappa: str = ""
    lambda_r: int | None = Field(default=None, ge=0)
    route: EvalRoute = EvalRoute.SPLITTING

    @field_validator("tau")
    @classmethod
    def _tau_parses(cls, value: str) -> str:
        parse_index_spec(value, Kind.S0)
        return value

    @field_validator("kappa")
    @classmethod
    def _kappa_parses(cls, value: str) -> str:
        parse_index_spec(value, Kind.S1)
        return value

    @property
    def m(self) -> MultiIndex:
        return parse_index_spec(self.tau, Kind.S0)

    @property
    def p(self) -> MultiIndex:
        return parse_index_spec(self.kappa, Kind.S1)


class TableParams(_GenusParams):
    n_max: int = Field(default=6, ge=1, le=12)
    dim_max: int = Field(default=6, ge=0, le=12)


class VerifyParams(BaseModel):
    suite: Suite
    n_max: int = Field(default=6, ge=1, le=10)
    dim_max: int = Field(default=6, ge=0, le=10)
    t_max: int = Field(default=3, ge=0, le=6)
    s_max: int = Field(default=3, ge=0, le=6)
    degree: int = Field(default=6, ge=3, le=10)
    max_sum: int = Field(default=12, ge=1, le=16)
    psi_points: int = Field(default=10, ge=3, le=12)
    order: int = Field(default_factory=_default_order, ge=5, le=24)
    s: str | None = None
    u: str | None = None
    seed: int = 0
    trials: int = Field(default=20, ge=1)


class WpParams(_GenusParams):
    n_max: int = Field(default=50, ge=1, le=200)
    asymptotic: bool = False


class CohftParams(BaseModel):
    s: str | None = None
    u: str | None = None
    order: int = Field(default_factory=_default_order, ge=5, le=24)
