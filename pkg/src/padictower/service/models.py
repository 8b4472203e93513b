"""Request/response bodies for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class CharSpec(BaseModel):
    """A character of the tower Galois group: tame index mod p-1 and wild
    index mod p^n."""

    tame: int = 0
    wild: int = 0


class ElementBody(BaseModel):
    """Serialized ring element (coefficients as decimal strings on the
    root-of-unity power basis)."""

    p: int
    f: int
    n: int
    N: int
    coeffs: list[list[str]]


class ResolventRequest(BaseModel):
    p: int
    n: int
    f: int = 1
    N: int | None = None
    alpha: ElementBody | None = None    # default: the layer-n uniformizer
    char: CharSpec
    group: Literal["full", "gamma"] = "full"


class ResolventResponse(BaseModel):
    valuation: str
    meets_bound: bool
    equality: bool
    bound: str
    alpha_valuation: str


class FormulaRequest(BaseModel):
    which: Literal["delta", "lvalue", "bound", "parity"]
    p: int
    n: int = 1
    lambda_inv: int = Field(0, alias="lambda")
    mu_inv: int = Field(0, alias="mu")
    W: int = 1

    model_config = {"populate_by_name": True}


class FormulaResponse(BaseModel):
    value: str | None
    identity_checks: dict[str, bool]
    vanishing: bool | None = None
    explanation: str | None = None


class SuiteRequest(BaseModel):
    suite: str
    seed: int = 0
    ps: list[int] = [3, 5, 7]
    fs: list[int] = [1, 2]
    n_max: int = 3
    degree_cap: int = 1500
    bound_samples: int = 200
    uniformizer_samples: int = 50
    trace_one_trials: int = 8
    tame_tries: int = 64


class SuiteResponse(BaseModel):
    report: dict
    canonical_sha256: str
    exit_code: int


class TableRequest(BaseModel):
    kind: Literal["valuation-growth", "ramification", "omega"]
    format: Literal["csv", "json"] = "csv"
    params: dict[str, int] = {}


class TableResponse(BaseModel):
    content: str
    kind: str
    format: str


class HealthResponse(BaseModel):
    status: str
    version: str
