"""HTTP front end over the exact-arithmetic core.

Domain errors map to structured HTTP statuses so thin clients can translate
them to exit codes: 400 for bad mathematical input (usage), 409 for
insufficient working precision, 500 only for genuine bugs.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..formulas import (ForcedVanishing, FormulaInput, corollary_bound,
                        delta_omega_identity_check, delta_valuation_rhs,
                        growth_window_check, lvalue_valuation_rhs,
                        root_number_parity)
from ..padic import canonical_rational
from ..resolvent import GaloisCharacter, resolvent
from ..suites import Grid, Knobs, run_suite
from ..tables import emit_table
from ..tower import PrecisionExhausted, RingElement, TowerRing
from .models import (FormulaRequest, FormulaResponse, HealthResponse,
                     ResolventRequest, ResolventResponse, SuiteRequest,
                     SuiteResponse, TableRequest, TableResponse)


def create_app() -> FastAPI:
    app = FastAPI(title="padictower", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/resolvent/compute", response_model=ResolventResponse)
    def resolvent_compute(req: ResolventRequest) -> ResolventResponse:
        try:
            ring = TowerRing.get(req.p, req.f, req.n, req.N)
            if req.alpha is None:
                alpha = ring.psi_uniformizer(ring.n)
            else:
                body = req.alpha.model_dump()
                if (body["p"], body["f"], body["n"]) != (ring.p, ring.f,
                                                         ring.n):
                    raise ValueError(
                        "alpha element parameters do not match the ring")
                alpha = RingElement.from_json_dict(body)
            chi = GaloisCharacter(ring, req.char.tame, req.char.wild)
            v = resolvent(alpha, chi, group=req.group).valuation()
        except PrecisionExhausted as exc:
            raise HTTPException(409, detail=str(exc)) from exc
        except (ValueError, OverflowError) as exc:
            raise HTTPException(400, detail=str(exc)) from exc
        half = Fraction(ring.n + 1, 2)
        return ResolventResponse(
            valuation=str(v),
            meets_bound=v.at_least(half),
            equality=v.is_finite and v.value == half,
            bound=canonical_rational(half),
            alpha_valuation=str(alpha.valuation()),
        )

    @app.post("/formula/eval", response_model=FormulaResponse)
    def formula_eval(req: FormulaRequest) -> FormulaResponse:
        try:
            return _eval_formula(req)
        except ForcedVanishing as exc:
            return FormulaResponse(value=None, identity_checks={},
                                   vanishing=True, explanation=str(exc))
        except ValueError as exc:
            raise HTTPException(400, detail=str(exc)) from exc

    @app.post("/suite/run", response_model=SuiteResponse)
    def suite_run(req: SuiteRequest) -> SuiteResponse:
        grid = Grid(tuple(req.ps), tuple(req.fs), req.n_max, req.degree_cap)
        knobs = Knobs(req.bound_samples, req.uniformizer_samples,
                      req.trace_one_trials, req.tame_tries)
        try:
            report = run_suite(req.suite, grid, req.seed, knobs)
        except ValueError as exc:
            raise HTTPException(400, detail=str(exc)) from exc
        return SuiteResponse(
            report=report.to_dict(include_timing=True),
            canonical_sha256=report.sha256,
            exit_code=report.exit_code,
        )

    @app.post("/table/emit", response_model=TableResponse)
    def table_emit(req: TableRequest) -> TableResponse:
        try:
            content = emit_table(req.kind, dict(req.params), req.format)
        except ValueError as exc:
            raise HTTPException(400, detail=str(exc)) from exc
        return TableResponse(content=content, kind=req.kind,
                             format=req.format)

    return app


def _eval_formula(req: FormulaRequest) -> FormulaResponse:
    if req.which == "delta":
        v = delta_valuation_rhs(req.p, req.n)
        checks = {"omega_identity": delta_omega_identity_check(req.p, req.n)}
        return FormulaResponse(value=str(v), identity_checks=checks)
    if req.which == "lvalue":
        eps = req.W
        inp = FormulaInput(req.p, req.n, epsilon=eps,
                           lambda_inv=req.lambda_inv, mu_inv=req.mu_inv)
        v = lvalue_valuation_rhs(inp)
        shift = (Fraction(req.lambda_inv,
                          req.p ** (req.n - 1) * (req.p - 1))
                 + req.mu_inv + delta_valuation_rhs(req.p, req.n).value)
        checks = {
            "decomposes_as_invariant_shift_plus_delta": v.equals(shift),
            "within_growth_window": growth_window_check(req.p, req.n),
        }
        return FormulaResponse(value=str(v), identity_checks=checks,
                               vanishing=False)
    if req.which == "bound":
        v = corollary_bound(req.p)
        want = lvalue_valuation_rhs(FormulaInput(req.p, 2, epsilon=-1))
        checks = {"matches_level_two_formula": v.equals(want.value)}
        return FormulaResponse(value=str(v), identity_checks=checks)
    # parity
    sign, vanishing = root_number_parity(req.W, req.n)
    flipped, _ = root_number_parity(req.W, req.n + 1)
    checks = {"flips_with_level_parity": sign == -flipped}
    return FormulaResponse(value=canonical_rational(sign),
                           identity_checks=checks, vanishing=vanishing)
