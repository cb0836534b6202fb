"""FastAPI surface over the planner, validator and analysis toolkit.

Error contract: structurally invalid inputs get HTTP 422 (code "invalid"),
infeasible planning inputs 409 (code "infeasible"), violated internal
guarantees 500 (code "internal"). Trace validation failures are not HTTP
errors; they come back as ok=False with the offending move index.
"""
from __future__ import annotations

import functools

from fastapi import FastAPI, HTTPException

from . import analysis, lattice, oracle, planner, stats
from .errors import (InfeasibleError, InternalAssertionError, MalformedMoveError,
                     TraceError)
from .moves import validate_trace
from .generate import GenSpec, random_connected
from .schemas import (AnalyzeRequest, AnalyzeResponse, CanonicalizeRequest,
                      CanonicalizeResponse, ChainModel, ConfigModel,
                      GenerateRequest, GenerateResponse, OracleRequest,
                      OracleResponse, PlanRequest, PlanResponse, StatsRequest,
                      StatsResponse, StatsRow, TraceModel, ValidateRequest,
                      ValidateResponse)

app = FastAPI(title="cubeplan", description="Sliding-cube lattice reconfiguration service")


def _core_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InternalAssertionError as exc:
            raise HTTPException(500, {"code": "internal", "message": str(exc)}) from exc
        except InfeasibleError as exc:
            raise HTTPException(409, {"code": "infeasible", "message": str(exc)}) from exc
        except (ValueError, KeyError, MalformedMoveError) as exc:
            raise HTTPException(422, {"code": "invalid", "message": str(exc)}) from exc
    return wrapper


@app.post("/canonicalize", response_model=CanonicalizeResponse)
@_core_errors
def canonicalize(req: CanonicalizeRequest) -> CanonicalizeResponse:
    trace, chain = planner.canonicalize(req.config.to_core())
    return CanonicalizeResponse(trace=TraceModel.from_core(trace),
                                chain=ChainModel.from_core(chain),
                                move_count=len(trace.moves))


@app.post("/plan", response_model=PlanResponse)
@_core_errors
def plan(req: PlanRequest) -> PlanResponse:
    trace = planner.plan(req.source.to_core(), req.target.to_core())
    return PlanResponse(trace=TraceModel.from_core(trace), move_count=len(trace.moves))


@app.post("/validate", response_model=ValidateResponse)
@_core_errors
def validate(req: ValidateRequest) -> ValidateResponse:
    initial = req.config.to_core()
    if req.trace.d != initial.d:
        return ValidateResponse(ok=False, error_index=-1, error_kind="malformed",
                                detail="trace dimension differs from configuration")
    trace = req.trace.to_core(initial)
    try:
        final = validate_trace(trace)
    except TraceError as exc:
        return ValidateResponse(ok=False, error_index=exc.index, error_kind=exc.kind,
                                detail=str(exc))
    if req.expect is not None and req.expect.to_core().cells != final.cells:
        return ValidateResponse(ok=False, final=ConfigModel.from_core(final),
                                error_kind="expectation",
                                detail="final configuration differs from --expect target")
    return ValidateResponse(ok=True, final=ConfigModel.from_core(final))


@app.post("/analyze", response_model=AnalyzeResponse)
@_core_errors
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    V = req.config.to_core()
    summary = lattice.outer_boundary(V)
    nonart = analysis.nonarticulate_modules(V)
    articulation = [c for c in V.sorted_cells() if c not in set(nonart)]
    return AnalyzeResponse(n=V.n, d=V.d,
                           boundary_count=len(summary.modules),
                           hole_count=len(summary.holes),
                           articulation=articulation,
                           nonarticulate_count=len(nonart))


@app.post("/generate", response_model=GenerateResponse)
@_core_errors
def generate(req: GenerateRequest) -> GenerateResponse:
    V = random_connected(GenSpec(n=req.n, d=req.d, seed=req.seed, style=req.style))
    return GenerateResponse(config=ConfigModel.from_core(V))


@app.post("/oracle", response_model=OracleResponse)
@_core_errors
def oracle_endpoint(req: OracleRequest) -> OracleResponse:
    result = oracle.oracle_reachable(req.source.to_core(), req.target.to_core(),
                                     max_states=req.max_states)
    return OracleResponse.from_core(result)


@app.post("/stats", response_model=StatsResponse)
@_core_errors
def stats_endpoint(req: StatsRequest) -> StatsResponse:
    rows = stats.stats_run(req.d, req.n_list, req.trials, req.seed, style=req.style)
    return StatsResponse(rows=[StatsRow(n=n, trial=t, moves=m, elapsed_ms=ms)
                               for n, t, m, ms in rows],
                         csv=stats.rows_to_csv(rows))
