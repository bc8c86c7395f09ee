"""HTTP service exposing bounds, sweeps, verification suites and the solver.

Domain precondition violations map to 422 (usage), other package errors to
400 (computation failed); both carry the error message in ``detail``.
"""

from __future__ import annotations

import math
from typing import List

from fastapi import FastAPI, HTTPException

from .bounds import BOUND_KINDS, compute_bound, faber_krahn_reduce
from .compare import (
    crossover_p0n,
    crossover_p1n_p3n,
    crossover_table1,
    reproduce_table1,
    reproduce_table2,
)
from .eigen import inverse_power_iterate
from .errors import DomainError, PlbError
from .params import ProblemParams, derive
from .schemas import (
    BoundRecord,
    BoundRequest,
    CompareRequest,
    CompareResponse,
    CrossoverRecord,
    DomainSpec,
    EigRecord,
    EigRequest,
    SweepRequest,
    SweepResponse,
    Table2Row,
    TablesRequest,
    TablesResponse,
    VerifyReport,
    VerifyRequest,
    VerifyResponse,
)
from .suites import run_suite

app = FastAPI(title="p-Laplacian lower bounds")


def _params_from(spec: DomainSpec) -> ProblemParams:
    if spec.radius is not None:
        return derive(spec.p, spec.n, spec.radius)
    return faber_krahn_reduce(spec.volume, spec.p, spec.n)


def _usage(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


def _failure(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.post("/bound", response_model=BoundRecord)
def bound(req: BoundRequest) -> BoundRecord:
    try:
        params = _params_from(req)
        result = compute_bound(params, req.method, delta=req.delta)
    except DomainError as exc:
        raise _usage(exc)
    except PlbError as exc:
        raise _failure(exc)
    return BoundRecord(
        method=result.kind,
        p=params.p,
        n=params.n,
        R=params.R,
        value=result.value,
        applicable=result.applicable,
        meta=result.meta,
    )


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    if not req.methods:
        raise _usage(DomainError("sweep requires at least one method"))
    if req.p_step <= 0.0:
        raise _usage(DomainError("sweep requires p_step > 0"))
    unknown = [m for m in req.methods if m not in BOUND_KINDS]
    if unknown:
        raise _usage(DomainError(f"unknown methods {unknown}; expected {BOUND_KINDS}"))
    p_values: List[float] = []
    p = req.p_start
    while p <= req.p_stop + 1e-12:
        p_values.append(round(p, 12))
        p += req.p_step
    rows = []
    for n in sorted(req.n_list):
        for p in p_values:
            for method in sorted(req.methods):
                try:
                    params = derive(p, n, req.radius)
                    result = compute_bound(params, method)
                    value, applicable, meta = result.value, result.applicable, result.meta
                except PlbError:
                    value, applicable, meta = math.nan, False, {}
                rows.append(
                    BoundRecord(
                        method=method,
                        p=p,
                        n=n,
                        R=req.radius,
                        value=value,
                        applicable=applicable,
                        meta=meta,
                    )
                )
    return SweepResponse(rows=rows)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    try:
        reports = run_suite(req.suite, req.tol)
    except DomainError as exc:
        raise _usage(exc)
    except PlbError as exc:
        raise _failure(exc)
    models = [
        VerifyReport(
            case_name=r.case_name,
            lhs=r.lhs,
            rhs=r.rhs,
            ratio=r.ratio,
            lhs_error_est=r.lhs_error_est,
            rhs_error_est=r.rhs_error_est,
            tolerance=r.tolerance,
            passed=r.passed,
            details=r.details,
        )
        for r in reports
    ]
    return VerifyResponse(
        suite=req.suite, reports=models, all_passed=all(m.passed for m in models)
    )


@app.post("/eig", response_model=EigRecord)
def eig(req: EigRequest) -> EigRecord:
    try:
        params = _params_from(req)
        result = inverse_power_iterate(params, req.grid, req.tol, req.max_iter)
    except DomainError as exc:
        raise _usage(exc)
    except PlbError as exc:
        raise _failure(exc)
    return EigRecord(
        p=params.p,
        n=params.n,
        R=params.R,
        value=result.lambda_,
        meta={"iterations": result.iterations, "residual": result.residual},
    )


def _crossover_record(r) -> CrossoverRecord:
    return CrossoverRecord(
        n=r.n,
        kind=r.kind,
        p_star=r.p_star,
        residual=r.residual,
        bracket=r.bracket,
        applicable=r.applicable,
    )


@app.post("/compare", response_model=CompareResponse)
def compare(req: CompareRequest) -> CompareResponse:
    try:
        if req.which in ("p0n", "p1n", "p3n", "table1") and req.n is None:
            raise DomainError(f"compare --which {req.which} requires n")
        if req.which == "p0n":
            results = [crossover_p0n(req.n)]
        elif req.which in ("p1n", "p3n"):
            pair = crossover_p1n_p3n(req.n)
            results = [pair[0] if req.which == "p1n" else pair[1]]
        elif req.which == "table1":
            results = [crossover_table1(req.n)]
        else:
            raise DomainError(
                f"unknown comparison {req.which!r}; expected p0n|p1n|p3n|table1"
            )
    except DomainError as exc:
        raise _usage(exc)
    except PlbError as exc:
        raise _failure(exc)
    return CompareResponse(results=[_crossover_record(r) for r in results])


@app.post("/tables", response_model=TablesResponse)
def tables(req: TablesRequest) -> TablesResponse:
    try:
        if req.which == 1:
            return TablesResponse(
                which=1, crossovers=[_crossover_record(r) for r in reproduce_table1()]
            )
        if req.which == 2:
            rows = [
                Table2Row(p=r.p, n=r.n, values=r.values, ordering=r.ordering)
                for r in reproduce_table2(req.grid)
            ]
            return TablesResponse(which=2, rows=rows)
        raise DomainError(f"unknown table {req.which}; expected 1 or 2")
    except DomainError as exc:
        raise _usage(exc)
    except PlbError as exc:
        raise _failure(exc)
