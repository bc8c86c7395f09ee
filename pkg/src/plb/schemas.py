"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class DomainSpec(BaseModel):
    """Problem parameters; exactly one of radius or volume selects the ball."""

    p: float
    n: int
    radius: Optional[float] = None
    volume: Optional[float] = None

    @model_validator(mode="after")
    def _radius_xor_volume(self):
        if (self.radius is None) == (self.volume is None):
            raise ValueError("exactly one of radius or volume must be given")
        return self


class BoundRequest(DomainSpec):
    method: str
    delta: Optional[float] = None


class BoundRecord(BaseModel):
    """The shared output record for a single bound-style value."""

    model_config = ConfigDict(extra="forbid")

    method: str
    p: float
    n: int
    R: float
    value: float
    applicable: bool
    meta: Dict[str, object] = {}


class SweepRequest(BaseModel):
    p_start: float
    p_stop: float
    p_step: float
    n_list: List[int]
    methods: List[str]
    radius: float = 1.0


class SweepResponse(BaseModel):
    rows: List[BoundRecord]


class VerifyRequest(BaseModel):
    suite: str
    tol: Optional[float] = None


class VerifyReport(BaseModel):
    case_name: str
    lhs: float
    rhs: float
    ratio: float
    lhs_error_est: float
    rhs_error_est: float
    tolerance: float
    passed: bool
    details: Dict[str, object] = {}


class VerifyResponse(BaseModel):
    suite: str
    reports: List[VerifyReport]
    all_passed: bool


class EigRequest(DomainSpec):
    grid: int = 2048
    tol: float = 1e-8
    max_iter: int = 500


class EigRecord(BaseModel):
    method: str = "eigen_solver"
    p: float
    n: int
    R: float
    value: float
    applicable: bool = True
    meta: Dict[str, object] = {}


class CompareRequest(BaseModel):
    which: str
    n: Optional[int] = None


class CrossoverRecord(BaseModel):
    n: int
    kind: str
    p_star: float
    residual: float
    bracket: Tuple[float, float]
    applicable: bool


class CompareResponse(BaseModel):
    results: List[CrossoverRecord]


class TablesRequest(BaseModel):
    which: int
    grid: int = 2048


class Table2Row(BaseModel):
    p: float
    n: int
    values: Dict[str, float]
    ordering: str


class TablesResponse(BaseModel):
    which: int
    crossovers: List[CrossoverRecord] = []
    rows: List[Table2Row] = []
