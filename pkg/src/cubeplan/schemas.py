"""Pydantic request/response models for the service and the CLI client."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .lattice import Configuration
from .moves import Move, Trace
from .oracle import DEFAULT_MAX_STATES, OracleResult
from .planner import ChainSpec

CellModel = tuple[int, ...]


class ConfigModel(BaseModel):
    d: int
    cells: list[CellModel]

    @classmethod
    def from_core(cls, V: Configuration) -> "ConfigModel":
        return cls(d=V.d, cells=V.sorted_cells())

    def to_core(self) -> Configuration:
        return Configuration.of(self.d, self.cells)


class MoveModel(BaseModel):
    kind: Literal["R", "S"]
    src: CellModel
    dst: CellModel
    pivot: Optional[CellModel] = None
    supports: Optional[tuple[CellModel, CellModel]] = None

    @classmethod
    def from_core(cls, m: Move) -> "MoveModel":
        return cls(kind=m.kind, src=m.src, dst=m.dst, pivot=m.pivot, supports=m.supports)

    def to_core(self) -> Move:
        return Move(self.kind, self.src, self.dst, pivot=self.pivot, supports=self.supports)


class TraceModel(BaseModel):
    d: int
    moves: list[MoveModel]

    @classmethod
    def from_core(cls, t: Trace) -> "TraceModel":
        return cls(d=t.initial.d, moves=[MoveModel.from_core(m) for m in t.moves])

    def to_core(self, initial: Configuration) -> Trace:
        return Trace(initial, tuple(m.to_core() for m in self.moves))


class ChainModel(BaseModel):
    d: int
    anchor: CellModel
    length: int

    @classmethod
    def from_core(cls, c: ChainSpec) -> "ChainModel":
        return cls(d=c.d, anchor=c.anchor, length=c.length)

    def to_core(self) -> ChainSpec:
        return ChainSpec(self.d, self.anchor, self.length)


class CanonicalizeRequest(BaseModel):
    config: ConfigModel


class CanonicalizeResponse(BaseModel):
    trace: TraceModel
    chain: ChainModel
    move_count: int


class PlanRequest(BaseModel):
    source: ConfigModel
    target: ConfigModel


class PlanResponse(BaseModel):
    trace: TraceModel
    move_count: int


class ValidateRequest(BaseModel):
    config: ConfigModel
    trace: TraceModel
    expect: Optional[ConfigModel] = None


class ValidateResponse(BaseModel):
    ok: bool
    final: Optional[ConfigModel] = None
    error_index: Optional[int] = None
    error_kind: Optional[str] = None
    detail: Optional[str] = None


class AnalyzeRequest(BaseModel):
    config: ConfigModel


class AnalyzeResponse(BaseModel):
    n: int
    d: int
    boundary_count: int
    hole_count: int
    articulation: list[CellModel]
    nonarticulate_count: int


class GenerateRequest(BaseModel):
    n: int = Field(ge=1)
    d: int = Field(ge=2)
    seed: int = 0
    style: Literal["blob", "tree", "serpentine"] = "blob"


class GenerateResponse(BaseModel):
    config: ConfigModel


class OracleRequest(BaseModel):
    source: ConfigModel
    target: ConfigModel
    max_states: int = DEFAULT_MAX_STATES


class OracleResponse(BaseModel):
    reachable: bool
    min_moves: Optional[int] = None
    states_explored: int
    exhausted: bool = False

    @classmethod
    def from_core(cls, r: OracleResult) -> "OracleResponse":
        return cls(reachable=r.reachable, min_moves=r.min_moves,
                   states_explored=r.states_explored, exhausted=r.exhausted)


class StatsRow(BaseModel):
    n: int
    trial: int
    moves: int
    elapsed_ms: float


class StatsRequest(BaseModel):
    d: int = Field(ge=2)
    n_list: list[int]
    trials: int = Field(ge=1, default=1)
    seed: int = 0
    style: Literal["blob", "tree", "serpentine"] = "blob"


class StatsResponse(BaseModel):
    rows: list[StatsRow]
    csv: str
