"""Request and response models for the HTTP service.

The response models mirror the canonical report document, so the API
contract and the on-disk schema stay in lockstep. Only JSON-safe types
appear here; precision guarantees (6-decimal reals) apply to file
serialization, not HTTP bodies.
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel


def model_dump(model: BaseModel) -> dict:
    # pydantic v2 and v1 spell this differently
    if hasattr(model, "model_dump"):
        return model.model_dump()
    return model.dict()


class MetaIn(BaseModel):
    meeting_id: str
    group_id: Optional[str] = None
    week_index: int = 1
    participants: Optional[list[str]] = None
    first_half_language: str = "unknown"
    second_half_language: str = "unknown"
    recorded_duration_s: Optional[float] = None
    changeover_s: Optional[float] = None
    media_url: Optional[str] = None


class ConfigIn(BaseModel):
    duration_mode: Literal["span", "summed"] = "span"
    series_unit: Literal["turns", "utterances"] = "turns"
    rate_scale: Literal["per-minute", "none"] = "per-minute"
    min_turns: int = 3
    gap_break_s: Optional[float] = None
    exclude_unknown_speaker: bool = False


class AnalyzeRequest(BaseModel):
    vtt: str
    meta: MetaIn
    config: ConfigIn = ConfigIn()


class MeetingOut(BaseModel):
    meeting_id: str
    group_id: str
    week_index: int
    participants: Optional[list[str]]
    first_half_language: str
    second_half_language: str
    recorded_duration_s: Optional[float]
    changeover_s: Optional[float]
    media_url: Optional[str]


class ConfigOut(BaseModel):
    duration_mode: str
    series_unit: str
    rate_scale_mode: str
    min_points: int
    gap_break_s: Optional[float]
    exclude_unknown_speaker: bool


class DiagnosticsOut(BaseModel):
    dropped_cue_count: int
    source_byte_count: int
    warning_count: int
    warnings: list[tuple[int, str, str]]


class UtteranceOut(BaseModel):
    index: int
    speaker: str
    start_s: float
    end_s: float
    text: str


class TurnOut(BaseModel):
    speaker: str
    start_s: float
    end_s: float
    duration_s: float
    summed_duration_s: float
    utterance_indices: list[int]


class ParticipationOut(BaseModel):
    speaker: str
    speaking_time_s: float
    participation_pct: float
    turn_count: int


class TransitionsOut(BaseModel):
    speakers: list[str]
    counts: list[list[int]]


class VolatilityOut(BaseModel):
    n_points: int
    raw_sigma: Optional[float]
    rate_scale: Optional[float]
    volatility: Optional[float]
    defined: bool


class ParticipantVolatilityOut(VolatilityOut):
    speaker: str


class SegmentOut(BaseModel):
    label: str
    language: str
    span_start_s: float
    span_end_s: float
    turn_count: int
    turns: list[TurnOut]
    participation: list[ParticipationOut]
    transitions: TransitionsOut
    volatility: VolatilityOut
    per_participant_volatility: list[ParticipantVolatilityOut]


class ReportOut(BaseModel):
    schema_version: int
    tool_version: str
    formula: str
    meeting: MeetingOut
    config: ConfigOut
    split_s: float
    speakers: list[str]
    diagnostics: DiagnosticsOut
    utterances: list[UtteranceOut]
    segments: dict[str, SegmentOut]
    media_url: Optional[str]


class AggregateRequest(BaseModel):
    reports: list[dict[str, Any]]
    by: Literal["group-language", "student-language", "week", "stats"]
    language: Optional[str] = None
    duration_weighted: bool = False


class AggregateResponse(BaseModel):
    by: str
    n_reports: int
    csv: str
    slope: Optional[float] = None


class HealthOut(BaseModel):
    status: str
    version: str


class ErrorOut(BaseModel):
    code: str
    message: str
