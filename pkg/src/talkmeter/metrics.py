"""Participation, turn-transition, and conversational-volatility metrics.

Conversational volatility adapts historical volatility to turn taking:
the sample standard deviation of log-returns of consecutive turn
durations, scaled by the square root of turns per minute so segments of
different turn density stay comparable. Interruption-rich dialogue mixes
short and long turns and scores high; a flat series of monologues scores
near zero.
"""

import math
import statistics
from dataclasses import dataclass
from typing import Optional

from .errors import NonpositiveDuration, TooShort
from .meta import MeetingMeta
from .turns import (
    DURATION_SPAN,
    DURATION_SUMMED,
    Segment,
    Turn,
    split_halves,
    split_point,
    whole_segment,
)

SERIES_TURNS = "turns"
SERIES_UTTERANCES = "utterances"
RATE_PER_MINUTE = "per_minute"
RATE_NONE = "none"


@dataclass(frozen=True)
class VolatilityConfig:
    """Knobs for the volatility series; defaults are the primary formula."""

    duration_mode: str = DURATION_SPAN
    series_unit: str = SERIES_TURNS
    rate_scale_mode: str = RATE_PER_MINUTE
    min_points: int = 3

    def __post_init__(self):
        if self.duration_mode not in (DURATION_SPAN, DURATION_SUMMED):
            raise ValueError(f"bad duration_mode {self.duration_mode!r}")
        if self.series_unit not in (SERIES_TURNS, SERIES_UTTERANCES):
            raise ValueError(f"bad series_unit {self.series_unit!r}")
        if self.rate_scale_mode not in (RATE_PER_MINUTE, RATE_NONE):
            raise ValueError(f"bad rate_scale_mode {self.rate_scale_mode!r}")
        if self.min_points < 3:
            raise ValueError("min_points must be at least 3")


@dataclass(frozen=True)
class VolatilityResult:
    """Volatility of one series. Undefined results carry None, never 0:
    zero means a perfectly flat conversation, which is a different claim
    than "too few turns to measure"."""

    n_points: int
    raw_sigma: Optional[float]
    rate_scale: Optional[float]
    volatility: Optional[float]
    defined: bool


@dataclass(frozen=True)
class SpeakerParticipation:
    speaker_id: str
    speaking_time_s: float
    participation_pct: float
    turn_count: int


@dataclass(frozen=True)
class ParticipationStats:
    rows: tuple[SpeakerParticipation, ...]

    @property
    def total_speaking_time_s(self) -> float:
        return sum(r.speaking_time_s for r in self.rows)

    def by_speaker(self) -> dict[str, SpeakerParticipation]:
        return {r.speaker_id: r for r in self.rows}


@dataclass(frozen=True)
class TransitionMatrix:
    """counts[i][j] = turns by speakers[j] immediately following speakers[i]."""

    speakers: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def count(self, from_speaker: str, to_speaker: str) -> int:
        i = self.speakers.index(from_speaker)
        j = self.speakers.index(to_speaker)
        return self.counts[i][j]


def speaker_order(turns: list[Turn], roster: Optional[tuple[str, ...]] = None) -> list[str]:
    """Canonical speaker ordering: roster order first, then first
    appearance. Used for every table so colors and rows stay stable."""
    order: list[str] = list(roster) if roster else []
    seen = set(order)
    for t in turns:
        if t.speaker_id not in seen:
            seen.add(t.speaker_id)
            order.append(t.speaker_id)
    return order


def log_returns(durations: list[float]) -> list[float]:
    """r_i = ln(d_{i+1} / d_i) for consecutive durations."""
    if len(durations) < 2:
        raise TooShort(f"need at least 2 durations, got {len(durations)}")
    for d in durations:
        if d <= 0:
            raise NonpositiveDuration(f"durations must be positive, got {d}")
    return [math.log(durations[i + 1] / durations[i]) for i in range(len(durations) - 1)]


def _series_durations(
    segment: Segment, config: VolatilityConfig, speaker: Optional[str] = None
) -> list[float]:
    turns = [t for t in segment.turns if speaker is None or t.speaker_id == speaker]
    if config.series_unit == SERIES_UTTERANCES:
        members = sorted(
            (u for t in turns for u in t.members), key=lambda u: u.index
        )
        return [u.duration_s for u in members]
    return [t.duration(config.duration_mode) for t in turns]


def volatility_from_durations(
    durations: list[float], span_minutes: float, config: VolatilityConfig
) -> VolatilityResult:
    """Core formula on a plain duration series over a span in minutes."""
    n = len(durations)
    undefined = VolatilityResult(
        n_points=n, raw_sigma=None, rate_scale=None, volatility=None, defined=False
    )
    if n < config.min_points:
        return undefined
    returns = log_returns(durations)
    sigma = statistics.stdev(returns)
    if config.rate_scale_mode == RATE_PER_MINUTE:
        if span_minutes <= 0:
            return undefined
        scale = math.sqrt(n / span_minutes)
    else:
        scale = 1.0
    return VolatilityResult(
        n_points=n,
        raw_sigma=sigma,
        rate_scale=scale,
        volatility=sigma * scale,
        defined=True,
    )


def volatility(segment: Segment, config: VolatilityConfig = VolatilityConfig()) -> VolatilityResult:
    """Volatility of the segment's whole duration series."""
    return volatility_from_durations(
        _series_durations(segment, config), segment.span_minutes, config
    )


def participant_volatility(
    segment: Segment, speaker: str, config: VolatilityConfig = VolatilityConfig()
) -> VolatilityResult:
    """Volatility of one speaker's subsequence. The span stays the full
    segment span, so sparse speakers get a smaller rate scale."""
    return volatility_from_durations(
        _series_durations(segment, config, speaker), segment.span_minutes, config
    )


def participation(
    segment: Segment,
    duration_mode: str = DURATION_SPAN,
    roster: Optional[list[str]] = None,
) -> ParticipationStats:
    """Speaking time, share of total speaking time, and turn counts.

    Percentages use total speaking time as the denominator (they sum to
    100 whenever anyone spoke). Roster speakers with no turns get zeros.
    """
    order = speaker_order(list(segment.turns), tuple(roster) if roster else None)
    time_by: dict[str, float] = {s: 0.0 for s in order}
    count_by: dict[str, int] = {s: 0 for s in order}
    for t in segment.turns:
        time_by[t.speaker_id] += t.duration(duration_mode)
        count_by[t.speaker_id] += 1
    total = sum(time_by.values())
    rows = tuple(
        SpeakerParticipation(
            speaker_id=s,
            speaking_time_s=time_by[s],
            participation_pct=(100.0 * time_by[s] / total) if total > 0 else 0.0,
            turn_count=count_by[s],
        )
        for s in order
    )
    return ParticipationStats(rows=rows)


def transitions(
    segment: Segment, speakers: Optional[list[str]] = None
) -> TransitionMatrix:
    """Who-followed-who counts over adjacent turn pairs in the segment.

    Self-pairs are never counted, so the diagonal is always zero; under
    the default turn construction adjacent turns differ in speaker anyway
    and the total equals max(0, n_turns - 1).
    """
    order = speaker_order(list(segment.turns), tuple(speakers) if speakers else None)
    index = {s: i for i, s in enumerate(order)}
    k = len(order)
    counts = [[0] * k for _ in range(k)]
    for prev, cur in zip(segment.turns, segment.turns[1:]):
        if prev.speaker_id != cur.speaker_id:
            counts[index[prev.speaker_id]][index[cur.speaker_id]] += 1
    return TransitionMatrix(
        speakers=tuple(order), counts=tuple(tuple(row) for row in counts)
    )


@dataclass(frozen=True)
class SegmentMetrics:
    """Everything computed for one segment."""

    segment: Segment
    participation: ParticipationStats
    transitions: TransitionMatrix
    volatility: VolatilityResult
    per_participant: tuple[tuple[str, VolatilityResult], ...]


@dataclass(frozen=True)
class MeetingMetrics:
    split_s: float
    speaker_order: tuple[str, ...]
    whole: SegmentMetrics
    first_half: SegmentMetrics
    second_half: SegmentMetrics

    @property
    def segments(self) -> tuple[SegmentMetrics, SegmentMetrics, SegmentMetrics]:
        return (self.whole, self.first_half, self.second_half)


def _segment_metrics(
    segment: Segment, order: list[str], config: VolatilityConfig
) -> SegmentMetrics:
    return SegmentMetrics(
        segment=segment,
        participation=participation(segment, config.duration_mode, order),
        transitions=transitions(segment, order),
        volatility=volatility(segment, config),
        per_participant=tuple(
            (s, participant_volatility(segment, s, config)) for s in order
        ),
    )


def meeting_metrics(
    turns: list[Turn], meta: MeetingMeta, config: VolatilityConfig = VolatilityConfig()
) -> MeetingMetrics:
    """All three segment views (whole, first half, second half) with
    participation, transitions, and group plus per-participant volatility."""
    utterances = sorted((u for t in turns for u in t.members), key=lambda u: u.index)
    split_s = split_point(meta, utterances)
    whole = whole_segment(turns)
    first, second = split_halves(
        turns, split_s, meta.first_half_language, meta.second_half_language
    )
    order = speaker_order(turns, meta.participants)
    return MeetingMetrics(
        split_s=split_s,
        speaker_order=tuple(order),
        whole=_segment_metrics(whole, order, config),
        first_half=_segment_metrics(first, order, config),
        second_half=_segment_metrics(second, order, config),
    )
