"""Transcript analytics for online language-exchange meetings.

Parses speaker-attributed WebVTT transcripts, reconstructs speaker
turns, and measures how conversations are structured: a volatility
score adapted from historical price volatility (sample standard
deviation of log-returns of consecutive turn durations, scaled to a
per-minute turn rate), participation shares, and speaker-transition
counts, at whole-meeting, half-meeting, and per-participant
granularity. Includes corpus batch analysis, cohort aggregation
tables, a CLI, and an HTTP service.
"""

from ._version import __version__
from .errors import (
    BadManifest,
    BadMeta,
    BadTimestamp,
    EmptyInput,
    EmptyTranscript,
    NonpositiveDuration,
    NotFound,
    NotVtt,
    TalkmeterError,
    TooShort,
)
from .vtt import (
    ParseDiagnostics,
    ParseWarning,
    Utterance,
    format_timestamp,
    parse_timestamp,
    parse_vtt,
    serialize_vtt,
)
from .meta import MeetingMeta, load_meta
from .turns import (
    FIRST_HALF,
    SECOND_HALF,
    WHOLE,
    Segment,
    Turn,
    build_turns,
    split_halves,
    split_point,
    whole_segment,
)
from .metrics import (
    MeetingMetrics,
    ParticipationStats,
    SegmentMetrics,
    TransitionMatrix,
    VolatilityConfig,
    VolatilityResult,
    log_returns,
    meeting_metrics,
    participation,
    participant_volatility,
    transitions,
    volatility,
    volatility_from_durations,
)
from .report import (
    AnalysisOptions,
    MeetingReport,
    analyze_utterances,
    analyze_vtt,
    read_report,
    report_from_doc,
    report_from_json,
    report_to_doc,
    report_to_json,
    write_report,
)
from .cohort import (
    CohortManifest,
    CorpusError,
    CorpusResult,
    GroupLanguageSummary,
    ManifestRow,
    analyze_corpus,
    corpus_stats,
    group_language_averages,
    load_manifest,
    ols_slope,
    parse_manifest,
    student_language_averages,
    week_progression,
)
from .htmlpage import render_html

__all__ = [
    "__version__",
    "TalkmeterError", "NotVtt", "EmptyTranscript", "BadTimestamp", "BadMeta",
    "BadManifest", "NotFound", "TooShort", "NonpositiveDuration", "EmptyInput",
    "Utterance", "ParseWarning", "ParseDiagnostics",
    "parse_vtt", "serialize_vtt", "parse_timestamp", "format_timestamp",
    "MeetingMeta", "load_meta",
    "Turn", "Segment", "WHOLE", "FIRST_HALF", "SECOND_HALF",
    "build_turns", "split_point", "split_halves", "whole_segment",
    "VolatilityConfig", "VolatilityResult", "ParticipationStats",
    "TransitionMatrix", "SegmentMetrics", "MeetingMetrics",
    "log_returns", "volatility_from_durations", "volatility",
    "participant_volatility", "participation", "transitions", "meeting_metrics",
    "AnalysisOptions", "MeetingReport", "analyze_utterances", "analyze_vtt",
    "report_to_doc", "report_from_doc", "report_to_json", "report_from_json",
    "read_report", "write_report",
    "CohortManifest", "ManifestRow", "CorpusError", "CorpusResult",
    "GroupLanguageSummary", "load_manifest", "parse_manifest", "analyze_corpus",
    "group_language_averages", "student_language_averages", "week_progression",
    "corpus_stats", "ols_slope",
    "render_html",
]
