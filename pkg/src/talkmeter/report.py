"""Meeting report assembly and canonical serialization.

A report is a single self-contained JSON document: meeting metadata, the
effective analysis configuration (formula provenance), the utterance
table, and all three segment views with their metrics. Serialization is
canonical — fixed field order, fixed 6-decimal real formatting — so
identical inputs produce byte-identical files regardless of worker count
or platform.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from ._version import __version__
from .errors import BadMeta
from .meta import MeetingMeta, load_meta
from .metrics import (
    MeetingMetrics,
    ParticipationStats,
    SegmentMetrics,
    SpeakerParticipation,
    TransitionMatrix,
    VolatilityConfig,
    VolatilityResult,
    meeting_metrics,
)
from .turns import FIRST_HALF, SECOND_HALF, WHOLE, Segment, Turn, build_turns
from .vtt import ParseDiagnostics, ParseWarning, Utterance, UNKNOWN_SPEAKER, parse_vtt

SCHEMA_VERSION = 1
# Bumped whenever the volatility computation changes meaning, so scores
# from different builds are never compared silently.
FORMULA_VERSION = "logreturn-stdev-sqrt-rate-v1"

SEGMENT_LABELS = (WHOLE, FIRST_HALF, SECOND_HALF)


def quantize6(x: float) -> float:
    """Round to the canonical 6-decimal wire precision."""
    q = float(format(x, ".6f"))
    return q + 0.0 if q == 0 else q


def fmt6(x: float) -> str:
    s = format(x, ".6f")
    return "0.000000" if s == "-0.000000" else s


@dataclass(frozen=True)
class AnalysisOptions:
    """Everything that can change the numbers in a report."""

    volatility: VolatilityConfig = field(default_factory=VolatilityConfig)
    gap_break_s: Optional[float] = None
    exclude_unknown_speaker: bool = False


@dataclass(frozen=True)
class MeetingReport:
    meta: MeetingMeta
    options: AnalysisOptions
    diagnostics: ParseDiagnostics
    utterances: tuple[Utterance, ...]
    metrics: MeetingMetrics
    schema_version: int = SCHEMA_VERSION
    tool_version: str = __version__

    def segment_metrics(self, label: str) -> SegmentMetrics:
        for sm in self.metrics.segments:
            if sm.segment.label == label:
                return sm
        raise KeyError(label)

    @property
    def duration_s(self) -> float:
        """Meeting duration: recorded length if annotated, else the span
        of the whole segment."""
        if self.meta.recorded_duration_s is not None:
            return self.meta.recorded_duration_s
        seg = self.segment_metrics(WHOLE).segment
        return seg.span_end_s - seg.span_start_s


def analyze_utterances(
    utterances: list[Utterance],
    diagnostics: ParseDiagnostics,
    meta: MeetingMeta,
    options: AnalysisOptions = AnalysisOptions(),
) -> MeetingReport:
    """Run the full per-meeting pipeline on parsed utterances."""
    utts = list(utterances)
    if options.exclude_unknown_speaker:
        kept = [u for u in utts if u.speaker_id != UNKNOWN_SPEAKER]
        utts = [
            Utterance(index=k, speaker_id=u.speaker_id, start_s=u.start_s,
                      end_s=u.end_s, text=u.text)
            for k, u in enumerate(kept)
        ]
    turns = build_turns(utts, options.gap_break_s)
    mm = meeting_metrics(turns, meta, options.volatility)
    return MeetingReport(
        meta=meta,
        options=options,
        diagnostics=diagnostics,
        utterances=tuple(utts),
        metrics=mm,
    )


def analyze_vtt(
    data: bytes, meta: MeetingMeta, options: AnalysisOptions = AnalysisOptions()
) -> MeetingReport:
    """Parse VTT bytes and analyze them in one step."""
    roster = list(meta.participants) if meta.participants else None
    utterances, diagnostics = parse_vtt(data, known_speakers=roster)
    return analyze_utterances(utterances, diagnostics, meta, options)


# ---------------------------------------------------------------------------
# Document building


def _volatility_doc(v: VolatilityResult) -> dict[str, Any]:
    return {
        "n_points": v.n_points,
        "raw_sigma": v.raw_sigma,
        "rate_scale": v.rate_scale,
        "volatility": v.volatility,
        "defined": v.defined,
    }


def _segment_doc(sm: SegmentMetrics) -> dict[str, Any]:
    seg = sm.segment
    return {
        "label": seg.label,
        "language": seg.language,
        "span_start_s": seg.span_start_s,
        "span_end_s": seg.span_end_s,
        "turn_count": len(seg.turns),
        "turns": [
            {
                "speaker": t.speaker_id,
                "start_s": t.start_s,
                "end_s": t.end_s,
                "duration_s": t.duration_s,
                "summed_duration_s": t.summed_duration_s,
                "utterance_indices": list(t.utterance_indices),
            }
            for t in seg.turns
        ],
        "participation": [
            {
                "speaker": r.speaker_id,
                "speaking_time_s": r.speaking_time_s,
                "participation_pct": r.participation_pct,
                "turn_count": r.turn_count,
            }
            for r in sm.participation.rows
        ],
        "transitions": {
            "speakers": list(sm.transitions.speakers),
            "counts": [list(row) for row in sm.transitions.counts],
        },
        "volatility": _volatility_doc(sm.volatility),
        "per_participant_volatility": [
            {"speaker": s, **_volatility_doc(v)} for s, v in sm.per_participant
        ],
    }


def report_to_doc(report: MeetingReport) -> dict[str, Any]:
    """Plain-dict form of the report, in canonical field order."""
    meta = report.meta
    opts = report.options
    return {
        "schema_version": report.schema_version,
        "tool_version": report.tool_version,
        "formula": FORMULA_VERSION,
        "meeting": {
            "meeting_id": meta.meeting_id,
            "group_id": meta.group_id,
            "week_index": meta.week_index,
            "participants": list(meta.participants) if meta.participants else None,
            "first_half_language": meta.first_half_language,
            "second_half_language": meta.second_half_language,
            "recorded_duration_s": meta.recorded_duration_s,
            "changeover_s": meta.changeover_s,
            "media_url": meta.media_url,
        },
        "config": {
            "duration_mode": opts.volatility.duration_mode,
            "series_unit": opts.volatility.series_unit,
            "rate_scale_mode": opts.volatility.rate_scale_mode,
            "min_points": opts.volatility.min_points,
            "gap_break_s": opts.gap_break_s,
            "exclude_unknown_speaker": opts.exclude_unknown_speaker,
        },
        "split_s": report.metrics.split_s,
        "speakers": list(report.metrics.speaker_order),
        "diagnostics": {
            "dropped_cue_count": report.diagnostics.dropped_cue_count,
            "source_byte_count": report.diagnostics.source_byte_count,
            "warning_count": len(report.diagnostics.warnings),
            "warnings": [
                [w.line, w.code, w.message] for w in report.diagnostics.warnings
            ],
        },
        "utterances": [
            {
                "index": u.index,
                "speaker": u.speaker_id,
                "start_s": u.start_s,
                "end_s": u.end_s,
                "text": u.text,
            }
            for u in report.utterances
        ],
        "segments": {
            sm.segment.label: _segment_doc(sm) for sm in report.metrics.segments
        },
        "media_url": meta.media_url,
    }


# ---------------------------------------------------------------------------
# Canonical JSON emission


def _write_value(value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(fmt6(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for k, (key, item) in enumerate(value.items()):
            out.append(f'{pad}  {json.dumps(str(key), ensure_ascii=False)}: ')
            _write_value(item, indent + 1, out)
            out.append(",\n" if k < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for k, item in enumerate(value):
            out.append(pad + "  ")
            _write_value(item, indent + 1, out)
            out.append(",\n" if k < len(value) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_canonical(doc: Any) -> str:
    out: list[str] = []
    _write_value(doc, 0, out)
    return "".join(out) + "\n"


def report_to_json(report: MeetingReport) -> str:
    return dumps_canonical(report_to_doc(report))


def write_report(report: MeetingReport, path: Path) -> None:
    Path(path).write_text(report_to_json(report), encoding="utf-8")


# ---------------------------------------------------------------------------
# Reading reports back


def _volatility_from_doc(d: dict[str, Any]) -> VolatilityResult:
    return VolatilityResult(
        n_points=d["n_points"],
        raw_sigma=d["raw_sigma"],
        rate_scale=d["rate_scale"],
        volatility=d["volatility"],
        defined=d["defined"],
    )


def _segment_from_doc(d: dict[str, Any], utterances: tuple[Utterance, ...]) -> SegmentMetrics:
    turns = tuple(
        Turn(
            speaker_id=t["speaker"],
            start_s=t["start_s"],
            end_s=t["end_s"],
            members=tuple(utterances[i] for i in t["utterance_indices"]),
        )
        for t in d["turns"]
    )
    segment = Segment(
        label=d["label"],
        language=d["language"],
        span_start_s=d["span_start_s"],
        span_end_s=d["span_end_s"],
        turns=turns,
    )
    rows = tuple(
        SpeakerParticipation(
            speaker_id=r["speaker"],
            speaking_time_s=r["speaking_time_s"],
            participation_pct=r["participation_pct"],
            turn_count=r["turn_count"],
        )
        for r in d["participation"]
    )
    matrix = TransitionMatrix(
        speakers=tuple(d["transitions"]["speakers"]),
        counts=tuple(tuple(row) for row in d["transitions"]["counts"]),
    )
    return SegmentMetrics(
        segment=segment,
        participation=ParticipationStats(rows=rows),
        transitions=matrix,
        volatility=_volatility_from_doc(d["volatility"]),
        per_participant=tuple(
            (p["speaker"], _volatility_from_doc(p))
            for p in d["per_participant_volatility"]
        ),
    )


def report_from_doc(doc: dict[str, Any]) -> MeetingReport:
    """Reconstruct a MeetingReport from a parsed report document."""
    try:
        meta = load_meta(doc["meeting"])
        cfg = doc["config"]
        options = AnalysisOptions(
            volatility=VolatilityConfig(
                duration_mode=cfg["duration_mode"],
                series_unit=cfg["series_unit"],
                rate_scale_mode=cfg["rate_scale_mode"],
                min_points=cfg["min_points"],
            ),
            gap_break_s=cfg["gap_break_s"],
            exclude_unknown_speaker=cfg["exclude_unknown_speaker"],
        )
        diag = doc["diagnostics"]
        diagnostics = ParseDiagnostics(
            warnings=[ParseWarning(w[0], w[1], w[2]) for w in diag["warnings"]],
            dropped_cue_count=diag["dropped_cue_count"],
            source_byte_count=diag["source_byte_count"],
        )
        utterances = tuple(
            Utterance(
                index=u["index"],
                speaker_id=u["speaker"],
                start_s=u["start_s"],
                end_s=u["end_s"],
                text=u["text"],
            )
            for u in doc["utterances"]
        )
        segs = {
            label: _segment_from_doc(doc["segments"][label], utterances)
            for label in SEGMENT_LABELS
        }
        metrics = MeetingMetrics(
            split_s=doc["split_s"],
            speaker_order=tuple(doc["speakers"]),
            whole=segs[WHOLE],
            first_half=segs[FIRST_HALF],
            second_half=segs[SECOND_HALF],
        )
        return MeetingReport(
            meta=meta,
            options=options,
            diagnostics=diagnostics,
            utterances=utterances,
            metrics=metrics,
            schema_version=doc["schema_version"],
            tool_version=doc["tool_version"],
        )
    except BadMeta:
        raise
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"not a valid report document: {exc}") from exc


def report_from_json(text: str) -> MeetingReport:
    return report_from_doc(json.loads(text))


def read_report(path: Path) -> MeetingReport:
    return report_from_json(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Per-meeting CSV tables


def _csv_text(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _opt(x: Optional[float]) -> str:
    return fmt6(x) if x is not None else ""


def meeting_csv_tables(report: MeetingReport) -> dict[str, str]:
    """The per-meeting CSV tables keyed by file name."""
    # Turn is a frozen dataclass, so membership works on reconstructed
    # reports too, where the half segments hold fresh but equal objects.
    first_turns = set(report.segment_metrics(FIRST_HALF).segment.turns)
    turn_rows = []
    for k, t in enumerate(report.segment_metrics(WHOLE).segment.turns):
        half = FIRST_HALF if t in first_turns else SECOND_HALF
        turn_rows.append(
            [
                k,
                t.speaker_id,
                fmt6(t.start_s),
                fmt6(t.end_s),
                fmt6(t.duration_s),
                fmt6(t.summed_duration_s),
                half,
                "|".join(str(i) for i in t.utterance_indices),
            ]
        )

    part_rows = []
    trans_rows = []
    vol_rows = []
    for sm in report.metrics.segments:
        label = sm.segment.label
        for r in sm.participation.rows:
            part_rows.append(
                [label, r.speaker_id, fmt6(r.speaking_time_s),
                 fmt6(r.participation_pct), r.turn_count]
            )
        m = sm.transitions
        for i, src in enumerate(m.speakers):
            for j, dst in enumerate(m.speakers):
                if m.counts[i][j]:
                    trans_rows.append([label, src, dst, m.counts[i][j]])
        v = sm.volatility
        vol_rows.append(
            [label, "group", v.n_points, _opt(v.raw_sigma), _opt(v.rate_scale),
             _opt(v.volatility), str(v.defined).lower()]
        )
        for s, pv in sm.per_participant:
            vol_rows.append(
                [label, s, pv.n_points, _opt(pv.raw_sigma), _opt(pv.rate_scale),
                 _opt(pv.volatility), str(pv.defined).lower()]
            )

    return {
        "turns.csv": _csv_text(
            ["turn_index", "speaker", "start_s", "end_s", "duration_s",
             "summed_duration_s", "half", "utterance_indices"],
            turn_rows,
        ),
        "participation.csv": _csv_text(
            ["segment", "speaker", "speaking_time_s", "participation_pct", "turn_count"],
            part_rows,
        ),
        "transitions.csv": _csv_text(
            ["segment", "from_speaker", "to_speaker", "count"], trans_rows
        ),
        "volatility.csv": _csv_text(
            ["segment", "scope", "n_points", "raw_sigma", "rate_scale",
             "volatility", "defined"],
            vol_rows,
        ),
    }


def write_meeting_csvs(report: MeetingReport, directory: Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in meeting_csv_tables(report).items():
        path = directory / name
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written


def summary_line(report: MeetingReport) -> str:
    """Stable one-line stdout summary for scripting."""
    def vol(label: str) -> str:
        v = report.segment_metrics(label).volatility.volatility
        return fmt6(v) if v is not None else "n/a"

    return (
        f"meeting_id={report.meta.meeting_id} "
        f"duration_s={fmt6(report.duration_s)} "
        f"whole={vol(WHOLE)} first_half={vol(FIRST_HALF)} second_half={vol(SECOND_HALF)}"
    )
