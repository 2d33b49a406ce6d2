"""Command line interface.

Exit codes: 0 success, 1 data or input errors (reported on stderr as
"CODE=message"), 2 usage and configuration errors. The command surface
is a thin client over the library; everything here is also reachable
through the HTTP service.
"""

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from ._version import __version__
from .cohort import (
    analyze_corpus,
    errors_csv,
    group_language_csv,
    group_language_averages,
    load_manifest,
    stats_csv,
    corpus_stats,
    student_language_csv,
    student_language_averages,
    week_csv,
    week_progression,
    week_slope,
)
from .errors import NotFound, TalkmeterError
from .meta import load_meta
from .metrics import (
    DURATION_SPAN,
    DURATION_SUMMED,
    RATE_NONE,
    RATE_PER_MINUTE,
    SERIES_TURNS,
    SERIES_UTTERANCES,
    VolatilityConfig,
)
from .htmlpage import render_html
from .report import (
    AnalysisOptions,
    MeetingReport,
    analyze_vtt,
    read_report,
    report_to_json,
    summary_line,
    write_meeting_csvs,
    write_report,
)

RATE_FLAGS = {"per-minute": RATE_PER_MINUTE, "none": RATE_NONE}

# Each analysis flag falls back to an environment variable, which falls
# back to the built-in default. Explicit flags always win.
ENV_PREFIX = "TALKMETER_"


class UsageError(Exception):
    pass


def _config_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group(
        "analysis configuration",
        "defaults can be set via TALKMETER_DURATION_MODE, TALKMETER_SERIES_UNIT, "
        "TALKMETER_RATE_SCALE, TALKMETER_MIN_TURNS, TALKMETER_GAP_BREAK and "
        "TALKMETER_EXCLUDE_UNKNOWN_SPEAKER; explicit flags win",
    )
    g.add_argument("--duration-mode", choices=[DURATION_SPAN, DURATION_SUMMED],
                   default=None,
                   help="turn duration definition (default: span)")
    g.add_argument("--series-unit", choices=[SERIES_TURNS, SERIES_UTTERANCES],
                   default=None,
                   help="duration series the volatility is computed over "
                        "(default: turns)")
    g.add_argument("--rate-scale", choices=sorted(RATE_FLAGS), default=None,
                   help="rate normalization of the log-return sigma "
                        "(default: per-minute)")
    g.add_argument("--min-turns", type=int, default=None, metavar="N",
                   help="minimum series length for a defined volatility "
                        "(default: 3)")
    g.add_argument("--gap-break", type=float, default=None, metavar="SECONDS",
                   help="break a turn when a same-speaker silence exceeds this "
                        "(default: off)")
    g.add_argument("--exclude-unknown-speaker",
                   action=argparse.BooleanOptionalAction, default=None,
                   help="drop utterances without a speaker attribution "
                        "(default: keep them)")
    return p


def _env(name: str) -> Optional[str]:
    value = os.environ.get(ENV_PREFIX + name)
    if value is None or value.strip() == "":
        return None
    return value.strip()


def _pick(flag_value, env_name: str, default, convert):
    if flag_value is not None:
        return flag_value
    raw = _env(env_name)
    if raw is None:
        return default
    try:
        return convert(raw)
    except (ValueError, KeyError) as exc:
        raise UsageError(
            f"bad value for {ENV_PREFIX}{env_name}: {raw!r}") from exc


def _as_bool(raw: str) -> bool:
    lowered = raw.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(raw)


def _options_from_args(args: argparse.Namespace) -> AnalysisOptions:
    rate_flag = args.rate_scale
    try:
        config = VolatilityConfig(
            duration_mode=_pick(args.duration_mode, "DURATION_MODE",
                                DURATION_SPAN, str),
            series_unit=_pick(args.series_unit, "SERIES_UNIT",
                              SERIES_TURNS, str),
            rate_scale_mode=_pick(
                RATE_FLAGS[rate_flag] if rate_flag is not None else None,
                "RATE_SCALE", RATE_PER_MINUTE,
                lambda raw: RATE_FLAGS[raw]),
            min_points=_pick(args.min_turns, "MIN_TURNS", 3, int),
        )
        gap_break = _pick(args.gap_break, "GAP_BREAK", None, float)
        if gap_break is not None and gap_break <= 0:
            raise ValueError("--gap-break must be positive")
        exclude = _pick(args.exclude_unknown_speaker,
                        "EXCLUDE_UNKNOWN_SPEAKER", False, _as_bool)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return AnalysisOptions(
        volatility=config,
        gap_break_s=gap_break,
        exclude_unknown_speaker=exclude,
    )


def _meta_from_args(args: argparse.Namespace, transcript: Path):
    record = {}
    if args.meta is not None:
        meta_path = Path(args.meta)
        if not meta_path.is_file():
            raise NotFound(f"meta file not found: {meta_path}")
        record.update(json.loads(meta_path.read_text(encoding="utf-8")))
    overrides = {
        "meeting_id": args.meeting_id,
        "group_id": args.group_id,
        "week_index": args.week_index,
        "participants": args.participants,
        "first_half_language": args.first_language,
        "second_half_language": args.second_language,
        "recorded_duration_s": args.recorded_duration,
        "changeover_s": args.changeover,
        "media_url": args.media_url,
    }
    record.update({k: v for k, v in overrides.items() if v is not None})
    if not str(record.get("meeting_id") or "").strip():
        record["meeting_id"] = transcript.stem
    return load_meta(record)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="talkmeter",
        description="Conversational volatility analytics for speaker-attributed "
                    "WebVTT transcripts.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    config = _config_parent()

    p_an = sub.add_parser("analyze", parents=[config],
                          help="analyze one transcript")
    p_an.add_argument("transcript", type=Path, help="WebVTT transcript file")
    p_an.add_argument("--meta", type=Path, default=None,
                      help="JSON file with meeting metadata")
    p_an.add_argument("--meeting-id", default=None)
    p_an.add_argument("--group-id", default=None)
    p_an.add_argument("--week-index", type=int, default=None)
    p_an.add_argument("--participants", default=None,
                      help="expected speaker roster, | separated")
    p_an.add_argument("--first-language", default=None)
    p_an.add_argument("--second-language", default=None)
    p_an.add_argument("--recorded-duration", type=float, default=None,
                      metavar="SECONDS")
    p_an.add_argument("--changeover", type=float, default=None, metavar="SECONDS",
                      help="annotated language changeover time")
    p_an.add_argument("--media-url", default=None)
    p_an.add_argument("--out", type=Path, default=None,
                      help="write the report JSON here ('-' for stdout)")
    p_an.add_argument("--html", type=Path, default=None,
                      help="write a standalone review page here")
    p_an.add_argument("--csv-dir", type=Path, default=None,
                      help="write per-meeting CSV tables into this directory")

    p_ba = sub.add_parser("batch", parents=[config],
                          help="analyze a corpus manifest")
    p_ba.add_argument("manifest", type=Path, help="corpus manifest CSV")
    p_ba.add_argument("--out-dir", type=Path, required=True,
                      help="directory for per-meeting report JSON files")
    p_ba.add_argument("--workers", type=int, default=1,
                      help="parallel analysis workers (default 1)")
    p_ba.add_argument("--html", action="store_true",
                      help="also write a review page per meeting")
    p_ba.add_argument("--csv", action="store_true",
                      help="also write per-meeting CSV tables")

    p_ag = sub.add_parser("aggregate", help="aggregate report JSON files")
    p_ag.add_argument("inputs", nargs="+", type=Path,
                      help="report files or directories containing them")
    p_ag.add_argument("--by", required=True,
                      choices=["group-language", "student-language", "week", "stats"],
                      help="aggregation table to produce")
    p_ag.add_argument("--language", default=None, metavar="TAG",
                      help="for language tables: the ordering language "
                           "(ascending by its mean); for week: the half "
                           "language feeding the series (default: whole meeting)")
    p_ag.add_argument("--duration-weighted", action="store_true",
                      help="weight language means by segment span seconds")
    p_ag.add_argument("--out", type=Path, default=None,
                      help="write the CSV here instead of stdout")

    p_srv = sub.add_parser("serve", help="run the HTTP analysis service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_analyze(args: argparse.Namespace) -> int:
    options = _options_from_args(args)
    transcript = Path(args.transcript)
    if not transcript.is_file():
        raise NotFound(f"transcript not found: {transcript}")
    meta = _meta_from_args(args, transcript)
    report = analyze_vtt(transcript.read_bytes(), meta, options)

    if args.out is not None:
        if str(args.out) == "-":
            sys.stdout.write(report_to_json(report))
        else:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            write_report(report, args.out)
    if args.html is not None:
        args.html.parent.mkdir(parents=True, exist_ok=True)
        args.html.write_text(render_html(report), encoding="utf-8")
    if args.csv_dir is not None:
        write_meeting_csvs(report, args.csv_dir)
    if args.out is None or str(args.out) != "-":
        print(summary_line(report))
    for w in report.diagnostics.warnings:
        print(f"warning line {w.line}: {w.code}: {w.message}", file=sys.stderr)
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    options = _options_from_args(args)
    manifest_path = Path(args.manifest)
    if not manifest_path.is_file():
        raise NotFound(f"manifest not found: {manifest_path}")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    rows = load_manifest(manifest_path)
    result = analyze_corpus(rows, options, workers=args.workers)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for report in result.reports:
        write_report(report, out_dir / f"{report.meta.meeting_id}.json")
        if args.html:
            page = render_html(report)
            (out_dir / f"{report.meta.meeting_id}.html").write_text(
                page, encoding="utf-8")
        if args.csv:
            write_meeting_csvs(report, out_dir / report.meta.meeting_id)
        print(summary_line(report))
    (out_dir / "errors.csv").write_text(errors_csv(result.errors), encoding="utf-8")
    for e in result.errors:
        print(f"{e.code}={e.message} (meeting_id={e.meeting_id})", file=sys.stderr)
    print(f"reports={len(result.reports)} errors={len(result.errors)}")
    return 0 if result.reports else 1


def _collect_reports(inputs: list[Path]) -> list[MeetingReport]:
    paths: list[Path] = []
    for item in inputs:
        if item.is_dir():
            paths.extend(sorted(p for p in item.glob("*.json")))
        elif item.is_file():
            paths.append(item)
        else:
            raise NotFound(f"report path not found: {item}")
    if not paths:
        raise NotFound("no report files found")
    reports = []
    for p in paths:
        try:
            reports.append(read_report(p))
        except (ValueError, KeyError) as exc:
            raise TalkmeterError(f"unreadable report {p}: {exc}") from exc
    return reports


def _cmd_aggregate(args: argparse.Namespace) -> int:
    reports = _collect_reports(list(args.inputs))
    slope_note: Optional[str] = None
    if args.by == "group-language":
        text = group_language_csv(group_language_averages(
            reports, args.language, weighted=args.duration_weighted))
    elif args.by == "student-language":
        text = student_language_csv(student_language_averages(
            reports, args.language, weighted=args.duration_weighted))
    elif args.by == "week":
        rows = week_progression(reports, args.language)
        text = week_csv(rows)
        slope = week_slope(rows)
        slope_note = f"slope={slope:.6f}" if slope is not None else "slope=n/a"
    else:
        text = stats_csv(corpus_stats(reports))

    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
        if slope_note:
            print(slope_note)
    else:
        sys.stdout.write(text)
        # Keep machine-readable CSV on stdout intact; the human-facing
        # slope line goes to stderr (it is also a CSV row).
        if slope_note:
            print(slope_note, file=sys.stderr)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "batch": _cmd_batch,
        "aggregate": _cmd_aggregate,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"BAD_CONFIG={exc}", file=sys.stderr)
        return 2
    except TalkmeterError as exc:
        print(f"{exc.code}={exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IO_ERROR={exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
