"""Corpus-level analysis: manifests, batch runs, and aggregation tables.

Aggregation reads volatility values at the canonical 6-decimal report
precision (quantize6) before any averaging, which makes aggregating
in-memory reports and reports re-parsed from disk bit-identical. All
means use exact rational arithmetic internally so results are invariant
under row order.
"""

import csv
import io
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

from .errors import BadManifest, TalkmeterError
from .meta import UNKNOWN_LANGUAGE, MeetingMeta, load_meta
from .metrics import VolatilityResult
from .report import AnalysisOptions, MeetingReport, analyze_vtt, fmt6, quantize6
from .turns import FIRST_HALF, SECOND_HALF, WHOLE

REQUIRED_COLUMNS = ("path", "meeting_id")


@dataclass(frozen=True)
class ManifestRow:
    path: Path
    meta: MeetingMeta
    line: int


@dataclass(frozen=True)
class CohortManifest:
    rows: tuple[ManifestRow, ...]

    def __len__(self) -> int:
        return len(self.rows)


def load_manifest(path: Path) -> CohortManifest:
    """Read a corpus manifest CSV from disk.

    Relative transcript paths resolve against the manifest's directory.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8-sig")
    return parse_manifest(text, base_dir=path.parent)


def parse_manifest(
    text: Union[str, bytes], base_dir: Optional[Path] = None
) -> CohortManifest:
    """Parse manifest CSV text.

    Duplicate meeting ids and duplicate (group, week) pairs are rejected:
    both would make the aggregation tables ambiguous. A manifest with a
    header and no rows is a valid empty corpus.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8-sig")
    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames
    if header is None:
        raise BadManifest("manifest is empty", 1)
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise BadManifest(
            f"manifest is missing required columns: {', '.join(missing)}", 1)

    rows: list[ManifestRow] = []
    seen_ids: dict[str, int] = {}
    seen_slots: dict[tuple[str, int], int] = {}
    for record in reader:
        line = reader.line_num
        if record.get(None):
            raise BadManifest(f"line {line}: more fields than header columns", line)
        values = {k: v for k, v in record.items() if k is not None and v is not None}
        if not any(v.strip() for v in values.values()):
            continue
        raw_path = (values.get("path") or "").strip()
        if not raw_path:
            raise BadManifest(f"line {line}: missing transcript path", line)
        try:
            meta = load_meta(values)
        except TalkmeterError as exc:
            raise BadManifest(f"line {line}: {exc.message}", line) from exc
        if meta.meeting_id in seen_ids:
            raise BadManifest(
                f"line {line}: duplicate meeting_id {meta.meeting_id!r} "
                f"(first seen on line {seen_ids[meta.meeting_id]})",
                line,
            )
        slot = (meta.group_id, meta.week_index)
        if slot in seen_slots:
            raise BadManifest(
                f"line {line}: duplicate group/week pair {slot!r} "
                f"(first seen on line {seen_slots[slot]})",
                line,
            )
        seen_ids[meta.meeting_id] = line
        seen_slots[slot] = line
        resolved = Path(raw_path)
        if base_dir is not None and not resolved.is_absolute():
            resolved = base_dir / resolved
        rows.append(ManifestRow(path=resolved, meta=meta, line=line))

    return CohortManifest(rows=tuple(rows))


@dataclass(frozen=True)
class CorpusError:
    meeting_id: str
    path: str
    code: str
    message: str


@dataclass(frozen=True)
class CorpusResult:
    reports: tuple[MeetingReport, ...]
    errors: tuple[CorpusError, ...]


def _analyze_row(row: ManifestRow, options: AnalysisOptions):
    try:
        data = Path(row.path).read_bytes()
    except FileNotFoundError:
        return CorpusError(row.meta.meeting_id, str(row.path), "NOT_FOUND",
                           f"transcript not found: {row.path}")
    except OSError as exc:
        return CorpusError(row.meta.meeting_id, str(row.path), "IO_ERROR", str(exc))
    try:
        return analyze_vtt(data, row.meta, options)
    except TalkmeterError as exc:
        return CorpusError(row.meta.meeting_id, str(row.path), exc.code, exc.message)


def analyze_corpus(
    manifest: Union[CohortManifest, Sequence[ManifestRow]],
    options: AnalysisOptions = AnalysisOptions(),
    workers: int = 1,
) -> CorpusResult:
    """Analyze every manifest row, isolating per-file failures.

    Results keep manifest order regardless of worker count, so batch
    output is invariant under the parallelism level.
    """
    rows = manifest.rows if isinstance(manifest, CohortManifest) else list(manifest)
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers == 1 or len(rows) <= 1:
        outcomes = [_analyze_row(row, options) for row in rows]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda r: _analyze_row(r, options), rows))
    reports = tuple(o for o in outcomes if isinstance(o, MeetingReport))
    errors = tuple(o for o in outcomes if isinstance(o, CorpusError))
    return CorpusResult(reports=reports, errors=errors)


def errors_csv(errors: Iterable[CorpusError]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["meeting_id", "path", "code", "message"])
    for e in errors:
        writer.writerow([e.meeting_id, e.path, e.code, e.message])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Aggregation

# One aggregation sample: a half segment tagged with a known language.
# value is the 6-decimal volatility (None when undefined), weight the
# segment's span in seconds, for the duration-weighted mean mode.


@dataclass(frozen=True)
class _Cell:
    language: str
    value: Optional[float]
    weight: float


def _half_cells(report: MeetingReport, per_participant: bool = False):
    """Yield (owner, _Cell) for each language-tagged half. The owner is
    the group for the group table or the speaker for the student table."""
    for label, language in (
        (FIRST_HALF, report.meta.first_half_language),
        (SECOND_HALF, report.meta.second_half_language),
    ):
        if language == UNKNOWN_LANGUAGE:
            continue
        sm = report.segment_metrics(label)
        seg = sm.segment
        weight = quantize6(seg.span_end_s - seg.span_start_s)
        if per_participant:
            for speaker, vol in sm.per_participant:
                value = quantize6(vol.volatility) if vol.volatility is not None else None
                yield speaker, _Cell(language, value, weight)
        else:
            vol = sm.volatility
            value = quantize6(vol.volatility) if vol.volatility is not None else None
            yield report.meta.group_id, _Cell(language, value, weight)


def _exact_mean(pairs: Sequence[tuple[float, float]], weighted: bool) -> Optional[float]:
    """Mean of (value, weight) pairs in exact rational arithmetic, so the
    result does not depend on accumulation order."""
    if not pairs:
        return None
    if not weighted:
        return float(statistics.mean(Fraction(v) for v, _ in pairs))
    total = sum((Fraction(w) for _, w in pairs), Fraction(0))
    if total == 0:
        return None
    num = sum((Fraction(v) * Fraction(w) for v, w in pairs), Fraction(0))
    return float(num / total)


@dataclass(frozen=True)
class LanguageCell:
    language: str
    mean_volatility: Optional[float]
    segment_count: int


@dataclass(frozen=True)
class GroupLanguageSummary:
    group_id: str
    cells: tuple[LanguageCell, ...]

    def cell(self, language: str) -> Optional[LanguageCell]:
        for c in self.cells:
            if c.language == language:
                return c
        return None


def _language_summaries(
    samples: Iterable[tuple[str, _Cell]],
    owners: set[str],
    ordering_language: Optional[str],
    weighted: bool,
) -> list[GroupLanguageSummary]:
    buckets: dict[tuple[str, str], list[tuple[float, float]]] = {}
    owners = set(owners)
    for owner, cell in samples:
        owners.add(owner)
        key = (owner, cell.language)
        buckets.setdefault(key, [])
        if cell.value is not None:
            buckets[key].append((cell.value, cell.weight))

    summaries = []
    for owner in sorted(owners):
        cells = tuple(
            LanguageCell(
                language=language,
                mean_volatility=_exact_mean(buckets[(o, language)], weighted),
                segment_count=len(buckets[(o, language)]),
            )
            for (o, language) in sorted(buckets)
            if o == owner
        )
        summaries.append(GroupLanguageSummary(group_id=owner, cells=cells))

    def order_key(s: GroupLanguageSummary):
        cell = s.cell(ordering_language) if ordering_language else None
        mean = cell.mean_volatility if cell else None
        return (mean is None, mean if mean is not None else 0.0, s.group_id)

    summaries.sort(key=order_key)
    return summaries


def group_language_averages(
    reports: Sequence[MeetingReport],
    ordering_language: Optional[str] = None,
    weighted: bool = False,
) -> list[GroupLanguageSummary]:
    """Mean group volatility per (group, language) over language-tagged
    halves. Undefined values are skipped but still counted into the cell
    as zero contributions, so a zero-count cell is distinguishable from a
    cell whose mean is 0. Groups are ordered ascending by the ordering
    language's mean; groups without a defined value for it sort last,
    ties by group_id. Groups whose halves are all untagged still appear,
    with no cells."""
    samples = (
        pair for report in reports for pair in _half_cells(report)
    )
    owners = {report.meta.group_id for report in reports}
    return _language_summaries(samples, owners, ordering_language, weighted)


def student_language_averages(
    reports: Sequence[MeetingReport],
    ordering_language: Optional[str] = None,
    weighted: bool = False,
) -> list[GroupLanguageSummary]:
    """Same table shape as group_language_averages but one summary per
    participant, built from the per-participant half volatilities."""
    samples = (
        pair for report in reports for pair in _half_cells(report, per_participant=True)
    )
    owners = {s for report in reports for s in report.metrics.speaker_order}
    return _language_summaries(samples, owners, ordering_language, weighted)


def language_means(
    reports: Sequence[MeetingReport], weighted: bool = False
) -> dict[str, Optional[float]]:
    """Corpus-wide mean of group volatility per language, one sample per
    language-tagged half with a defined value."""
    buckets: dict[str, list[tuple[float, float]]] = {}
    for report in reports:
        for _, cell in _half_cells(report):
            buckets.setdefault(cell.language, [])
            if cell.value is not None:
                buckets[cell.language].append((cell.value, cell.weight))
    return {lang: _exact_mean(buckets[lang], weighted) for lang in sorted(buckets)}


def ols_slope(points: Sequence[tuple[float, float]]) -> Optional[float]:
    """Least-squares slope of y on x. None for fewer than two distinct x."""
    if len(points) < 2:
        return None
    xs = [Fraction(float(x)) for x, _ in points]
    ys = [Fraction(float(y)) for _, y in points]
    x_bar = sum(xs, Fraction(0)) / len(xs)
    y_bar = sum(ys, Fraction(0)) / len(ys)
    sxx = sum(((x - x_bar) ** 2 for x in xs), Fraction(0))
    if sxx == 0:
        return None
    sxy = sum(((x - x_bar) * (y - y_bar) for x, y in zip(xs, ys)), Fraction(0))
    return float(sxy / sxx)


@dataclass(frozen=True)
class WeekRow:
    kind: str  # "group", "mean" or "slope"
    group_id: str
    week_index: Optional[int]
    volatility: Optional[float]
    n_groups: Optional[int]


def _week_value(report: MeetingReport, language: Optional[str]) -> Optional[float]:
    """The volatility a meeting contributes to the week series: the
    requested language's half, or the whole meeting when no language is
    requested."""
    if language is None:
        vol = report.segment_metrics(WHOLE).volatility.volatility
        return quantize6(vol) if vol is not None else None
    for label, tag in (
        (FIRST_HALF, report.meta.first_half_language),
        (SECOND_HALF, report.meta.second_half_language),
    ):
        if tag == language:
            vol = report.segment_metrics(label).volatility.volatility
            return quantize6(vol) if vol is not None else None
    return None


def week_progression(
    reports: Sequence[MeetingReport], language: Optional[str] = None
) -> list[WeekRow]:
    """Per-group volatility by week, weekly cross-group means over the
    groups with a defined value, and the least-squares slope of the mean
    over week_index."""
    per_group: dict[tuple[str, int], Optional[float]] = {}
    for report in reports:
        key = (report.meta.group_id, report.meta.week_index)
        per_group[key] = _week_value(report, language)

    rows = [
        WeekRow(kind="group", group_id=group, week_index=week,
                volatility=value, n_groups=None)
        for (group, week), value in sorted(per_group.items())
    ]

    weeks: dict[int, list[float]] = {}
    for (_, week), value in per_group.items():
        weeks.setdefault(week, [])
        if value is not None:
            weeks[week].append(value)
    mean_points: list[tuple[float, float]] = []
    for week in sorted(weeks):
        values = weeks[week]
        mean = _exact_mean([(v, 1.0) for v in values], weighted=False)
        rows.append(
            WeekRow(kind="mean", group_id="", week_index=week,
                    volatility=mean, n_groups=len(values))
        )
        if mean is not None:
            mean_points.append((float(week), mean))

    rows.append(
        WeekRow(kind="slope", group_id="", week_index=None,
                volatility=ols_slope(mean_points), n_groups=len(mean_points))
    )
    return rows


def week_slope(rows: Sequence[WeekRow]) -> Optional[float]:
    for r in rows:
        if r.kind == "slope":
            return r.volatility
    return None


@dataclass(frozen=True)
class StatRow:
    stat: str
    value: str


def corpus_stats(reports: Sequence[MeetingReport]) -> list[StatRow]:
    """Headline descriptive statistics for a corpus of reports."""
    rows = [StatRow("meetings", str(len(reports)))]
    durations = [quantize6(r.duration_s) for r in reports]
    if durations:
        rows.append(StatRow("mean_duration_s",
                            fmt6(float(statistics.mean(map(Fraction, durations))))))
    if len(durations) >= 2:
        rows.append(StatRow("stdev_duration_s", fmt6(statistics.stdev(durations))))

    started: dict[str, int] = {}
    for r in reports:
        lang = r.meta.first_half_language
        if lang == UNKNOWN_LANGUAGE:
            continue
        started[lang] = started.get(lang, 0) + 1
    for lang in sorted(started):
        rows.append(StatRow(f"started_{lang}", str(started[lang])))

    for lang, mean in language_means(reports).items():
        rows.append(StatRow(f"mean_volatility_{lang}",
                            fmt6(mean) if mean is not None else ""))

    # Within-meeting comparison: which half's language carried the higher
    # group volatility. Only meetings where both halves are tagged with
    # different languages and both values are defined can vote.
    higher: dict[str, int] = {}
    comparable = 0
    for r in reports:
        cells = [cell for _, cell in _half_cells(r)]
        if len(cells) != 2 or cells[0].language == cells[1].language:
            continue
        if cells[0].value is None or cells[1].value is None:
            continue
        comparable += 1
        if cells[0].value > cells[1].value:
            higher[cells[0].language] = higher.get(cells[0].language, 0) + 1
        elif cells[1].value > cells[0].value:
            higher[cells[1].language] = higher.get(cells[1].language, 0) + 1
    rows.append(StatRow("comparable_meetings", str(comparable)))
    for lang in sorted(higher):
        rows.append(StatRow(f"higher_volatility_{lang}", str(higher[lang])))
    return rows


# ---------------------------------------------------------------------------
# CSV emission


def _table_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _optf(x: Optional[float]) -> str:
    return fmt6(x) if x is not None else ""


def _summaries_csv(summaries: Sequence[GroupLanguageSummary], id_column: str) -> str:
    rows: list[list[Any]] = []
    for s in summaries:
        if not s.cells:
            rows.append([s.group_id, "", "", 0])
            continue
        for c in s.cells:
            rows.append([s.group_id, c.language, _optf(c.mean_volatility),
                         c.segment_count])
    return _table_csv([id_column, "language", "mean_volatility", "segment_count"], rows)


def group_language_csv(summaries: Sequence[GroupLanguageSummary]) -> str:
    return _summaries_csv(summaries, "group_id")


def student_language_csv(summaries: Sequence[GroupLanguageSummary]) -> str:
    return _summaries_csv(summaries, "speaker")


def week_csv(rows: Sequence[WeekRow]) -> str:
    return _table_csv(
        ["kind", "group_id", "week_index", "volatility", "n_groups"],
        [
            [
                r.kind,
                r.group_id,
                r.week_index if r.week_index is not None else "",
                _optf(r.volatility),
                r.n_groups if r.n_groups is not None else "",
            ]
            for r in rows
        ],
    )


def stats_csv(rows: Sequence[StatRow]) -> str:
    return _table_csv(["stat", "value"], [[r.stat, r.value] for r in rows])
