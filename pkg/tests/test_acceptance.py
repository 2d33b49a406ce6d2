"""Acceptance gate for the analytics pipeline.

Each test covers one numbered acceptance criterion and prints exactly one
PASS or FAIL line (visible even under pytest's output capture), so a full
run doubles as a checklist. Tolerances are pinned in the assertions.
"""

import math
import random
import time
from pathlib import Path

import pytest

from talkmeter.cli import main
from talkmeter.cohort import (
    group_language_averages,
    group_language_csv,
    load_manifest,
    stats_csv,
    student_language_csv,
    corpus_stats,
    student_language_averages,
    week_csv,
    week_progression,
    week_slope,
)
from talkmeter.errors import TalkmeterError
from talkmeter.meta import load_meta
from talkmeter.metrics import VolatilityConfig, transitions, volatility_from_durations
from talkmeter.report import (
    AnalysisOptions,
    analyze_utterances,
    analyze_vtt,
    read_report,
    report_to_json,
)
from talkmeter.turns import build_turns, whole_segment
from talkmeter.vtt import ParseDiagnostics, Utterance, parse_vtt

from golden_vtt import CASES
from oracle import oracle_volatility, random_series
from synth import (
    corpus_targets,
    synthetic_meta,
    synthetic_utterances,
    utterances_to_vtt,
    write_corpus,
)

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures" / "vtt"


class _Gate:
    """Prints the one-line verdict for a criterion, pass or fail."""

    def __init__(self, capsys, number, label):
        self.capsys = capsys
        self.number = number
        self.label = label
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        note = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        with self.capsys.disabled():
            print(f"[acceptance] criterion {self.number} {status} - "
                  f"{self.label}" + (f" ({note})" if note else ""))
        return False


def _utts(items):
    return [Utterance(index=i, speaker_id=s, start_s=a, end_s=b, text="x")
            for i, (s, a, b) in enumerate(items)]


def _analyze(utterances, meta, options=AnalysisOptions()):
    diag = ParseDiagnostics(warnings=[], dropped_cue_count=0,
                            source_byte_count=0)
    return analyze_utterances(list(utterances), diag, meta, options)


def test_criterion_1_oracle_equivalence(capsys):
    with _Gate(capsys, 1, "volatility oracle equivalence") as gate:
        rng = random.Random(424242)
        cases = [random_series(rng) for _ in range(100)]
        started = time.perf_counter()
        for durations, span_minutes in cases:
            got = volatility_from_durations(durations, span_minutes,
                                            VolatilityConfig())
            want = oracle_volatility(durations, span_minutes)
            assert got.defined
            assert abs(got.volatility - want) <= 1e-9 * abs(want)
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"runtime {elapsed:.3f}s exceeds 1 s"
        gate.detail = f"100 series, {elapsed * 1000:.0f} ms"


def test_criterion_2_analytic_cases(capsys):
    with _Gate(capsys, 2, "analytic volatility cases") as gate:
        config = VolatilityConfig()

        constant = volatility_from_durations([7.5] * 8, 2.0, config)
        assert constant.volatility == 0.0

        geometric = volatility_from_durations([3.0, 6.0, 12.0, 24.0], 1.0,
                                              config)
        assert geometric.volatility == 0.0

        flagship = volatility_from_durations([5.0, 20.0, 5.0], 0.5, config)
        assert abs(flagship.raw_sigma - 1.960516) <= 1e-6
        assert abs(flagship.rate_scale - 2.449490) <= 1e-6
        assert abs(flagship.volatility - 1.960516 * 2.449490) <= 1e-6
        assert flagship.volatility == pytest.approx(2 * math.sqrt(3) * math.log(4),
                                                    rel=1e-12)

        for durations in ([], [4.0], [4.0, 9.0]):
            short = volatility_from_durations(durations, 1.0, config)
            assert short.defined is False
            assert short.volatility is None
            assert short.volatility != 0
        gate.detail = "constant/geometric exact 0, flagship 4.802265"


def test_criterion_3_invariance_suite(capsys):
    with _Gate(capsys, 3, "translation/dilation/transition invariances") as gate:
        rng = random.Random(31337)

        def random_meeting(grid=None):
            items, t = [], rng.uniform(0, 20)
            for _ in range(rng.randint(6, 30)):
                d = rng.uniform(0.5, 20.0)
                if grid:
                    t = round(t * grid) / grid
                    d = max(round(d * grid) / grid, 1.0 / grid)
                items.append((rng.choice("ABC"), t, t + d))
                t += d
            return _utts(items)

        def metrics_for(utterances, changeover):
            meta = load_meta({
                "meeting_id": "m", "changeover_s": changeover,
                "recorded_duration_s": utterances[-1].end_s + 1.0,
                "first_half_language": "fr", "second_half_language": "en"})
            return _analyze(utterances, meta).metrics

        # translation on an exact binary grid: every metric bit-identical
        for _ in range(30):
            base = random_meeting(grid=1024)
            delta = 4096.0
            moved = [Utterance(u.index, u.speaker_id, u.start_s + delta,
                               u.end_s + delta, u.text) for u in base]
            split = (base[0].start_s + base[-1].end_s) / 2
            m0, m1 = metrics_for(base, split), metrics_for(moved, split + delta)
            for s0, s1 in zip(m0.segments, m1.segments):
                assert s1.volatility == s0.volatility
                assert s1.transitions == s0.transitions
                assert s1.per_participant == s0.per_participant
                assert [(r.speaker_id, r.speaking_time_s, r.participation_pct,
                         r.turn_count) for r in s0.participation.rows] == \
                       [(r.speaker_id, r.speaking_time_s, r.participation_pct,
                         r.turn_count) for r in s1.participation.rows]

        # dilation by c: raw sigma fixed, per-minute volatility scales 1/sqrt(c)
        for _ in range(30):
            base = random_meeting()
            c = rng.choice([0.5, 2.0, 3.0, 4.0, 9.0])
            dilated = [Utterance(u.index, u.speaker_id, u.start_s * c,
                                 u.end_s * c, u.text) for u in base]
            split = (base[0].start_s + base[-1].end_s) / 2
            m0, m1 = metrics_for(base, split), metrics_for(dilated, split * c)
            for s0, s1 in zip(m0.segments, m1.segments):
                v0, v1 = s0.volatility, s1.volatility
                assert v1.defined == v0.defined
                if not v0.defined:
                    continue
                assert abs(v1.raw_sigma - v0.raw_sigma) <= 1e-9
                want = v0.volatility / math.sqrt(c)
                assert abs(v1.volatility - want) <= 1e-9 * max(abs(want), 1.0)

        # transition totals across 100 random turn sequences
        for _ in range(100):
            items, t = [], 0.0
            for _ in range(rng.randint(1, 50)):
                d = rng.uniform(0.4, 6.0)
                items.append((rng.choice("ABCD"), t, t + d))
                t += d
            turns = build_turns(_utts(items))
            matrix = transitions(whole_segment(turns))
            assert matrix.total == max(0, len(turns) - 1)
            for i in range(len(matrix.speakers)):
                assert matrix.counts[i][i] == 0
        gate.detail = "30 translations, 30 dilations, 100 transition checks"


def test_criterion_4_parser_goldens_and_fuzz(capsys):
    with _Gate(capsys, 4, "parser golden suite and fuzzing") as gate:
        assert len(CASES) >= 12
        for case in CASES:
            data = case.path.read_bytes()
            if case.error is not None:
                with pytest.raises(TalkmeterError) as err:
                    parse_vtt(data)
                assert getattr(err.value, "code", None) == case.error
                continue
            utterances, diag = parse_vtt(data)
            got = [(u.speaker_id, u.start_s, u.end_s, u.text)
                   for u in utterances]
            assert got == case.utterances, case.name
            assert [u.index for u in utterances] == list(range(len(got)))
            assert diag.dropped_cue_count == case.dropped
            assert [(w.line, w.code) for w in diag.warnings] == case.warnings

        rng = random.Random(777)
        seed_doc = (FIXTURE_DIR / "simple.vtt").read_bytes()
        crashes = 0
        for i in range(10_000):
            style = i % 4
            if style == 0:
                data = rng.randbytes(rng.randint(0, 300))
            elif style == 1:
                data = b"WEBVTT\n\n" + rng.randbytes(rng.randint(0, 300))
            elif style == 2:
                blob = bytearray(seed_doc)
                for _ in range(rng.randint(1, 12)):
                    blob[rng.randrange(len(blob))] = rng.randrange(256)
                data = bytes(blob)
            else:
                lines = [rng.choice([
                    b"WEBVTT", b"", b"00:00:01.000 --> 00:00:02.000",
                    b"99:99:99.999 --> xx", b"Bob: hi", b"-->",
                    b"\xff\xfe\x00", b"NOTE x", b"12:34", b"hello world",
                ]) for _ in range(rng.randint(0, 14))]
                data = b"\n".join(lines)
            try:
                parse_vtt(data)
            except TalkmeterError:
                pass
            except Exception:
                crashes += 1
        assert crashes == 0
        gate.detail = f"{len(CASES)} fixtures exact, 10000 fuzz inputs, 0 crashes"


def test_criterion_5_half_split(capsys):
    with _Gate(capsys, 5, "half-split semantics") as gate:
        # recorded duration 40 puts the midpoint split at 20; the 15-25
        # turn is exactly bisected and must land in the first half
        utterances = _utts([("A", 0, 10), ("B", 10, 15), ("A", 15, 25),
                            ("B", 25, 30), ("A", 30, 40)])
        meta = load_meta({"meeting_id": "m", "recorded_duration_s": 40.0})
        mm = _analyze(utterances, meta).metrics
        assert mm.split_s == 20.0
        bisected = [t for t in mm.whole.segment.turns
                    if t.start_s == 15.0 and t.end_s == 25.0][0]
        assert bisected in mm.first_half.segment.turns
        assert bisected not in mm.second_half.segment.turns

        # an annotated changeover supersedes the midpoint
        meta2 = load_meta({"meeting_id": "m", "recorded_duration_s": 40.0,
                           "changeover_s": 15.0})
        mm2 = _analyze(utterances, meta2).metrics
        assert mm2.split_s == 15.0
        moved = [t for t in mm2.whole.segment.turns
                 if t.start_s == 15.0 and t.end_s == 25.0][0]
        assert moved in mm2.second_half.segment.turns

        # concatenating the halves restores the original turn order
        for mm_i in (mm, mm2):
            concat = list(mm_i.first_half.segment.turns) + \
                list(mm_i.second_half.segment.turns)
            assert concat == list(mm_i.whole.segment.turns)
        gate.detail = "bisected turn FIRST_HALF, changeover override, order kept"


def test_criterion_6_cohort_desk_study(capsys, tmp_path):
    with _Gate(capsys, 6, "cohort desk-scale study") as gate:
        started = time.perf_counter()
        n_groups, n_weeks = 8, 5
        fr_targets, en_targets = corpus_targets(n_groups)

        reports = []
        for g in range(n_groups):
            for w in range(1, n_weeks + 1):
                utterances = synthetic_utterances(fr_targets[g], en_targets[g])
                meta = synthetic_meta(f"g{g}-w{w}", f"g{g:02d}", w)
                reports.append(_analyze(utterances, meta))

        # target recovery within 1e-9
        summaries = group_language_averages(reports, ordering_language="fr")
        by_group = {s.group_id: s for s in summaries}
        for g in range(n_groups):
            summary = by_group[f"g{g:02d}"]
            fr_cell, en_cell = summary.cell("fr"), summary.cell("en")
            assert fr_cell.segment_count == n_weeks
            assert abs(fr_cell.mean_volatility - fr_targets[g]) <= 1e-9
            assert abs(en_cell.mean_volatility - en_targets[g]) <= 1e-9

        # ordering by the fr mean ascends with the construction targets
        assert [s.group_id for s in summaries] == [
            f"g{g:02d}" for g in range(n_groups)]
        # and fr sits above en within every group, as constructed
        assert all(by_group[f"g{g:02d}"].cell("fr").mean_volatility >
                   by_group[f"g{g:02d}"].cell("en").mean_volatility
                   for g in range(n_groups))

        # the corpus is flat across weeks, so the trend slope is zero
        rows = week_progression(reports, language="fr")
        slope = week_slope(rows)
        assert slope is not None and abs(slope) <= 1e-9

        # batch runs with 1 and 4 workers emit byte-identical files
        corpus_dir = tmp_path / "corpus"
        corpus_dir.mkdir()
        manifest = write_corpus(corpus_dir, n_groups=n_groups, n_weeks=n_weeks)
        out1, out4 = tmp_path / "out1", tmp_path / "out4"
        assert main(["batch", str(manifest), "--out-dir", str(out1),
                     "--workers", "1"]) == 0
        assert main(["batch", str(manifest), "--out-dir", str(out4),
                     "--workers", "4"]) == 0
        names1 = sorted(p.name for p in out1.iterdir())
        names4 = sorted(p.name for p in out4.iterdir())
        assert names1 == names4 and len(names1) == n_groups * n_weeks + 1
        for name in names1:
            assert (out1 / name).read_bytes() == (out4 / name).read_bytes()

        elapsed = time.perf_counter() - started
        assert elapsed < 10.0, f"runtime {elapsed:.3f}s exceeds 10 s"
        gate.detail = (f"{n_groups * n_weeks} meetings, slope {slope:.1e}, "
                       f"{elapsed:.2f}s")


def test_criterion_7_round_trips(capsys, tmp_path):
    with _Gate(capsys, 7, "round trips and byte stability") as gate:
        fr_targets, en_targets = corpus_targets(4)
        in_process = []
        disk_dir = tmp_path / "reports"
        for g in range(4):
            utterances = synthetic_utterances(fr_targets[g], en_targets[g])
            meta = synthetic_meta(f"g{g}-w1", f"g{g:02d}", 1)

            vtt_path = tmp_path / f"g{g}.vtt"
            vtt_path.write_text(utterances_to_vtt(utterances), encoding="utf-8")
            in_process.append(analyze_vtt(vtt_path.read_bytes(), meta))
            meta_path = tmp_path / f"g{g}.json"
            meta_path.write_text(
                '{"meeting_id": "%s", "group_id": "g%02d", "week_index": 1, '
                '"first_half_language": "fr", "second_half_language": "en", '
                '"recorded_duration_s": 600.0, "changeover_s": 300.0}'
                % (f"g{g}-w1", g), encoding="utf-8")
            assert main(["analyze", str(vtt_path), "--meta", str(meta_path),
                         "--out", str(disk_dir / f"g{g}-w1.json")]) == 0

        reread = [read_report(p) for p in sorted(disk_dir.glob("*.json"))]

        tables_in = {
            "group": group_language_csv(group_language_averages(in_process, "fr")),
            "student": student_language_csv(student_language_averages(in_process)),
            "week": week_csv(week_progression(in_process, "fr")),
            "stats": stats_csv(corpus_stats(in_process)),
        }
        tables_disk = {
            "group": group_language_csv(group_language_averages(reread, "fr")),
            "student": student_language_csv(student_language_averages(reread)),
            "week": week_csv(week_progression(reread, "fr")),
            "stats": stats_csv(corpus_stats(reread)),
        }
        assert tables_disk == tables_in

        # byte stability: a fresh parse and analysis of the same input
        # serializes to the identical document, and re-serializing a
        # report read from disk reproduces the file exactly
        sample_vtt = (tmp_path / "g0.vtt").read_bytes()
        sample_meta = load_meta({
            "meeting_id": "g0-w1", "group_id": "g00", "week_index": 1,
            "first_half_language": "fr", "second_half_language": "en",
            "recorded_duration_s": 600.0, "changeover_s": 300.0})
        once = report_to_json(analyze_vtt(sample_vtt, sample_meta))
        twice = report_to_json(analyze_vtt(sample_vtt, sample_meta))
        assert once == twice
        on_disk = (disk_dir / "g0-w1.json").read_text(encoding="utf-8")
        assert once == on_disk
        assert report_to_json(read_report(disk_dir / "g0-w1.json")) == on_disk
        gate.detail = "4 tables identical from disk, serialization byte-stable"
