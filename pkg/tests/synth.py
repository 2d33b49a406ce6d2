"""Synthetic meeting and corpus generators with known volatility targets.

The construction: a half with n turns (n odd) alternating durations
a, a*e^k, a, ... has log returns +k, -k, ..., mean 0, sample sigma
k*sqrt((n-1)/(n-2)). Choosing

    k = v / (sqrt((n-1)/(n-2)) * sqrt(n / span_minutes))
    a = span_s / ((n+1)/2 + e^k * (n-1)/2)

gives contiguous turns that exactly fill span_s with group volatility v.
Targets chosen on the 6-decimal grid survive report quantization intact.
"""

import math
from pathlib import Path

from talkmeter.meta import load_meta
from talkmeter.vtt import Utterance


def half_durations(target_vol, span_s, n_turns):
    if n_turns % 2 == 0 or n_turns < 3:
        raise ValueError("n_turns must be odd and at least 3")
    span_minutes = span_s / 60.0
    k = target_vol / (
        math.sqrt((n_turns - 1) / (n_turns - 2)) * math.sqrt(n_turns / span_minutes)
    )
    grow = math.exp(k)
    a = span_s / ((n_turns + 1) / 2 + grow * (n_turns - 1) / 2)
    return [a if i % 2 == 0 else a * grow for i in range(n_turns)]


def synthetic_utterances(
    fr_target,
    en_target,
    half_span_s=300.0,
    n_turns=9,
    speakers=("Ana", "Ben"),
):
    """One tandem meeting: a French first half and an English second
    half, each hitting its volatility target exactly. Speakers alternate
    per turn, so one utterance is one turn."""
    utterances = []
    t = 0.0
    index = 0
    for target in (fr_target, en_target):
        for i, d in enumerate(half_durations(target, half_span_s, n_turns)):
            utterances.append(
                Utterance(
                    index=index,
                    speaker_id=speakers[index % len(speakers)],
                    start_s=t,
                    end_s=t + d,
                    text=f"utterance {index}",
                )
            )
            t += d
            index += 1
        t = round(t) if abs(t - round(t)) < 1e-6 else t
    return utterances


def synthetic_meta(meeting_id, group_id, week_index, half_span_s=300.0):
    return load_meta(
        {
            "meeting_id": meeting_id,
            "group_id": group_id,
            "week_index": week_index,
            "first_half_language": "fr",
            "second_half_language": "en",
            "recorded_duration_s": 2 * half_span_s,
            "changeover_s": half_span_s,
        }
    )


def corpus_targets(n_groups=8):
    """Distinct on-grid targets per group; French above English for every
    group, so corpus-wide French mean exceeds English mean."""
    fr = [2.0 + 0.5 * i for i in range(n_groups)]
    en = [1.5 + 0.5 * i for i in range(n_groups)]
    return fr, en


def _vtt_timestamp(seconds):
    ms = round(seconds * 1000)
    h, rem = divmod(ms, 3_600_000)
    m, rem = divmod(rem, 60_000)
    s, ms = divmod(rem, 1000)
    return f"{h:02d}:{m:02d}:{s:02d}.{ms:03d}"


def utterances_to_vtt(utterances):
    """Render utterances as Zoom-style WebVTT, millisecond precision."""
    blocks = []
    for i, u in enumerate(utterances, start=1):
        blocks.append(
            f"{i}\n{_vtt_timestamp(u.start_s)} --> {_vtt_timestamp(u.end_s)}\n"
            f"{u.speaker_id}: {u.text}"
        )
    return "WEBVTT\n\n" + "\n\n".join(blocks) + "\n"


def write_corpus(directory, n_groups=8, n_weeks=5, half_span_s=300.0, n_turns=9):
    """A full manifest-driven corpus on disk: n_groups x n_weeks VTT
    files with per-group targets constant across weeks (flat series).
    Returns the manifest path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    fr, en = corpus_targets(n_groups)
    lines = [
        "path,meeting_id,group_id,week_index,first_half_language,"
        "second_half_language,recorded_duration_s,changeover_s,media_url"
    ]
    for g in range(n_groups):
        for w in range(1, n_weeks + 1):
            meeting_id = f"g{g + 1}w{w}"
            utterances = synthetic_utterances(
                fr[g], en[g], half_span_s=half_span_s, n_turns=n_turns)
            name = f"{meeting_id}.vtt"
            (directory / name).write_text(
                utterances_to_vtt(utterances), encoding="utf-8")
            lines.append(
                f"{name},{meeting_id},g{g + 1},{w},fr,en,"
                f"{2 * half_span_s:.0f},{half_span_s:.0f},"
            )
    manifest = directory / "manifest.csv"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest
