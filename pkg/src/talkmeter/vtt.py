"""Parser for Zoom-style speaker-attributed WebVTT transcripts.

Zoom's transcript export is plain WebVTT with the speaker name embedded in
the cue payload::

    WEBVTT

    1
    00:00:03.600 --> 00:00:07.200
    Alice Martin: Bonjour tout le monde

    2
    00:00:07.500 --> 00:00:09.100
    Bob: Salut

Parsing is lenient at the cue level: malformed cues are skipped with a
DROPPED_CUE diagnostic instead of aborting the file. Only a missing WEBVTT
header (or a non-UTF-8 encoding) rejects the whole input.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import BadTimestamp, EmptyTranscript, NotVtt

UNKNOWN_SPEAKER = "unknown"
MAX_SPEAKER_CHARS = 64

_UTF8_BOM = b"\xef\xbb\xbf"
_UTF16_BOMS = (b"\xff\xfe", b"\xfe\xff")

# HH:MM:SS.mmm (2+ hour digits, capped to keep values finite) or MM:SS.mmm.
_TIMESTAMP_RE = re.compile(r"^(?:(\d{2,6}):)?([0-5]\d):([0-5]\d)\.(\d{3})$")

# Warning codes used in ParseDiagnostics.
DROPPED_CUE = "DROPPED_CUE"
SPEAKER_SUSPECT = "SPEAKER_SUSPECT"
ENCODING_REPLACEMENT = "ENCODING_REPLACEMENT"


class ParseWarning(NamedTuple):
    line: int
    code: str
    message: str


@dataclass(frozen=True)
class Utterance:
    """One parsed caption cue, attributed to a speaker."""

    index: int
    speaker_id: str
    start_s: float
    end_s: float
    text: str

    @property
    def duration_s(self) -> float:
        return self.end_s - self.start_s


@dataclass
class ParseDiagnostics:
    warnings: list[ParseWarning]
    dropped_cue_count: int
    source_byte_count: int


def parse_timestamp(token: str) -> float:
    """Convert a WebVTT timestamp token to seconds.

    Accepts HH:MM:SS.mmm and MM:SS.mmm. Raises BadTimestamp on anything
    else, including out-of-range minutes or seconds.
    """
    m = _TIMESTAMP_RE.match(token)
    if not m:
        raise BadTimestamp(f"bad timestamp {token!r}")
    hours = int(m.group(1)) if m.group(1) else 0
    minutes = int(m.group(2))
    seconds = int(m.group(3))
    millis = int(m.group(4))
    return hours * 3600 + minutes * 60 + seconds + millis / 1000


def format_timestamp(seconds: float) -> str:
    """Render seconds as HH:MM:SS.mmm, rounding to millisecond precision."""
    total_ms = round(seconds * 1000)
    ms = total_ms % 1000
    total_s = total_ms // 1000
    h, rem = divmod(total_s, 3600)
    m, s = divmod(rem, 60)
    return f"{h:02d}:{m:02d}:{s:02d}.{ms:03d}"


def extract_speaker(
    payload_lines: list[str], previous_speaker: Optional[str]
) -> tuple[str, str, bool]:
    """Split a cue payload into (speaker_id, text, had_prefix).

    The speaker is the part of the first payload line before the first
    ": ", trimmed, if that is non-empty and at most 64 characters.
    Payloads with no usable prefix inherit previous_speaker, falling back
    to the "unknown" sentinel. had_prefix tells the caller whether the
    name came from the payload (for SPEAKER_SUSPECT checks) or was
    inherited.
    """
    first = payload_lines[0]
    idx = first.find(": ")
    if idx != -1:
        name = first[:idx].strip()
        if 0 < len(name) <= MAX_SPEAKER_CHARS:
            text_lines = [first[idx + 2:]] + payload_lines[1:]
            return name, "\n".join(text_lines), True
    speaker = previous_speaker if previous_speaker else UNKNOWN_SPEAKER
    return speaker, "\n".join(payload_lines), False


def _timing_line(line: str) -> Optional[tuple[float, float]]:
    """Parse a cue timing line, or return None if it is not one.

    Trailing cue settings after the end timestamp are ignored.
    """
    if "-->" not in line:
        return None
    left, _, right = line.partition("-->")
    start_tok = left.strip()
    right_parts = right.strip().split()
    if not right_parts:
        raise BadTimestamp(f"missing end timestamp in {line.strip()!r}")
    start = parse_timestamp(start_tok)
    end = parse_timestamp(right_parts[0])
    return start, end


def parse_vtt(
    data: bytes, known_speakers: Optional[list[str]] = None
) -> tuple[list[Utterance], ParseDiagnostics]:
    """Parse raw WebVTT bytes into a sorted, densely indexed utterance list.

    Malformed cues are dropped with a DROPPED_CUE warning. When
    known_speakers is given, payload-extracted names outside that roster
    get a SPEAKER_SUSPECT warning (colons inside speech can masquerade as
    speaker prefixes).

    Raises NotVtt if the input is not a UTF-8 WebVTT file, and
    EmptyTranscript if no well-formed cue survives.
    """
    warnings: list[ParseWarning] = []
    source_byte_count = len(data)

    if data[:2] in _UTF16_BOMS:
        raise NotVtt("UTF-16 byte order mark found; re-encode the file as UTF-8")
    if data.startswith(_UTF8_BOM):
        data = data[len(_UTF8_BOM):]
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        text = data.decode("utf-8", errors="replace")
        warnings.append(
            ParseWarning(0, ENCODING_REPLACEMENT, "invalid UTF-8 bytes replaced")
        )

    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    first_line = lines[0] if lines else ""
    if not (
        first_line == "WEBVTT"
        or first_line.startswith("WEBVTT ")
        or first_line.startswith("WEBVTT\t")
    ):
        raise NotVtt("first line is not WEBVTT")

    n = len(lines)
    i = 1
    # Header block: optional metadata lines up to the first blank line.
    while i < n and lines[i].strip() != "" and "-->" not in lines[i]:
        i += 1

    cues: list[tuple[float, float, str, str]] = []
    dropped = 0
    previous_speaker: Optional[str] = None

    def drop(line_no: int, reason: str) -> None:
        nonlocal dropped
        dropped += 1
        warnings.append(ParseWarning(line_no, DROPPED_CUE, reason))

    def skip_block(start: int) -> int:
        j = start
        while j < n and lines[j].strip() != "":
            j += 1
        return j

    while i < n:
        if lines[i].strip() == "":
            i += 1
            continue
        # Comment/styling blocks are legal WebVTT; skip without a warning.
        if "-->" not in lines[i] and lines[i].split(" ")[0] in ("NOTE", "STYLE", "REGION"):
            i = skip_block(i)
            continue

        if "-->" in lines[i]:
            timing_idx = i
        elif i + 1 < n and "-->" in lines[i + 1]:
            timing_idx = i + 1  # lines[i] is the cue identifier
        else:
            drop(i + 1, f"unrecognized block starting {lines[i][:40]!r}")
            i = skip_block(i)
            continue

        try:
            timing = _timing_line(lines[timing_idx])
        except BadTimestamp as exc:
            drop(timing_idx + 1, str(exc))
            i = skip_block(timing_idx)
            continue
        if timing is None:  # pragma: no cover - "-->" presence guarantees a parse attempt
            drop(timing_idx + 1, "malformed timing line")
            i = skip_block(timing_idx)
            continue
        start_s, end_s = timing
        if end_s <= start_s:
            drop(timing_idx + 1, f"non-positive duration ({start_s} --> {end_s})")
            i = skip_block(timing_idx)
            continue

        # Payload: lines up to the next blank line. A line that itself parses
        # as a timing line starts a new cue (tolerates missing separators).
        j = timing_idx + 1
        payload: list[str] = []
        while j < n and lines[j].strip() != "":
            if "-->" in lines[j]:
                try:
                    if _timing_line(lines[j]) is not None:
                        break
                except BadTimestamp:
                    pass
            payload.append(lines[j])
            j += 1
        if not payload:
            drop(timing_idx + 1, "cue has an empty payload")
            i = j
            continue

        speaker, cue_text, had_prefix = extract_speaker(payload, previous_speaker)
        if had_prefix and known_speakers is not None and speaker not in known_speakers:
            warnings.append(
                ParseWarning(
                    timing_idx + 2,
                    SPEAKER_SUSPECT,
                    f"speaker {speaker!r} not in the meeting roster",
                )
            )
        previous_speaker = speaker
        cues.append((start_s, end_s, speaker, cue_text))
        i = j

    diagnostics = ParseDiagnostics(
        warnings=warnings,
        dropped_cue_count=dropped,
        source_byte_count=source_byte_count,
    )
    if not cues:
        raise EmptyTranscript("no well-formed cues in input", diagnostics)

    ordered = sorted(cues, key=lambda c: (c[0], c[1]))
    utterances = [
        Utterance(index=k, speaker_id=c[2], start_s=c[0], end_s=c[1], text=c[3])
        for k, c in enumerate(ordered)
    ]
    return utterances, diagnostics


def serialize_vtt(utterances: list[Utterance]) -> str:
    """Render utterances back to canonical WebVTT.

    Re-parsing the output yields an identical utterance list (speaker
    prefixes are written explicitly, so inherited attribution survives).
    """
    blocks = ["WEBVTT"]
    for k, u in enumerate(utterances):
        text_lines = u.text.split("\n")
        body = [f"{u.speaker_id}: {text_lines[0]}"] + text_lines[1:]
        blocks.append(
            f"{k + 1}\n{format_timestamp(u.start_s)} --> {format_timestamp(u.end_s)}\n"
            + "\n".join(body)
        )
    return "\n\n".join(blocks) + "\n"
