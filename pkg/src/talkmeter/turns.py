"""Turn reconstruction and half-meeting segmentation.

A turn is a maximal run of consecutive same-speaker utterances: with no
other speaker interleaved, the floor was never yielded, so internal
silences do not break a turn by default (gap_break_s opts into breaking).
Meetings are split into halves at a single changeover point; each turn
goes to the half holding the majority of its span.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyInput
from .meta import MeetingMeta, UNKNOWN_LANGUAGE
from .vtt import Utterance

WHOLE = "WHOLE"
FIRST_HALF = "FIRST_HALF"
SECOND_HALF = "SECOND_HALF"

DURATION_SPAN = "span"
DURATION_SUMMED = "summed"


@dataclass(frozen=True)
class Turn:
    """Maximal same-speaker run; the unit of the volatility series."""

    speaker_id: str
    start_s: float
    end_s: float
    members: tuple[Utterance, ...]

    @property
    def duration_s(self) -> float:
        """Span duration: floor-holding time from first start to last end."""
        return self.end_s - self.start_s

    @property
    def summed_duration_s(self) -> float:
        """Sum of member utterance durations (ignores internal silence)."""
        return sum(u.end_s - u.start_s for u in self.members)

    @property
    def utterance_indices(self) -> tuple[int, ...]:
        return tuple(u.index for u in self.members)

    def duration(self, mode: str = DURATION_SPAN) -> float:
        return self.duration_s if mode == DURATION_SPAN else self.summed_duration_s


@dataclass(frozen=True)
class Segment:
    """A view of the meeting: the whole or one half, with its turn list."""

    label: str
    language: str
    span_start_s: float
    span_end_s: float
    turns: tuple[Turn, ...]

    @property
    def span_minutes(self) -> float:
        return (self.span_end_s - self.span_start_s) / 60.0


def build_turns(
    utterances: list[Utterance], gap_break_s: Optional[float] = None
) -> list[Turn]:
    """Merge consecutive same-speaker utterances into turns.

    Turn start is the first member's start; turn end is the furthest
    member end (true span, robust to overlapping cues). When gap_break_s
    is set, a silence longer than it breaks the run even without a
    speaker change.
    """
    if not utterances:
        raise EmptyInput("no utterances to build turns from")

    turns: list[Turn] = []
    run: list[Utterance] = []
    run_end = 0.0

    def flush() -> None:
        if run:
            turns.append(
                Turn(
                    speaker_id=run[0].speaker_id,
                    start_s=run[0].start_s,
                    end_s=run_end,
                    members=tuple(run),
                )
            )

    for u in utterances:
        if run and (
            u.speaker_id != run[-1].speaker_id
            or (gap_break_s is not None and u.start_s - run_end > gap_break_s)
        ):
            flush()
            run = []
        if not run:
            run_end = u.end_s
        else:
            run_end = max(run_end, u.end_s)
        run.append(u)
    flush()
    return turns


def split_point(meta: MeetingMeta, utterances: list[Utterance]) -> float:
    """Changeover point: manual annotation wins, then half the recorded
    duration, then half the last utterance end."""
    if meta.changeover_s is not None:
        return meta.changeover_s
    if meta.recorded_duration_s is not None:
        return meta.recorded_duration_s / 2.0
    if not utterances:
        raise EmptyInput("cannot derive a split point without utterances")
    return max(u.end_s for u in utterances) / 2.0


def _assign_first(turn: Turn, split_s: float) -> bool:
    # Majority of the span decides; the midpoint test is equivalent and
    # makes the exact-tie -> first-half rule explicit.
    midpoint = (turn.start_s + turn.end_s) / 2.0
    return midpoint <= split_s


def split_halves(
    turns: list[Turn],
    split_s: float,
    first_language: str = UNKNOWN_LANGUAGE,
    second_language: str = UNKNOWN_LANGUAGE,
) -> tuple[Segment, Segment]:
    """Partition turns into FIRST_HALF / SECOND_HALF segments at split_s.

    Each turn lands in the half containing the majority of its span, ties
    to the first half. Either half may end up with zero turns; spans
    stay anchored to the data so translating every timestamp (and the
    split) by a constant shifts all boundaries by exactly that constant.
    """
    first_turns = tuple(t for t in turns if _assign_first(t, split_s))
    second_turns = tuple(t for t in turns if not _assign_first(t, split_s))

    if turns:
        origin = min(t.start_s for t in turns)
        t_max = max(t.end_s for t in turns)
    else:
        origin = split_s
        t_max = split_s

    first = Segment(
        label=FIRST_HALF,
        language=first_language,
        span_start_s=min(origin, split_s),
        span_end_s=split_s,
        turns=first_turns,
    )
    second = Segment(
        label=SECOND_HALF,
        language=second_language,
        span_start_s=split_s,
        span_end_s=max(t_max, split_s),
        turns=second_turns,
    )
    return first, second


def whole_segment(turns: list[Turn], language: str = UNKNOWN_LANGUAGE) -> Segment:
    """The WHOLE-meeting segment spanning all turns."""
    if not turns:
        raise EmptyInput("no turns")
    return Segment(
        label=WHOLE,
        language=language,
        span_start_s=min(t.start_s for t in turns),
        span_end_s=max(t.end_s for t in turns),
        turns=tuple(turns),
    )
