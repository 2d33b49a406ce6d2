"""Per-meeting annotation metadata.

Language order and the optional changeover override arrive as manual
annotation (manifest row or JSON sidecar), never from the transcript
itself.
"""

from dataclasses import dataclass
from typing import Any, Mapping, Optional

from .errors import BadMeta

UNKNOWN_LANGUAGE = "unknown"


@dataclass(frozen=True)
class MeetingMeta:
    meeting_id: str
    group_id: str
    week_index: int = 1
    participants: Optional[tuple[str, ...]] = None
    first_half_language: str = UNKNOWN_LANGUAGE
    second_half_language: str = UNKNOWN_LANGUAGE
    recorded_duration_s: Optional[float] = None
    changeover_s: Optional[float] = None
    media_url: Optional[str] = None


def _get(record: Mapping[str, Any], key: str) -> Any:
    """Fetch a field, treating empty/whitespace strings as absent."""
    value = record.get(key)
    if value is None:
        return None
    if isinstance(value, str) and value.strip() == "":
        return None
    return value


def _as_int(value: Any, field: str) -> int:
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, str):
            return int(value.strip())
        if isinstance(value, int):
            return value
        if isinstance(value, float) and value.is_integer():
            return int(value)
        raise ValueError
    except ValueError:
        raise BadMeta(f"field {field!r} must be an integer, got {value!r}", field) from None


def _as_float(value: Any, field: str) -> float:
    try:
        if isinstance(value, bool):
            raise ValueError
        out = float(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError):
        raise BadMeta(f"field {field!r} must be a number, got {value!r}", field) from None
    if out != out or out in (float("inf"), float("-inf")):
        raise BadMeta(f"field {field!r} must be finite, got {value!r}", field)
    return out


def load_meta(record: Mapping[str, Any]) -> MeetingMeta:
    """Validate a manifest row or sidecar document into MeetingMeta.

    Only meeting_id is required. Defaults: group_id = meeting_id,
    week_index = 1, both languages "unknown", no changeover, no duration.
    Raises BadMeta naming the offending field.
    """
    if not isinstance(record, Mapping):
        raise BadMeta("metadata record must be a mapping", "")

    meeting_id = _get(record, "meeting_id")
    if meeting_id is None:
        raise BadMeta("missing required field 'meeting_id'", "meeting_id")
    meeting_id = str(meeting_id).strip()

    group_id = _get(record, "group_id")
    group_id = str(group_id).strip() if group_id is not None else meeting_id

    week_index = _get(record, "week_index")
    week_index = _as_int(week_index, "week_index") if week_index is not None else 1
    if week_index < 1:
        raise BadMeta(f"field 'week_index' must be positive, got {week_index}", "week_index")

    participants = _get(record, "participants")
    roster: Optional[tuple[str, ...]] = None
    if participants is not None:
        if isinstance(participants, str):
            names = [p.strip() for p in participants.split("|")]
        elif isinstance(participants, (list, tuple)):
            names = [str(p).strip() for p in participants]
        else:
            raise BadMeta("field 'participants' must be a list", "participants")
        roster = tuple(p for p in names if p)

    first = _get(record, "first_half_language")
    second = _get(record, "second_half_language")
    first = str(first).strip() if first is not None else UNKNOWN_LANGUAGE
    second = str(second).strip() if second is not None else UNKNOWN_LANGUAGE
    if first == second and first != UNKNOWN_LANGUAGE:
        raise BadMeta(
            f"first and second half languages must differ, both are {first!r}",
            "second_half_language",
        )

    duration = _get(record, "recorded_duration_s")
    recorded_duration_s = _as_float(duration, "recorded_duration_s") if duration is not None else None
    if recorded_duration_s is not None and recorded_duration_s <= 0:
        raise BadMeta("field 'recorded_duration_s' must be positive", "recorded_duration_s")

    changeover = _get(record, "changeover_s")
    changeover_s = _as_float(changeover, "changeover_s") if changeover is not None else None
    if changeover_s is not None:
        if changeover_s <= 0:
            raise BadMeta("field 'changeover_s' must be positive", "changeover_s")
        if recorded_duration_s is not None and changeover_s >= recorded_duration_s:
            raise BadMeta(
                f"changeover_s ({changeover_s}) must fall inside the recorded "
                f"duration ({recorded_duration_s})",
                "changeover_s",
            )

    media_url = _get(record, "media_url")
    media_url = str(media_url) if media_url is not None else None

    return MeetingMeta(
        meeting_id=meeting_id,
        group_id=group_id,
        week_index=week_index,
        participants=roster,
        first_half_language=first,
        second_half_language=second,
        recorded_duration_s=recorded_duration_s,
        changeover_s=changeover_s,
        media_url=media_url,
    )
