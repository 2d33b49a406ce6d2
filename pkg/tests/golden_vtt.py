"""Golden expectations for the VTT fixture suite.

Expected utterances are written from a visual read of each fixture,
with timestamps spelled as the direct definition
hours*3600 + minutes*60 + seconds + millis/1000.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "vtt"


def ts(h, m, s, ms=0):
    return h * 3600 + m * 60 + s + ms / 1000


@dataclass(frozen=True)
class Golden:
    name: str
    # (speaker, start_s, end_s, text) in final (sorted, reindexed) order
    utterances: Optional[list] = None
    error: Optional[str] = None  # expected error code instead
    dropped: int = 0
    # (line, code) pairs, in order
    warnings: list = field(default_factory=list)

    @property
    def path(self) -> Path:
        return FIXTURE_DIR / self.name


CASES = [
    Golden(
        name="simple.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 5), "Bonjour tout le monde."),
            ("Bob", ts(0, 0, 5), ts(0, 0, 12, 500), "Hello everyone!"),
            ("Alice", ts(0, 0, 12, 500), ts(0, 0, 15), "On commence ?"),
        ],
    ),
    Golden(
        name="bom_crlf.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 2), "Top of the call."),
            ("Bob", ts(0, 0, 2), ts(0, 0, 5, 500), "Salut !"),
        ],
    ),
    Golden(
        name="no_identifiers.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 1, 500), "One."),
            ("Bob", ts(0, 0, 1, 500), ts(0, 0, 4), "Two."),
        ],
    ),
    Golden(
        name="inherit_speaker.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 3), "Je pense que..."),
            ("Alice", ts(0, 0, 3), ts(0, 0, 6), "et c'est tout."),
        ],
    ),
    Golden(
        name="unknown_speaker.vtt",
        utterances=[
            ("unknown", ts(0, 0, 0), ts(0, 0, 2), "Hello there."),
            ("Bob", ts(0, 0, 2), ts(0, 0, 4), "Hi."),
        ],
    ),
    Golden(
        name="corrupt_cue.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 4), "First segment."),
            ("Bob", ts(0, 0, 9), ts(0, 0, 12), "Good again."),
        ],
        dropped=1,
        warnings=[(8, "DROPPED_CUE")],
    ),
    Golden(
        name="mm_ss.vtt",
        utterances=[
            ("Alice", ts(0, 1, 30, 500), ts(0, 2, 15, 250), "Short clock format."),
            ("Bob", ts(0, 2, 15, 250), ts(0, 3, 0), "Still fine."),
        ],
    ),
    Golden(
        name="overlap.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 15), "I overlap Bob heavily."),
            ("Carol", ts(0, 0, 5), ts(0, 0, 8), "Quick interjection."),
            ("Bob", ts(0, 0, 10), ts(0, 0, 20), "I started later but appear first."),
        ],
    ),
    Golden(name="empty.vtt", error="NOT_VTT"),
    Golden(name="header_only.vtt", error="EMPTY_TRANSCRIPT"),
    Golden(
        name="titled_header.vtt",
        utterances=[("Alice", ts(0, 0, 0), ts(0, 0, 3), "Header had a title.")],
    ),
    Golden(
        name="cue_settings.vtt",
        utterances=[("Alice", ts(0, 0, 0), ts(0, 0, 4), "Settings after the timing.")],
    ),
    Golden(
        name="multiline_payload.vtt",
        utterances=[
            ("Alice", ts(0, 0, 0), ts(0, 0, 5),
             "This runs long\nso it wraps onto another line."),
        ],
    ),
    Golden(
        name="nonpositive_cue.vtt",
        utterances=[("Alice", ts(0, 0, 5), ts(0, 0, 8), "Real one.")],
        dropped=1,
        warnings=[(3, "DROPPED_CUE")],
    ),
    Golden(name="utf16.vtt", error="NOT_VTT"),
    Golden(
        name="empty_payload.vtt",
        utterances=[("Bob", ts(0, 0, 2), ts(0, 0, 3), "Present.")],
        dropped=1,
        warnings=[(3, "DROPPED_CUE")],
    ),
    Golden(
        name="note_blocks.vtt",
        utterances=[("Alice", ts(0, 0, 0), ts(0, 0, 3), "After the notes.")],
    ),
]
