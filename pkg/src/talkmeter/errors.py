"""Exception types shared across the toolkit.

Every error carries a stable machine-readable ``code`` so the CLI and the
service can surface failures uniformly (``code=MESSAGE`` on stderr, JSON
error bodies over HTTP).
"""


class TalkmeterError(Exception):
    """Base class for all toolkit errors."""

    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class NotVtt(TalkmeterError):
    """Input is not a WebVTT file (bad header or unsupported encoding)."""

    code = "NOT_VTT"


class EmptyTranscript(TalkmeterError):
    """No well-formed cue survived parsing."""

    code = "EMPTY_TRANSCRIPT"

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class BadTimestamp(TalkmeterError):
    """Timestamp token does not match HH:MM:SS.mmm or MM:SS.mmm."""

    code = "BAD_TIMESTAMP"


class BadMeta(TalkmeterError):
    """Meeting metadata record is missing a field or ill-typed."""

    code = "BAD_META"

    def __init__(self, message: str, field: str = ""):
        super().__init__(message)
        self.field = field


class BadManifest(TalkmeterError):
    """Corpus manifest is malformed."""

    code = "BAD_MANIFEST"

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line


class NotFound(TalkmeterError):
    """A referenced input file does not exist."""

    code = "NOT_FOUND"


class TooShort(TalkmeterError):
    """Series has fewer than two points, so no returns exist."""

    code = "TOO_SHORT"


class NonpositiveDuration(TalkmeterError):
    """A duration in a log-return series is zero or negative."""

    code = "NONPOSITIVE_DURATION"


class EmptyInput(TalkmeterError):
    """Operation requires at least one utterance or turn."""

    code = "EMPTY_INPUT"
