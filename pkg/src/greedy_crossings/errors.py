"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the CLI prints as
the prefix of its one-line failure message.
"""


class SpannerError(Exception):
    code = "E_GENERIC"


class InvalidParams(SpannerError, ValueError):
    code = "E_PARAMS"


class InvalidStretch(InvalidParams):
    code = "E_STRETCH"


class DuplicatePoints(SpannerError, ValueError):
    code = "E_DUPLICATE"


class DegenerateOverlap(SpannerError):
    """Two segments are collinear and share more than one point."""

    code = "E_OVERLAP"


class CoincidentCrossings(SpannerError):
    """Two distinct crossings along one edge are numerically indistinguishable."""

    code = "E_COINCIDENT"


class NotCrossing(SpannerError, ValueError):
    code = "E_NOT_CROSSING"


class UnknownVertex(SpannerError, KeyError):
    code = "E_VERTEX"


class UnknownEdge(SpannerError, KeyError):
    code = "E_EDGE"


class Disconnected(SpannerError):
    code = "E_DISCONNECTED"


class EmbeddingError(SpannerError):
    """The rotation system recovered from coordinates is not planar."""

    code = "E_EMBEDDING"


class SeparatorBoundExceeded(SpannerError):
    code = "E_SEPARATOR_BOUND"


class NoLongEdge(SpannerError):
    code = "E_NO_LONG_EDGE"


class ConstructionError(SpannerError):
    code = "E_CONSTRUCTION"


class ParseError(SpannerError, ValueError):
    code = "E_PARSE"

    def __init__(self, message: str, path: str = "", line: int = 0):
        self.path = path
        self.line = line
        where = f"{path}:{line}: " if line else (f"{path}: " if path else "")
        super().__init__(f"{where}{message}")


class IoError(SpannerError, OSError):
    code = "E_IO"


class VerificationFailed(SpannerError):
    code = "E_VERIFY"
