"""Exception hierarchy.

Every error raised on purpose by the library derives from ``ModcompError`` so
callers (the CLI in particular) can separate data problems from bugs.
"""


class ModcompError(Exception):
    """Base class for all library errors."""


class NonFinite(ModcompError, ValueError):
    pass


class AllZeroMatrix(ModcompError, ValueError):
    pass


class DimensionMismatch(ModcompError, ValueError):
    pass


class PoleEvaluation(ModcompError, ValueError):
    pass


class SeparationViolated(ModcompError, ValueError):
    """Diagonal entries tie or a rank-one weight vanishes, so roots are not strictly interlaced."""


class ConvergenceFailure(ModcompError, RuntimeError):
    pass


class DegenerateGraph(ModcompError, ValueError):
    """Total similarity mass 2m is (numerically) zero."""


class RankTooSmall(ModcompError, ValueError):
    pass


class ComponentCountTooLarge(ModcompError, ValueError):
    pass


class IndexOutOfRange(ModcompError, IndexError):
    pass


class TooFewPoints(ModcompError, ValueError):
    pass


class InvalidFlag(ModcompError, ValueError):
    pass


class ParseError(ModcompError, ValueError):
    """Malformed dataset file. ``line`` and ``column`` are 1-based, or None."""

    def __init__(self, message, line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.column = column
