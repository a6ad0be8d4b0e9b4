class CollargError(Exception):
    """Base class for all errors raised by collarg."""


class TheoryError(CollargError, ValueError):
    """Invalid universe or attack generators."""


class CapExceeded(CollargError):
    """An enumeration or compilation cap was exceeded."""


class NotNormalError(CollargError):
    """A Dung view was requested for a theory that is not affirmative and local."""


class FormatError(CollargError, ValueError):
    """Malformed theory or program text.

    ``line`` and ``column`` are 1-based; ``column`` may be ``None`` when the
    problem concerns the whole line.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NonGroundError(FormatError):
    """The program contains variables; only propositional programs are supported."""
