class MonofiltError(Exception):
    """Base class for engine errors."""


class DimensionMismatchError(MonofiltError, ValueError):
    pass


class IdealError(MonofiltError, ValueError):
    """Raised when an operation receives the zero ideal, the unit ideal, or an
    ideal that is not m-primary where one is required."""


class InfiniteLengthError(MonofiltError, ValueError):
    pass


class ComputationLimitError(MonofiltError, RuntimeError):
    """A dense box or search would exceed the configured size limit."""


class ParseError(MonofiltError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
